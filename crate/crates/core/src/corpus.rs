//! Seeded generators of random presentations, shared by property tests and
//! verification sweeps. Everything is deterministic given the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use crate::presentation::{parse_and_validate, BijectionExpr, TranslationSpec, ValidatedBijection};
use crate::{int, orbit, Int};

/// Shape of the random family-A presentations.
#[derive(Debug, Clone)]
pub struct TranslationParams {
    /// Largest patch window size.
    pub max_patch: usize,
    /// Displacements are drawn from `[-max_shift, max_shift]`.
    pub max_shift: i64,
    /// Patch windows start within `[-span_center, span_center]`.
    pub span_center: i64,
    /// Whether displacement zero (identity tails) may be drawn.
    pub allow_zero_shift: bool,
}

impl Default for TranslationParams {
    fn default() -> Self {
        TranslationParams { max_patch: 8, max_shift: 5, span_center: 24, allow_zero_shift: false }
    }
}

/// A random valid family-A spec: a displacement plus a random rearrangement
/// of a window onto its translate.
pub fn random_translation_spec(rng: &mut impl Rng, params: &TranslationParams) -> TranslationSpec {
    let shift = loop {
        let s = rng.random_range(-params.max_shift..=params.max_shift);
        if s != 0 || params.allow_zero_shift {
            break s;
        }
    };
    let patch_len = rng.random_range(0..=params.max_patch);
    let mut patch = Vec::with_capacity(patch_len);
    if patch_len > 0 {
        let lo = rng.random_range(-params.span_center..=params.span_center);
        let mut perm: Vec<usize> = (0..patch_len).collect();
        for i in (1..patch_len).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        for (i, &p) in perm.iter().enumerate() {
            patch.push((int(lo + i as i64), int(lo + shift + p as i64)));
        }
    }
    TranslationSpec { tail_up: int(shift), tail_down: int(shift), patch }
}

/// Renders a spec back to DSL text.
pub fn spec_text(spec: &TranslationSpec) -> String {
    let entries: Vec<String> =
        spec.patch.iter().map(|(k, v)| format!("{k}->{v}")).collect();
    format!(
        "map{{tail+={};tail-={};patch{{{}}}}}",
        spec.tail_up,
        spec.tail_down,
        entries.join(",")
    )
}

/// DSL text of a random valid family-A presentation.
pub fn random_translation_text(rng: &mut impl Rng, params: &TranslationParams) -> String {
    spec_text(&random_translation_spec(rng, params))
}

/// A random expression tree over family-A atoms, for normalization checks.
pub fn random_translation_tree(
    rng: &mut impl Rng,
    params: &TranslationParams,
    max_depth: usize,
) -> BijectionExpr {
    if max_depth == 0 || rng.random_bool(0.4) {
        BijectionExpr::Translation(random_translation_spec(rng, params))
    } else if rng.random_bool(0.5) {
        BijectionExpr::Inverse(Box::new(random_translation_tree(rng, params, max_depth - 1)))
    } else {
        BijectionExpr::Compose(
            Box::new(random_translation_tree(rng, params, max_depth - 1)),
            Box::new(random_translation_tree(rng, params, max_depth - 1)),
        )
    }
}

/// A random valid family-A bijection.
pub fn random_translation(rng: &mut impl Rng, params: &TranslationParams) -> ValidatedBijection {
    let text = random_translation_text(rng, params);
    parse_and_validate(&text).expect("generated presentation must validate")
}

/// A random valid family-A bijection without periodic points, by rejection.
pub fn random_periodic_point_free(
    rng: &mut impl Rng,
    params: &TranslationParams,
) -> ValidatedBijection {
    assert!(!params.allow_zero_shift, "identity tails always have periodic points");
    loop {
        let f = random_translation(rng, params);
        if orbit::is_periodic_point_free(&f).expect("family A supports analysis") {
            return f;
        }
    }
}

/// Deterministic corpus of periodic-point-free presentations.
pub fn corpus_periodic_point_free(seed: u64, count: usize) -> Vec<ValidatedBijection> {
    let params = TranslationParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_periodic_point_free(&mut rng, &params)).collect()
}

/// Deterministic corpus that may include cycles and identity tails.
pub fn corpus_mixed(seed: u64, count: usize) -> Vec<ValidatedBijection> {
    let params = TranslationParams { allow_zero_shift: true, ..TranslationParams::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_translation(&mut rng, &params)).collect()
}

/// The paired shift.
pub fn paired_shift() -> ValidatedBijection {
    parse_and_validate("paired_shift").expect("paired_shift validates")
}

/// A random finite set of integers within `[-span, span]`.
pub fn random_point_set(rng: &mut impl Rng, max_size: usize, span: i64) -> BTreeSet<Int> {
    let size = rng.random_range(0..=max_size);
    (0..size).map(|_| int(rng.random_range(-span..=span))).collect()
}

/// DSL text of an arbitrary raw `map { ... }` spec, frequently invalid:
/// independent tails and unconstrained patch pairs. Exercises the validator
/// against the brute-force bijectivity oracle.
pub fn random_raw_map_text(rng: &mut impl Rng) -> String {
    let tail_up = rng.random_range(-4..=4i64);
    let tail_down = if rng.random_bool(0.4) { tail_up } else { rng.random_range(-4..=4i64) };
    let len = rng.random_range(0..=5usize);
    let entries: Vec<String> = (0..len)
        .map(|_| {
            format!("{}->{}", rng.random_range(-6..=6i64), rng.random_range(-10..=10i64))
        })
        .collect();
    format!("map{{tail+={tail_up};tail-={tail_down};patch{{{}}}}}", entries.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_translations_always_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let params = TranslationParams { allow_zero_shift: true, ..TranslationParams::default() };
        for _ in 0..200 {
            let text = random_translation_text(&mut rng, &params);
            parse_and_validate(&text).unwrap_or_else(|e| panic!("{text} invalid: {e}"));
        }
    }

    #[test]
    fn corpora_are_deterministic() {
        let a = corpus_periodic_point_free(7, 5);
        let b = corpus_periodic_point_free(7, 5);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|f| orbit::is_periodic_point_free(f).unwrap()));
    }
}
