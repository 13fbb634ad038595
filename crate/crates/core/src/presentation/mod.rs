//! Textual presentations of bijections of the integers and their validation.
//!
//! Two presentation families are understood beyond pointwise evaluation:
//!
//! * family A, `map { ... }`: eventually-translation maps with a finite
//!   rearranged window. Closed under inverse and composition; such trees
//!   normalize to a single canonical [`Translation`].
//! * family B, `paired_shift` / `paired_shift_inv`: the pullback of the
//!   coordinate shift `(i, k) -> (i, k + 1)` through the fixed pairing of
//!   [`crate::pairing`]. Closed under inverse.
//!
//! Anything that mixes the families (or composes paired shifts) validates to
//! an opaque form that can only be evaluated pointwise.

mod parser;
mod translation;

pub use parser::parse;
pub use translation::{validate_translation, Translation, TranslationSpec};

use crate::pairing::{pair, unpair};
use crate::{Error, Int};

/// The paired-shift presentation: conjugate of `(i, k) -> (i, k + direction)`
/// by the fixed pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairedShift {
    /// +1 or -1.
    pub direction: i8,
}

impl PairedShift {
    pub fn eval(&self, n: &Int) -> Int {
        let (i, k) = pair(n);
        unpair(&i, &(k + self.direction))
    }

    pub fn eval_inverse(&self, n: &Int) -> Int {
        let (i, k) = pair(n);
        unpair(&i, &(k - self.direction))
    }

    pub fn inverse(&self) -> PairedShift {
        PairedShift { direction: -self.direction }
    }
}

/// A parsed presentation, structurally faithful to the text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionExpr {
    Translation(TranslationSpec),
    Paired(PairedShift),
    Inverse(Box<BijectionExpr>),
    /// `Compose(f, g)` is the map `n -> f(g(n))`.
    Compose(Box<BijectionExpr>, Box<BijectionExpr>),
}

impl BijectionExpr {
    fn contains_paired(&self) -> bool {
        match self {
            BijectionExpr::Translation(_) => false,
            BijectionExpr::Paired(_) => true,
            BijectionExpr::Inverse(e) => e.contains_paired(),
            BijectionExpr::Compose(a, b) => a.contains_paired() || b.contains_paired(),
        }
    }

    /// `Some(direction)` when the tree is a paired shift under inversions only.
    fn as_pure_paired(&self) -> Option<i8> {
        match self {
            BijectionExpr::Paired(p) => Some(p.direction),
            BijectionExpr::Inverse(e) => e.as_pure_paired().map(|d| -d),
            _ => None,
        }
    }
}

/// What analyses a validated presentation supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capability {
    /// Orbit decomposition, re-ordering, coloring, conjugacy.
    FullAnalysis,
    /// Pointwise evaluation only.
    EvalOnly,
}

/// Expression tree with every atom individually validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpaqueTree(CompiledExpr);

#[derive(Debug, Clone, PartialEq, Eq)]
enum CompiledExpr {
    FamilyA(Translation),
    FamilyB(PairedShift),
    Inverse(Box<CompiledExpr>),
    Compose(Box<CompiledExpr>, Box<CompiledExpr>),
}

impl CompiledExpr {
    fn compile(expr: &BijectionExpr) -> Result<CompiledExpr, Error> {
        Ok(match expr {
            BijectionExpr::Translation(spec) => CompiledExpr::FamilyA(validate_translation(spec)?),
            BijectionExpr::Paired(p) => CompiledExpr::FamilyB(*p),
            BijectionExpr::Inverse(e) => CompiledExpr::Inverse(Box::new(Self::compile(e)?)),
            BijectionExpr::Compose(a, b) => CompiledExpr::Compose(
                Box::new(Self::compile(a)?),
                Box::new(Self::compile(b)?),
            ),
        })
    }

    fn eval(&self, n: &Int) -> Int {
        match self {
            CompiledExpr::FamilyA(t) => t.eval(n),
            CompiledExpr::FamilyB(p) => p.eval(n),
            CompiledExpr::Inverse(e) => e.eval_inverse(n),
            CompiledExpr::Compose(a, b) => a.eval(&b.eval(n)),
        }
    }

    fn eval_inverse(&self, n: &Int) -> Int {
        match self {
            CompiledExpr::FamilyA(t) => t.eval_inverse(n),
            CompiledExpr::FamilyB(p) => p.eval_inverse(n),
            CompiledExpr::Inverse(e) => e.eval(n),
            CompiledExpr::Compose(a, b) => b.eval_inverse(&a.eval_inverse(n)),
        }
    }

    fn fold_family_a(&self) -> Translation {
        match self {
            CompiledExpr::FamilyA(t) => t.clone(),
            CompiledExpr::FamilyB(_) => unreachable!("family B atom in a family A tree"),
            CompiledExpr::Inverse(e) => e.fold_family_a().inverse(),
            CompiledExpr::Compose(a, b) => a.fold_family_a().compose_after(&b.fold_family_a()),
        }
    }
}

/// Canonical form of a validated presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalForm {
    FamilyA(Translation),
    FamilyB(PairedShift),
    Opaque(OpaqueTree),
}

/// A presentation that provably defines a bijection of the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedBijection {
    capability: Capability,
    canonical: CanonicalForm,
}

impl ValidatedBijection {
    pub fn capability(&self) -> Capability {
        self.capability
    }

    pub fn canonical(&self) -> &CanonicalForm {
        &self.canonical
    }

    pub fn eval(&self, n: &Int) -> Int {
        match &self.canonical {
            CanonicalForm::FamilyA(t) => t.eval(n),
            CanonicalForm::FamilyB(p) => p.eval(n),
            CanonicalForm::Opaque(tree) => tree.0.eval(n),
        }
    }

    pub fn eval_inverse(&self, n: &Int) -> Int {
        match &self.canonical {
            CanonicalForm::FamilyA(t) => t.eval_inverse(n),
            CanonicalForm::FamilyB(p) => p.eval_inverse(n),
            CanonicalForm::Opaque(tree) => tree.0.eval_inverse(n),
        }
    }

    /// Iterated application: `f^k(n)` for any sign of `k`.
    pub fn eval_pow(&self, n: &Int, k: &Int) -> Int {
        use num_traits::Signed;
        let mut out = n.clone();
        let mut remaining = k.abs();
        let forward = !k.is_negative();
        while remaining > Int::from(0u32) {
            out = if forward { self.eval(&out) } else { self.eval_inverse(&out) };
            remaining -= 1u32;
        }
        out
    }

    /// One-line description of the canonical form.
    pub fn describe(&self) -> String {
        match &self.canonical {
            CanonicalForm::FamilyA(t) => format!("family A: {t}"),
            CanonicalForm::FamilyB(p) => {
                let dir = if p.direction == 1 { "+1" } else { "-1" };
                format!("family B: paired shift ({dir})")
            }
            CanonicalForm::Opaque(_) => "opaque composite (evaluation only)".to_string(),
        }
    }
}

/// Validates a parsed expression and normalizes it to canonical form.
///
/// Family A trees collapse to one [`Translation`]; a paired shift under
/// inversions collapses to a [`PairedShift`]; everything else keeps its tree
/// but is restricted to pointwise evaluation.
pub fn validate(expr: &BijectionExpr) -> Result<ValidatedBijection, Error> {
    if let Some(direction) = expr.as_pure_paired() {
        return Ok(ValidatedBijection {
            capability: Capability::FullAnalysis,
            canonical: CanonicalForm::FamilyB(PairedShift { direction }),
        });
    }
    let compiled = CompiledExpr::compile(expr)?;
    if expr.contains_paired() {
        Ok(ValidatedBijection {
            capability: Capability::EvalOnly,
            canonical: CanonicalForm::Opaque(OpaqueTree(compiled)),
        })
    } else {
        Ok(ValidatedBijection {
            capability: Capability::FullAnalysis,
            canonical: CanonicalForm::FamilyA(compiled.fold_family_a()),
        })
    }
}

/// Parses and validates in one step.
pub fn parse_and_validate(text: &str) -> Result<ValidatedBijection, Error> {
    validate(&parse(text)?)
}

/// Pointwise evaluation of the raw expression tree, validating atoms on the
/// fly. Used to cross-check normalization.
pub fn eval_expr(expr: &BijectionExpr, n: &Int) -> Result<Int, Error> {
    Ok(CompiledExpr::compile(expr)?.eval(n))
}

/// Pointwise inverse evaluation of the raw expression tree.
pub fn eval_expr_inverse(expr: &BijectionExpr, n: &Int) -> Result<Int, Error> {
    Ok(CompiledExpr::compile(expr)?.eval_inverse(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::BijectivityWitness;
    use crate::{int, Window};

    fn valid(text: &str) -> ValidatedBijection {
        parse_and_validate(text).expect(text)
    }

    #[test]
    fn patch_tail_collision_has_the_expected_witness() {
        let err = parse_and_validate("map{tail+=1; tail-=1; patch{0->0}}").unwrap_err();
        assert_eq!(
            err,
            Error::NotBijective(BijectivityWitness::Collision {
                x: int(-1),
                y: int(0),
                image: int(0),
            })
        );
    }

    #[test]
    fn swap_is_family_a_with_identity_tails() {
        let f = valid("map{tail+=0; tail-=0; patch{0->1, 1->0}}");
        assert_eq!(f.capability(), Capability::FullAnalysis);
        match f.canonical() {
            CanonicalForm::FamilyA(t) => {
                assert_eq!(t.displacement(), &int(0));
                assert_eq!(t.patch_window(), Some(Window::new(0, 1)));
            }
            other => panic!("expected family A, got {other:?}"),
        }
        assert_eq!(f.eval(&int(0)), int(1));
        assert_eq!(f.eval_inverse(&int(1)), int(0));
        assert_eq!(f.eval(&int(7)), int(7));
    }

    #[test]
    fn composition_of_translations_normalizes_to_their_sum() {
        let f = valid("compose(map{tail+=2;tail-=2;patch{}}, map{tail+=3;tail-=3;patch{}})");
        match f.canonical() {
            CanonicalForm::FamilyA(t) => {
                assert_eq!(t.displacement(), &int(5));
                assert_eq!(t.patch_window(), None);
            }
            other => panic!("expected family A, got {other:?}"),
        }
    }

    #[test]
    fn translation_eval_examples() {
        let f = valid("map{tail+=1;tail-=1;patch{}}");
        assert_eq!(f.eval(&int(5)), int(6));
    }

    #[test]
    fn paired_shift_moves_the_second_coordinate() {
        use crate::pairing::unpair;
        let f = valid("paired_shift");
        let n = unpair(&int(3), &int(7));
        assert_eq!(f.eval(&n), unpair(&int(3), &int(8)));
        assert_eq!(f.eval_inverse(&f.eval(&n)), n);
    }

    #[test]
    fn inverse_of_paired_shift_stays_family_b() {
        let f = valid("inverse(paired_shift)");
        match f.canonical() {
            CanonicalForm::FamilyB(p) => assert_eq!(p.direction, -1),
            other => panic!("expected family B, got {other:?}"),
        }
        let g = valid("inverse(inverse(paired_shift))");
        match g.canonical() {
            CanonicalForm::FamilyB(p) => assert_eq!(p.direction, 1),
            other => panic!("expected family B, got {other:?}"),
        }
    }

    #[test]
    fn mixed_trees_are_opaque_and_eval_only() {
        let f = valid("compose(paired_shift, map{tail+=1;tail-=1;patch{}})");
        assert_eq!(f.capability(), Capability::EvalOnly);
        assert!(matches!(f.canonical(), CanonicalForm::Opaque(_)));
        // Pointwise evaluation still works and round-trips.
        for n in -40..40 {
            let n = int(n);
            assert_eq!(f.eval_inverse(&f.eval(&n)), n);
        }
    }

    #[test]
    fn composed_paired_shifts_are_opaque() {
        let f = valid("compose(paired_shift, paired_shift)");
        assert_eq!(f.capability(), Capability::EvalOnly);
        let g = valid("compose(paired_shift, paired_shift_inv)");
        assert_eq!(g.capability(), Capability::EvalOnly);
        for n in -20..20 {
            let n = int(n);
            assert_eq!(g.eval(&n), n, "shift composed with its inverse acts as identity");
        }
    }

    #[test]
    fn invalid_atom_inside_a_tree_is_rejected() {
        let err = parse_and_validate("compose(paired_shift, map{tail+=1;tail-=2;patch{}})");
        assert!(matches!(err, Err(Error::NotBijective(_))));
    }

    #[test]
    fn canonical_eval_matches_tree_eval() {
        let text = "inverse(compose(map{tail+=1;tail-=1;patch{0->2,1->1,2->3}}, map{tail+=-2;tail-=-2;patch{}}))";
        let expr = parse(text).unwrap();
        let f = validate(&expr).unwrap();
        for n in -50..50 {
            let n = int(n);
            assert_eq!(f.eval(&n), eval_expr(&expr, &n).unwrap());
            assert_eq!(f.eval_inverse(&n), eval_expr_inverse(&expr, &n).unwrap());
        }
    }

    #[test]
    fn eval_pow_walks_both_directions() {
        let f = valid("map{tail+=3;tail-=3;patch{}}");
        assert_eq!(f.eval_pow(&int(1), &int(4)), int(13));
        assert_eq!(f.eval_pow(&int(1), &int(-4)), int(-11));
        assert_eq!(f.eval_pow(&int(1), &int(0)), int(1));
    }
}
