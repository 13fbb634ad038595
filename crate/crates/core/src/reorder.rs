//! The constructed total order under which a periodic-point-free bijection
//! becomes strictly increasing, and the ordered-group shift normal form.
//!
//! Every point gets a [`Label`] `(block, step, rank)`: which cover block its
//! orbit family belongs to, which translate of the block it sits in, and the
//! position of its pulled-back anchor inside the block. Labels compare
//! lexicographically; applying the map increments the step and fixes the
//! other two coordinates, so the order makes the map strictly increasing by
//! construction and the verifier can confirm it exhaustively on any window.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer as _;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::orbit::{self, Analyzer, Coords, CoverFamily, CoverSlot, LineCount};
use crate::pairing::{pair, unpair};
use crate::presentation::{CanonicalForm, PairedShift, ValidatedBijection};
use crate::report::{CheckSummary, VerificationReport};
use crate::{Error, Int, Window};

/// Position of a point in the constructed order; lexicographic comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Label {
    /// Cover block (orbit index for the canonical singleton cover).
    pub block: Int,
    /// Signed translate exponent within the block.
    pub step: Int,
    /// Rank of the pulled-back point inside its block under the natural
    /// integer order; zero for singleton blocks.
    pub rank: usize,
}

#[derive(Debug, Clone)]
enum LabelScheme {
    /// Singleton blocks, one per orbit representative.
    Canonical,
    /// A validated custom cover, indexed by orbit.
    Cover(Arc<HashMap<Int, CoverSlot>>),
}

/// A computable total order on the integers.
#[derive(Debug, Clone)]
pub struct OrderHandle {
    analyzer: Arc<Analyzer>,
    scheme: LabelScheme,
}

impl OrderHandle {
    pub fn label(&self, x: &Int) -> Label {
        let coords = self
            .analyzer
            .coords(x)
            .expect("iteration budget exceeded while labeling (bug)");
        let Coords::Line { key, step } = coords else {
            unreachable!("order handles exist only for periodic-point-free maps");
        };
        match &self.scheme {
            LabelScheme::Canonical => Label { block: key, step, rank: 0 },
            LabelScheme::Cover(slots) => {
                let slot = slots.get(&key).expect("validated cover indexes every orbit");
                Label {
                    block: Int::from(slot.set_index as u64),
                    step: step - &slot.base_step,
                    rank: slot.rank,
                }
            }
        }
    }

    pub fn compare(&self, x: &Int, y: &Int) -> Ordering {
        self.label(x).cmp(&self.label(y))
    }
}

/// Builds the order over the canonical cover.
pub fn build_order(f: &ValidatedBijection) -> Result<OrderHandle, Error> {
    let analyzer = Analyzer::build(f)?;
    if analyzer.has_periodic_points() {
        return Err(Error::PeriodicPointFound { cycle: analyzer.sample_cycle() });
    }
    Ok(OrderHandle { analyzer: Arc::new(analyzer), scheme: LabelScheme::Canonical })
}

/// Builds the order over a caller-supplied cover after checking the three
/// cover hypotheses exactly.
pub fn build_order_from_cover(
    f: &ValidatedBijection,
    cover: &CoverFamily,
) -> Result<OrderHandle, Error> {
    let analyzer = Analyzer::build(f)?;
    if analyzer.has_periodic_points() {
        return Err(Error::PeriodicPointFound { cycle: analyzer.sample_cycle() });
    }
    let slots = orbit::index_cover(&analyzer, cover)?;
    Ok(OrderHandle { analyzer: Arc::new(analyzer), scheme: LabelScheme::Cover(Arc::new(slots)) })
}

/// Free-function form of [`OrderHandle::compare`].
pub fn compare(handle: &OrderHandle, x: &Int, y: &Int) -> Ordering {
    handle.compare(x, y)
}

/// The relabeling of the carrier as `I x Z` under which the map becomes the
/// shift by `(0, 1)`, together with the component-wise group law.
#[derive(Debug, Clone)]
pub struct NormalForm {
    f: ValidatedBijection,
    analyzer: Arc<Analyzer>,
}

pub fn normal_form(f: &ValidatedBijection) -> Result<NormalForm, Error> {
    let analyzer = Analyzer::build(f)?;
    if analyzer.has_periodic_points() {
        return Err(Error::PeriodicPointFound { cycle: analyzer.sample_cycle() });
    }
    Ok(NormalForm { f: f.clone(), analyzer: Arc::new(analyzer) })
}

impl NormalForm {
    /// Number of classes in the first coordinate.
    pub fn class_count(&self) -> LineCount {
        self.analyzer.line_count()
    }

    /// The relabeling: `coords(f^m(rep_i)) = (i, m)`.
    ///
    /// For the paired shift the first coordinate is the integer orbit index
    /// of the pairing itself, so for direction +1 this is exactly `pair`.
    pub fn coords(&self, x: &Int) -> (Int, Int) {
        if let CanonicalForm::FamilyB(p) = self.f.canonical() {
            let (i, k) = pair(x);
            let step = if p.direction >= 0 { k } else { -k };
            return (i, step);
        }
        let coords = self
            .analyzer
            .coords(x)
            .expect("iteration budget exceeded while relabeling (bug)");
        let Coords::Line { key, step } = coords else {
            unreachable!("normal forms exist only for periodic-point-free maps");
        };
        (key, step)
    }

    /// Inverse of [`Self::coords`]: reconstructs the carrier point by walking
    /// the map from the class representative.
    pub fn point(&self, class: &Int, step: &Int) -> Int {
        match self.f.canonical() {
            CanonicalForm::FamilyB(PairedShift { direction }) => {
                let k = if *direction >= 0 { step.clone() } else { -step };
                unpair(class, &k)
            }
            _ => {
                let rep = self
                    .analyzer
                    .line_representative(class)
                    .expect("class index out of range");
                self.f.eval_pow(&rep, step)
            }
        }
    }

    /// Component-wise group law; the first coordinate wraps modulo the class
    /// count when it is finite.
    pub fn add(&self, a: &(Int, Int), b: &(Int, Int)) -> (Int, Int) {
        let first = &a.0 + &b.0;
        let first = match self.class_count() {
            LineCount::Finite(k) => first.mod_floor(&Int::from(k as u64)),
            LineCount::CountablyInfinite => first,
        };
        (first, &a.1 + &b.1)
    }
}

/// Free-function form of [`NormalForm::add`].
pub fn group_add(nf: &NormalForm, a: &(Int, Int), b: &(Int, Int)) -> (Int, Int) {
    nf.add(a, b)
}

/// Verifies the handle's order on a window: totality, antisymmetry, sampled
/// transitivity, and strict monotonicity. Labels are computed once per point.
pub fn verify_order(
    f: &ValidatedBijection,
    handle: &OrderHandle,
    window: &Window,
    triple_samples: usize,
) -> VerificationReport {
    let points = window.points();
    let labels: Vec<Label> = points.iter().map(|x| handle.label(x)).collect();
    let image_labels: Vec<Label> = points.iter().map(|x| handle.label(&f.eval(x))).collect();
    verify_order_tables(&points, &labels, &image_labels, triple_samples, |x, y| {
        handle.compare(x, y)
    })
}

/// Same checks driven through an arbitrary comparator, for fault-injection
/// fixtures and cross-checks. Slower: the comparator runs per query.
pub fn verify_order_with<C>(
    f: &ValidatedBijection,
    cmp: C,
    window: &Window,
    triple_samples: usize,
) -> VerificationReport
where
    C: Fn(&Int, &Int) -> Ordering,
{
    let points = window.points();
    let n = points.len();
    let mut report = VerificationReport::new("order");

    let mut totality = CheckSummary::new("totality");
    for x in &points {
        totality.case();
        if cmp(x, x) != Ordering::Equal {
            totality.violation(vec![x.clone()], format!("compare({x}, {x}) is not Equal"));
        }
    }
    report.push(totality);

    let mut antisymmetry = CheckSummary::new("antisymmetry");
    let mut monotonicity = CheckSummary::new("monotonicity");
    for i in 0..n {
        let fx = f.eval(&points[i]);
        for j in (i + 1)..n {
            let (x, y) = (&points[i], &points[j]);
            antisymmetry.case();
            let c = cmp(x, y);
            if c == Ordering::Equal || cmp(y, x) != c.reverse() {
                antisymmetry.violation(
                    vec![x.clone(), y.clone()],
                    format!("compare({x}, {y}) and compare({y}, {x}) are inconsistent"),
                );
            }
            monotonicity.case();
            let fy = f.eval(y);
            if cmp(&fx, &fy) != c {
                monotonicity.violation(
                    vec![x.clone(), y.clone()],
                    format!("order of ({x}, {y}) not preserved by the map"),
                );
            }
        }
    }
    report.push(antisymmetry);

    let mut transitivity = CheckSummary::new("transitivity");
    let mut rng = ChaCha8Rng::seed_from_u64(0x51C3);
    for _ in 0..triple_samples {
        let (a, b, c) =
            (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
        transitivity.case();
        let (x, y, z) = (&points[a], &points[b], &points[c]);
        if cmp(x, y) == Ordering::Less
            && cmp(y, z) == Ordering::Less
            && cmp(x, z) != Ordering::Less
        {
            transitivity.violation(
                vec![x.clone(), y.clone(), z.clone()],
                format!("{x} < {y} < {z} but not {x} < {z}"),
            );
        }
    }
    report.push(transitivity);
    report.push(monotonicity);
    report
}

fn verify_order_tables<C>(
    points: &[Int],
    labels: &[Label],
    image_labels: &[Label],
    triple_samples: usize,
    direct_cmp: C,
) -> VerificationReport
where
    C: Fn(&Int, &Int) -> Ordering,
{
    let n = points.len();
    let mut report = VerificationReport::new("order");

    // Totality: the comparator itself answers Equal on the diagonal.
    let mut totality = CheckSummary::new("totality");
    for x in points {
        totality.case();
        if direct_cmp(x, x) != Ordering::Equal {
            totality.violation(vec![x.clone()], format!("compare({x}, {x}) is not Equal"));
        }
    }
    report.push(totality);

    let mut antisymmetry = CheckSummary::new("antisymmetry");
    let mut monotonicity = CheckSummary::new("monotonicity");
    for i in 0..n {
        for j in (i + 1)..n {
            antisymmetry.case();
            let c = labels[i].cmp(&labels[j]);
            if c == Ordering::Equal || labels[j].cmp(&labels[i]) != c.reverse() {
                antisymmetry.violation(
                    vec![points[i].clone(), points[j].clone()],
                    format!(
                        "labels of {} and {} do not order antisymmetrically",
                        points[i], points[j]
                    ),
                );
            }
            monotonicity.case();
            if image_labels[i].cmp(&image_labels[j]) != c {
                monotonicity.violation(
                    vec![points[i].clone(), points[j].clone()],
                    format!("order of ({}, {}) not preserved by the map", points[i], points[j]),
                );
            }
        }
    }
    report.push(antisymmetry);

    let mut transitivity = CheckSummary::new("transitivity");
    let mut rng = ChaCha8Rng::seed_from_u64(0x07d37);
    for _ in 0..triple_samples {
        let (a, b, c) =
            (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
        transitivity.case();
        if labels[a] < labels[b] && labels[b] < labels[c] && labels[a] >= labels[c] {
            transitivity.violation(
                vec![points[a].clone(), points[b].clone(), points[c].clone()],
                format!(
                    "{} < {} < {} but not {} < {}",
                    points[a], points[b], points[c], points[a], points[c]
                ),
            );
        }
    }
    report.push(transitivity);
    report.push(monotonicity);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::CoverFamily;
    use crate::presentation::parse_and_validate;
    use crate::{int, Error};
    use std::collections::BTreeSet;

    fn f(text: &str) -> ValidatedBijection {
        parse_and_validate(text).expect(text)
    }

    fn translation(k: i64) -> ValidatedBijection {
        f(&format!("map{{tail+={k};tail-={k};patch{{}}}}"))
    }

    fn label(block: i64, step: i64, rank: usize) -> Label {
        Label { block: int(block), step: int(step), rank }
    }

    #[test]
    fn translation_by_one_recovers_the_natural_order() {
        let t1 = translation(1);
        let h = build_order(&t1).unwrap();
        for x in -20..20 {
            assert_eq!(h.label(&int(x)), label(0, x, 0));
        }
        assert_eq!(h.compare(&int(3), &int(5)), Ordering::Less);
        assert_eq!(h.compare(&int(5), &int(5)), Ordering::Equal);
    }

    #[test]
    fn translation_by_two_orders_blocks_first() {
        let h = build_order(&translation(2)).unwrap();
        assert_eq!(h.label(&int(4)), label(0, 2, 0));
        assert_eq!(h.label(&int(-3)), label(1, -2, 0));
        assert_eq!(h.compare(&int(4), &int(-3)), Ordering::Less);
    }

    #[test]
    fn periodic_maps_are_rejected() {
        let swap = f("map{tail+=0;tail-=0;patch{0->1,1->0}}");
        assert_eq!(
            build_order(&swap).unwrap_err(),
            Error::PeriodicPointFound { cycle: vec![int(0), int(1)] }
        );
        assert!(matches!(normal_form(&swap), Err(Error::PeriodicPointFound { .. })));
    }

    #[test]
    fn cover_with_shared_orbit_is_rejected() {
        let t1 = translation(1);
        let cover = CoverFamily { sets: vec![BTreeSet::from([int(0), int(1)])] };
        assert!(matches!(
            build_order_from_cover(&t1, &cover),
            Err(Error::CoverInvalid { .. })
        ));
    }

    #[test]
    fn two_point_cover_labels_with_ranks() {
        let t2 = translation(2);
        let cover = CoverFamily { sets: vec![BTreeSet::from([int(0), int(1)])] };
        let h = build_order_from_cover(&t2, &cover).unwrap();
        assert_eq!(h.label(&int(1)), label(0, 0, 1));
        assert_eq!(h.label(&int(0)), label(0, 0, 0));
        assert_eq!(h.label(&int(5)), label(0, 2, 1));
        let report = verify_order(&t2, &h, &Window::new(-60, 60), 5_000);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn canonical_cover_handle_matches_build_order() {
        let t1 = translation(1);
        let canonical = orbit::canonical_cover(&t1).unwrap();
        let via_cover = build_order_from_cover(&t1, &canonical).unwrap();
        let direct = build_order(&t1).unwrap();
        for x in -30..30 {
            for y in -30..30 {
                assert_eq!(
                    via_cover.compare(&int(x), &int(y)),
                    direct.compare(&int(x), &int(y))
                );
            }
        }
    }

    #[test]
    fn verify_order_passes_on_translations() {
        for k in [1i64, 2, -3] {
            let t = translation(k);
            let h = build_order(&t).unwrap();
            let report = verify_order(&t, &h, &Window::new(-100, 100), 20_000);
            assert!(report.passed(), "translation {k}: {report:?}");
        }
    }

    #[test]
    fn corrupted_comparator_fails_with_witness() {
        let t1 = translation(1);
        let h = build_order(&t1).unwrap();
        // Swap the labels of 0 and 5.
        let cmp = |x: &Int, y: &Int| {
            let twist = |v: &Int| {
                if *v == int(0) {
                    int(5)
                } else if *v == int(5) {
                    int(0)
                } else {
                    v.clone()
                }
            };
            h.compare(&twist(x), &twist(y))
        };
        let report = verify_order_with(&t1, cmp, &Window::new(-10, 10), 2_000);
        assert!(!report.passed());
        assert!(report.first_violation().is_some());
    }

    #[test]
    fn normal_form_for_translation_by_two() {
        let t2 = translation(2);
        let nf = normal_form(&t2).unwrap();
        assert_eq!(nf.class_count(), LineCount::Finite(2));
        assert_eq!(nf.coords(&int(4)), (int(0), int(2)));
        assert_eq!(nf.coords(&int(-3)), (int(1), int(-2)));
        let shifted = nf.add(&nf.coords(&int(4)), &(int(0), int(1)));
        assert_eq!(shifted, nf.coords(&t2.eval(&int(4))));
        assert_eq!(shifted, (int(0), int(3)));
    }

    #[test]
    fn normal_form_for_translation_by_one_is_graph_of_identity() {
        let t1 = translation(1);
        let nf = normal_form(&t1).unwrap();
        for x in -10..10 {
            assert_eq!(nf.coords(&int(x)), (int(0), int(x)));
        }
    }

    #[test]
    fn normal_form_of_paired_shift_is_the_pairing() {
        let ps = f("paired_shift");
        let nf = normal_form(&ps).unwrap();
        assert_eq!(nf.class_count(), LineCount::CountablyInfinite);
        for x in -200..200 {
            let x = int(x);
            assert_eq!(nf.coords(&x), pair(&x));
            let shifted = nf.add(&nf.coords(&x), &(int(0), int(1)));
            assert_eq!(shifted, nf.coords(&ps.eval(&x)));
        }
    }

    #[test]
    fn group_law_examples() {
        let t2 = translation(2);
        let nf = normal_form(&t2).unwrap();
        assert_eq!(nf.add(&(int(1), int(5)), &(int(1), int(-2))), (int(0), int(3)));
        assert_eq!(nf.add(&(int(1), int(7)), &(int(0), int(0))), (int(1), int(7)));

        let ps = f("paired_shift");
        let nf = normal_form(&ps).unwrap();
        assert_eq!(nf.add(&(int(3), int(1)), &(int(-3), int(-1))), (int(0), int(0)));
    }

    #[test]
    fn normal_form_round_trips() {
        for text in [
            "map{tail+=2;tail-=2;patch{}}",
            "map{tail+=1;tail-=1;patch{0->2,1->3,2->1}}",
            "paired_shift",
            "paired_shift_inv",
        ] {
            let m = f(text);
            let nf = normal_form(&m).unwrap();
            for x in -60..60 {
                let x = int(x);
                let (i, s) = nf.coords(&x);
                assert_eq!(nf.point(&i, &s), x, "round trip failed for {text} at {x}");
            }
        }
    }

    #[test]
    fn pulled_back_lexicographic_order_matches_compare() {
        for text in ["map{tail+=2;tail-=2;patch{}}", "map{tail+=1;tail-=1;patch{0->2,1->3,2->1}}"] {
            let m = f(text);
            let h = build_order(&m).unwrap();
            let nf = normal_form(&m).unwrap();
            for x in -40..40 {
                for y in -40..40 {
                    let (x, y) = (int(x), int(y));
                    assert_eq!(
                        nf.coords(&x).cmp(&nf.coords(&y)),
                        h.compare(&x, &y),
                        "pullback order disagrees at ({x}, {y}) for {text}"
                    );
                }
            }
        }
    }
}
