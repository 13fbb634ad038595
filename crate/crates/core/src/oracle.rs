//! Brute-force reference implementations: slow, obvious, and independent of
//! the symbolic engine. Every unbounded claim the engine makes is checked
//! here at desk scale by direct evaluation within an explicit bound.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::presentation::ValidatedBijection;
use crate::report::{CheckSummary, VerificationReport};
use crate::{Int, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Cycle,
    LineFragment,
}

/// One orbit piece restricted to the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    pub kind: ClassKind,
    pub points: BTreeSet<Int>,
}

/// A partition of the window into orbit pieces found by naive iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowPartition {
    pub window: Window,
    pub classes: Vec<OrbitClass>,
}

/// Iteration region: generously larger than the window so that any two
/// window points connected by the map are connected inside it.
fn margin_bound(window: &Window) -> Int {
    let reach = window.lo().abs().max(window.hi().abs());
    reach * 20u32 + 256u32
}

/// Decomposes the window into orbit fragments by visited-set iteration,
/// bounded to a safety margin around the window. Works for any validated
/// presentation, including opaque ones, because it only evaluates the map.
pub fn brute_orbits(f: &ValidatedBijection, window: &Window) -> WindowPartition {
    let bound = margin_bound(window);
    let in_margin = |p: &Int| p.abs() <= bound;
    let mut assigned: HashSet<Int> = HashSet::new();
    let mut classes: Vec<OrbitClass> = Vec::new();

    for start in window.iter() {
        if assigned.contains(&start) {
            continue;
        }
        let mut trace: HashSet<Int> = HashSet::from([start.clone()]);
        let mut kind = ClassKind::LineFragment;
        let mut cur = start.clone();
        loop {
            let next = f.eval(&cur);
            if !in_margin(&next) {
                break;
            }
            if trace.contains(&next) {
                kind = ClassKind::Cycle;
                break;
            }
            trace.insert(next.clone());
            cur = next;
        }
        if kind == ClassKind::LineFragment {
            let mut cur = start.clone();
            loop {
                let prev = f.eval_inverse(&cur);
                if !in_margin(&prev) || trace.contains(&prev) {
                    break;
                }
                trace.insert(prev.clone());
                cur = prev;
            }
        }
        let points: BTreeSet<Int> =
            trace.iter().filter(|p| window.contains(p)).cloned().collect();
        for p in &trace {
            assigned.insert(p.clone());
        }
        classes.push(OrbitClass { kind, points });
    }
    classes.sort_by(|a, b| a.points.first().cmp(&b.points.first()));
    WindowPartition { window: window.clone(), classes }
}

/// Exhaustive pair checks plus triple checks for an arbitrary comparator:
/// reflexivity, antisymmetry, transitivity. Every triple is checked when the
/// window has at most 60 points; otherwise `triple_samples` random triples.
pub fn brute_check_total_order<C>(
    cmp: C,
    window: &Window,
    triple_samples: usize,
) -> VerificationReport
where
    C: Fn(&Int, &Int) -> Ordering,
{
    let points = window.points();
    let n = points.len();
    let mut report = VerificationReport::new("total-order");

    let mut reflexivity = CheckSummary::new("reflexivity");
    for x in &points {
        reflexivity.case();
        if cmp(x, x) != Ordering::Equal {
            reflexivity.violation(vec![x.clone()], format!("compare({x}, {x}) is not Equal"));
        }
    }
    report.push(reflexivity);

    let mut antisymmetry = CheckSummary::new("antisymmetry");
    for i in 0..n {
        for j in (i + 1)..n {
            antisymmetry.case();
            let c = cmp(&points[i], &points[j]);
            if c == Ordering::Equal || cmp(&points[j], &points[i]) != c.reverse() {
                antisymmetry.violation(
                    vec![points[i].clone(), points[j].clone()],
                    format!(
                        "compare({}, {}) and compare({}, {}) are inconsistent",
                        points[i], points[j], points[j], points[i]
                    ),
                );
            }
        }
    }
    report.push(antisymmetry);

    let mut transitivity = CheckSummary::new("transitivity");
    let check_triple = |a: &Int, b: &Int, c: &Int, summary: &mut CheckSummary| {
        summary.case();
        if cmp(a, b) == Ordering::Less
            && cmp(b, c) == Ordering::Less
            && cmp(a, c) != Ordering::Less
        {
            summary.violation(
                vec![a.clone(), b.clone(), c.clone()],
                format!("{a} < {b} < {c} but not {a} < {c}"),
            );
        }
    };
    if n <= 60 {
        for a in &points {
            for b in &points {
                for c in &points {
                    check_triple(a, b, c, &mut transitivity);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e55);
        for _ in 0..triple_samples {
            let (a, b, c) =
                (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
            check_triple(&points[a], &points[b], &points[c], &mut transitivity);
        }
    }
    report.push(transitivity);
    report
}

/// Checks pairwise disjointness of the translates `f^n(set)` for
/// `|n| <= n_bound` by direct evaluation.
pub fn brute_strongly_discrete(
    f: &ValidatedBijection,
    set: &BTreeSet<Int>,
    n_bound: u32,
) -> bool {
    let mut seen: HashMap<Int, i64> = HashMap::new();
    for x in set {
        seen.insert(x.clone(), 0);
    }
    let mut walk = |backward: bool| {
        let mut current: Vec<Int> = set.iter().cloned().collect();
        for offset in 1..=(n_bound as i64) {
            let n = if backward { -offset } else { offset };
            for p in current.iter_mut() {
                *p = if backward { f.eval_inverse(p) } else { f.eval(p) };
                if let Some(m) = seen.insert(p.clone(), n) {
                    if m != n {
                        return false;
                    }
                }
            }
        }
        true
    };
    walk(false) && walk(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_and_validate;
    use crate::{int, Window};

    fn f(text: &str) -> ValidatedBijection {
        parse_and_validate(text).expect(text)
    }

    #[test]
    fn brute_orbits_of_translation_by_two() {
        let partition = brute_orbits(&f("map{tail+=2;tail-=2;patch{}}"), &Window::new(-4, 4));
        assert_eq!(partition.classes.len(), 2);
        let evens: BTreeSet<Int> = [-4, -2, 0, 2, 4].iter().map(|&v| int(v)).collect();
        let odds: BTreeSet<Int> = [-3, -1, 1, 3].iter().map(|&v| int(v)).collect();
        assert_eq!(partition.classes[0].points, evens);
        assert_eq!(partition.classes[0].kind, ClassKind::LineFragment);
        assert_eq!(partition.classes[1].points, odds);
    }

    #[test]
    fn brute_orbits_of_swap() {
        let partition =
            brute_orbits(&f("map{tail+=0;tail-=0;patch{0->1,1->0}}"), &Window::new(-2, 2));
        let kinds: Vec<(ClassKind, Vec<Int>)> = partition
            .classes
            .iter()
            .map(|c| (c.kind, c.points.iter().cloned().collect()))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (ClassKind::Cycle, vec![int(-2)]),
                (ClassKind::Cycle, vec![int(-1)]),
                (ClassKind::Cycle, vec![int(0), int(1)]),
                (ClassKind::Cycle, vec![int(2)]),
            ]
        );
    }

    #[test]
    fn brute_orbits_of_identity() {
        let partition = brute_orbits(&f("map{tail+=0;tail-=0;patch{}}"), &Window::new(0, 3));
        assert_eq!(partition.classes.len(), 4);
        assert!(partition.classes.iter().all(|c| c.kind == ClassKind::Cycle && c.points.len() == 1));
    }

    #[test]
    fn brute_orbits_covers_opaque_presentations() {
        let m = f("compose(paired_shift, map{tail+=1;tail-=1;patch{}})");
        let w = Window::new(-10, 10);
        let partition = brute_orbits(&m, &w);
        let total: usize = partition.classes.iter().map(|c| c.points.len()).sum();
        assert_eq!(total, w.len(), "classes partition the window");
    }

    #[test]
    fn natural_order_passes_brute_check() {
        let report = brute_check_total_order(|x, y| x.cmp(y), &Window::new(-50, 50), 2_000);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn cyclic_comparator_fails_with_three_cycle_witness() {
        // 0 < 1 < 2 < 0 cyclically, everything else natural.
        let cmp = |x: &Int, y: &Int| -> Ordering {
            let special =
                |v: &Int| *v == int(0) || *v == int(1) || *v == int(2);
            if special(x) && special(y) && x != y {
                let beats = |a: i64, b: i64| (a, b) == (1, 0) || (a, b) == (2, 1) || (a, b) == (0, 2);
                let (a, b) = (x.try_into().unwrap(), y.try_into().unwrap());
                if beats(a, b) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            } else {
                x.cmp(y)
            }
        };
        let report = brute_check_total_order(cmp, &Window::new(-5, 5), 1_000);
        assert!(!report.passed());
        let violation = report.first_violation().unwrap();
        assert_eq!(violation.witness.len(), 3, "transitivity witness is a triple");
    }

    #[test]
    fn brute_strong_discreteness_examples() {
        let t2 = f("map{tail+=2;tail-=2;patch{}}");
        assert!(brute_strongly_discrete(&t2, &BTreeSet::from([int(0), int(1)]), 100));
        assert!(!brute_strongly_discrete(&t2, &BTreeSet::from([int(0), int(2)]), 100));
        assert!(brute_strongly_discrete(&t2, &BTreeSet::new(), 100));
        let swap = f("map{tail+=0;tail-=0;patch{0->1,1->0}}");
        assert!(!brute_strongly_discrete(&swap, &BTreeSet::from([int(0)]), 10));
    }
}
