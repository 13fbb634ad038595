//! The 2-coloring induced by the constructed order: a point's color is the
//! parity of the step coordinate of its label, so the map always sends each
//! color into the other.

use std::collections::BTreeSet;

use num_integer::Integer as _;

use crate::presentation::ValidatedBijection;
use crate::reorder::OrderHandle;
use crate::report::{CheckSummary, VerificationReport};
use crate::{Int, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    A,
    B,
}

/// Total 2-coloring of the carrier, constant on every translate of a cover
/// block.
#[derive(Debug, Clone)]
pub struct Coloring {
    handle: OrderHandle,
}

impl Coloring {
    pub fn membership(&self, x: &Int) -> Color {
        if self.handle.label(x).step.is_even() {
            Color::A
        } else {
            Color::B
        }
    }
}

/// Colors the carrier by step parity of the handle's labels.
pub fn two_coloring(handle: &OrderHandle) -> Coloring {
    Coloring { handle: handle.clone() }
}

/// True when `set` misses its own image: `set` and `f(set)` are disjoint.
/// (Closedness is automatic on a discrete carrier.)
pub fn is_color(f: &ValidatedBijection, set: &BTreeSet<Int>) -> bool {
    set.iter().all(|x| !set.contains(&f.eval(x)))
}

/// Checks that no window point keeps its color under the map.
pub fn verify_coloring(
    f: &ValidatedBijection,
    coloring: &Coloring,
    window: &Window,
) -> VerificationReport {
    verify_coloring_with(f, |x| coloring.membership(x), window)
}

/// Closure-driven variant for fault-injection fixtures.
pub fn verify_coloring_with<C>(f: &ValidatedBijection, color_of: C, window: &Window) -> VerificationReport
where
    C: Fn(&Int) -> Color,
{
    let mut report = VerificationReport::new("coloring");
    let mut flips = CheckSummary::new("color-flips-under-map");
    for x in window.iter() {
        flips.case();
        let fx = f.eval(&x);
        if color_of(&x) == color_of(&fx) {
            flips.violation(
                vec![x.clone(), fx.clone()],
                format!("{x} and its image {fx} share a color"),
            );
        }
    }
    report.push(flips);
    report
}
