use std::fmt;

use num_traits::One;

use crate::Int;

/// A closed integer interval `[lo, hi]`, the finite region most checks sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    lo: Int,
    hi: Int,
}

impl Window {
    /// Panics if `lo > hi`.
    pub fn new(lo: impl Into<Int>, hi: impl Into<Int>) -> Self {
        let (lo, hi) = (lo.into(), hi.into());
        assert!(lo <= hi, "window bounds out of order: {lo} > {hi}");
        Window { lo, hi }
    }

    pub fn lo(&self) -> &Int {
        &self.lo
    }

    pub fn hi(&self) -> &Int {
        &self.hi
    }

    pub fn contains(&self, x: &Int) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Number of integers in the window. Callers keep windows small enough
    /// for this to fit a usize.
    pub fn len(&self) -> usize {
        let span = &self.hi - &self.lo + 1u32;
        usize::try_from(&span).expect("window too large to enumerate")
    }

    pub fn is_empty(&self) -> bool {
        false // lo <= hi always holds
    }

    pub fn iter(&self) -> WindowIter {
        WindowIter { next: self.lo.clone(), hi: self.hi.clone() }
    }

    /// All points as a vector, ascending.
    pub fn points(&self) -> Vec<Int> {
        self.iter().collect()
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub struct WindowIter {
    next: Int,
    hi: Int,
}

impl Iterator for WindowIter {
    type Item = Int;

    fn next(&mut self) -> Option<Int> {
        if self.next > self.hi {
            return None;
        }
        let out = self.next.clone();
        self.next += Int::one();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn iteration_and_len() {
        let w = Window::new(-2, 3);
        assert_eq!(w.len(), 6);
        let pts: Vec<Int> = w.iter().collect();
        assert_eq!(pts, vec![int(-2), int(-1), int(0), int(1), int(2), int(3)]);
        assert!(w.contains(&int(0)));
        assert!(!w.contains(&int(4)));
    }

    #[test]
    #[should_panic]
    fn rejects_inverted_bounds() {
        let _ = Window::new(1, 0);
    }
}
