//! The fixed bijection between `Z` and `Z x Z` used by the paired-shift
//! presentation family.
//!
//! It is the composite of the zigzag bijection `z : N -> Z` (0, 1, -1, 2, -2,
//! ...) with the triangular-number pairing `c(a, b) = (a+b)(a+b+1)/2 + b` on
//! naturals, applied coordinate-wise. Both directions are exact at any
//! magnitude.

use num_traits::{One, Signed, Zero};

use crate::Int;

/// Zigzag enumeration of the integers: z(0)=0, z(2k-1)=k, z(2k)=-k.
pub fn zigzag(n: &Int) -> Int {
    debug_assert!(!n.is_negative());
    if n.is_odd_positive() {
        (n + 1u32) / 2u32
    } else {
        -(n / 2u32)
    }
}

/// Inverse of [`zigzag`]: nonnegative position of an integer in the zigzag.
pub fn zigzag_inverse(v: &Int) -> Int {
    if v.is_positive() {
        v * 2u32 - 1u32
    } else {
        -v * 2u32
    }
}

trait OddPositive {
    fn is_odd_positive(&self) -> bool;
}

impl OddPositive for Int {
    fn is_odd_positive(&self) -> bool {
        use num_integer::Integer;
        self.is_positive() && self.is_odd()
    }
}

/// Triangular pairing on naturals: c(a, b) = (a+b)(a+b+1)/2 + b.
fn triangle_pair(a: &Int, b: &Int) -> Int {
    let s = a + b;
    (&s * (&s + 1u32)) / 2u32 + b
}

/// Inverse of [`triangle_pair`].
fn triangle_unpair(n: &Int) -> (Int, Int) {
    debug_assert!(!n.is_negative());
    // Largest w with w(w+1)/2 <= n.
    let w = ((n * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let b = n - t;
    let a = w - &b;
    (a, b)
}

/// The fixed bijection `Z -> Z x Z`.
pub fn pair(m: &Int) -> (Int, Int) {
    let (a, b) = triangle_unpair(&zigzag_inverse(m));
    (zigzag(&a), zigzag(&b))
}

/// Inverse of [`pair`].
pub fn unpair(i: &Int, k: &Int) -> Int {
    zigzag(&triangle_pair(&zigzag_inverse(i), &zigzag_inverse(k)))
}

/// The canonical enumeration 0, 1, -1, 2, -2, ... of the integers.
pub fn integers_zigzag() -> impl Iterator<Item = Int> {
    let mut n = Int::zero();
    std::iter::from_fn(move || {
        let out = zigzag(&n);
        n += Int::one();
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use std::collections::HashSet;

    #[test]
    fn zigzag_small_values() {
        let got: Vec<Int> = (0..7).map(|n| zigzag(&int(n))).collect();
        assert_eq!(got, vec![int(0), int(1), int(-1), int(2), int(-2), int(3), int(-3)]);
        for n in 0..100 {
            assert_eq!(zigzag_inverse(&zigzag(&int(n))), int(n));
        }
    }

    #[test]
    fn pair_at_zero() {
        assert_eq!(pair(&int(0)), (int(0), int(0)));
    }

    #[test]
    fn unpair_inverts_pair_exhaustively() {
        // Full round trip over |m| <= 10^4.
        for m in -10_000..=10_000i64 {
            let m = int(m);
            let (i, k) = pair(&m);
            assert_eq!(unpair(&i, &k), m, "round trip failed at {m}");
        }
    }

    #[test]
    fn pair_is_injective_on_test_range() {
        let mut seen = HashSet::new();
        for m in -10_000..=10_000i64 {
            assert!(seen.insert(pair(&int(m))), "pair collision at {m}");
        }
    }

    #[test]
    fn pair_handles_large_magnitudes() {
        let big: Int = Int::from(10u32).pow(40) + 12345u32;
        let (i, k) = pair(&big);
        assert_eq!(unpair(&i, &k), big);
        let neg = -big;
        let (i, k) = pair(&neg);
        assert_eq!(unpair(&i, &k), neg);
    }

    #[test]
    fn zigzag_enumeration_streams() {
        let first: Vec<Int> = integers_zigzag().take(5).collect();
        assert_eq!(first, vec![int(0), int(1), int(-1), int(2), int(-2)]);
    }
}
