//! Canonical form for eventually-translation bijections and the validator
//! that produces it from a raw `map { ... }` spec.
//!
//! A valid map of this family translates every point by a common displacement
//! outside a finite window and rearranges the window onto its translate. The
//! two tail displacements of a raw spec are written independently, but no
//! bijection of the integers can translate its two tails by different
//! amounts: the preimage of a large interval would have the wrong size. The
//! validator therefore rejects every unequal-tail spec with a concrete
//! witness, and the canonical form stores a single displacement.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::error::{BijectivityWitness, PatchDefect};
use crate::{Error, Int, Window};

/// A `map { tail+ = ..; tail- = ..; patch { .. } }` spec exactly as parsed.
///
/// Patch entries keep their textual order; keys inside the key span that are
/// not listed are read as fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationSpec {
    pub tail_up: Int,
    pub tail_down: Int,
    pub patch: Vec<(Int, Int)>,
}

impl TranslationSpec {
    pub fn pure(shift: impl Into<Int>) -> Self {
        let shift = shift.into();
        TranslationSpec { tail_up: shift.clone(), tail_down: shift, patch: Vec::new() }
    }

    /// Key span of the patch: `[min key, max key]`, or None when empty.
    pub fn key_span(&self) -> Option<(Int, Int)> {
        let mut keys = self.patch.iter().map(|(k, _)| k);
        let first = keys.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for k in keys {
            if *k < lo {
                lo = k.clone();
            }
            if *k > hi {
                hi = k.clone();
            }
        }
        Some((lo, hi))
    }

    /// Direct reading of the spec as a (not necessarily injective) total map.
    ///
    /// Unlisted keys inside the span are fixed; tails apply outside it. For a
    /// spec that validates this agrees with the canonical evaluation.
    pub fn eval_unchecked(&self, n: &Int) -> Int {
        match self.key_span() {
            None => {
                if n.is_negative() {
                    n + &self.tail_down
                } else {
                    n + &self.tail_up
                }
            }
            Some((lo, hi)) => {
                if *n < lo {
                    n + &self.tail_down
                } else if *n > hi {
                    n + &self.tail_up
                } else {
                    for (k, v) in &self.patch {
                        if k == n {
                            return v.clone();
                        }
                    }
                    n.clone()
                }
            }
        }
    }
}

/// A validated eventually-translation bijection in canonical form.
///
/// Outside the patch window every point moves by `shift`; the window is
/// rearranged onto its translate by `shift`. The window is trimmed: its
/// boundary entries genuinely deviate from the tail behavior, so equal maps
/// have equal canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    shift: Int,
    patch: Option<Patch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Patch {
    lo: Int,
    /// images[i] = f(lo + i); a rearrangement of [lo + shift, hi + shift].
    images: Vec<Int>,
    /// preimages[j] = f^{-1}(lo + shift + j).
    preimages: Vec<Int>,
}

impl Translation {
    pub fn pure(shift: impl Into<Int>) -> Self {
        Translation { shift: shift.into(), patch: None }
    }

    /// Common displacement applied outside the patch window.
    pub fn displacement(&self) -> &Int {
        &self.shift
    }

    /// The rearranged window, if any.
    pub fn patch_window(&self) -> Option<Window> {
        self.patch.as_ref().map(|p| {
            let hi = &p.lo + (p.images.len() - 1) as u64;
            Window::new(p.lo.clone(), hi)
        })
    }

    /// Patch entries `(key, image)` in key order.
    pub fn patch_entries(&self) -> Vec<(Int, Int)> {
        match &self.patch {
            None => Vec::new(),
            Some(p) => p
                .images
                .iter()
                .enumerate()
                .map(|(i, v)| (&p.lo + i as u64, v.clone()))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_zero() && self.patch.is_none()
    }

    pub fn eval(&self, n: &Int) -> Int {
        if let Some(p) = &self.patch {
            if *n >= p.lo {
                let offset = n - &p.lo;
                if let Ok(i) = usize::try_from(&offset) {
                    if i < p.images.len() {
                        return p.images[i].clone();
                    }
                }
            }
        }
        n + &self.shift
    }

    pub fn eval_inverse(&self, n: &Int) -> Int {
        if let Some(p) = &self.patch {
            let image_lo = &p.lo + &self.shift;
            if *n >= image_lo {
                let offset = n - image_lo;
                if let Ok(j) = usize::try_from(&offset) {
                    if j < p.preimages.len() {
                        return p.preimages[j].clone();
                    }
                }
            }
        }
        n - &self.shift
    }

    /// The inverse bijection in canonical form.
    pub fn inverse(&self) -> Translation {
        match &self.patch {
            None => Translation::pure(-&self.shift),
            Some(p) => {
                let lo = &p.lo + &self.shift;
                // Swapping images and preimages inverts the rearrangement.
                from_contiguous(lo, p.preimages.clone(), -&self.shift)
            }
        }
    }

    /// `self` after `other`: n -> self(other(n)).
    pub fn compose_after(&self, other: &Translation) -> Translation {
        let shift = &self.shift + &other.shift;
        // Outside [lo, hi] both factors act as pure tails, so the composite
        // window is the union of other's window with the preimage of self's.
        let mut lo: Option<Int> = None;
        let mut hi: Option<Int> = None;
        let mut widen = |l: Int, h: Int| {
            if lo.as_ref().is_none_or(|cur| l < *cur) {
                lo = Some(l);
            }
            if hi.as_ref().is_none_or(|cur| h > *cur) {
                hi = Some(h);
            }
        };
        if let Some(w) = other.patch_window() {
            widen(w.lo().clone(), w.hi().clone());
        }
        if let Some(w) = self.patch_window() {
            widen(w.lo() - &other.shift, w.hi() - &other.shift);
        }
        match (lo, hi) {
            (Some(lo), Some(hi)) => {
                let mut images = Vec::with_capacity(Window::new(lo.clone(), hi.clone()).len());
                let mut n = lo.clone();
                while n <= hi {
                    images.push(self.eval(&other.eval(&n)));
                    n += 1u32;
                }
                from_contiguous(lo, images, shift)
            }
            _ => Translation::pure(shift),
        }
    }
}

impl std::fmt::Display for Translation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "translation by {}", self.shift)?;
        if let Some(w) = self.patch_window() {
            let entries: Vec<String> = self
                .patch_entries()
                .iter()
                .map(|(k, v)| format!("{k}->{v}"))
                .collect();
            write!(f, " with patch on {w}: {{{}}}", entries.join(", "))?;
        }
        Ok(())
    }
}

/// Builds a canonical translation from a contiguous window of images,
/// trimming boundary entries that agree with the tail.
fn from_contiguous(mut lo: Int, mut images: Vec<Int>, shift: Int) -> Translation {
    loop {
        let len = images.len();
        if len == 0 {
            return Translation::pure(shift);
        }
        let hi = &lo + (len - 1) as u64;
        if images[len - 1] == &hi + &shift {
            images.pop();
            continue;
        }
        if images[0] == &lo + &shift {
            images.remove(0);
            lo += 1u32;
            continue;
        }
        break;
    }
    let len = images.len();
    let image_lo = &lo + &shift;
    let mut preimages: Vec<Option<Int>> = vec![None; len];
    for (i, v) in images.iter().enumerate() {
        let offset = v - &image_lo;
        let j = usize::try_from(&offset)
            .ok()
            .filter(|j| *j < len)
            .expect("canonical patch image out of its interval");
        assert!(preimages[j].is_none(), "canonical patch image repeated");
        preimages[j] = Some(&lo + i as u64);
    }
    let preimages = preimages.into_iter().map(Option::unwrap).collect();
    Translation { shift, patch: Some(Patch { lo, images, preimages }) }
}

/// Checks a raw spec and produces the canonical form, or a concrete reason
/// why no bijection is presented.
pub fn validate_translation(spec: &TranslationSpec) -> Result<Translation, Error> {
    // Patch-internal defects first.
    let mut by_key: HashMap<&Int, &Int> = HashMap::new();
    for (k, v) in &spec.patch {
        if by_key.insert(k, v).is_some() {
            return Err(Error::InvalidPatch(PatchDefect::DuplicateKey { key: k.clone() }));
        }
    }
    let mut by_value: HashMap<&Int, &Int> = HashMap::new();
    for (k, v) in &spec.patch {
        if let Some(first) = by_value.insert(v, k) {
            let (a, b) = if first < k { (first, k) } else { (k, first) };
            return Err(Error::InvalidPatch(PatchDefect::NonInjective {
                value: v.clone(),
                first_key: a.clone(),
                second_key: b.clone(),
            }));
        }
    }

    // Window, with unlisted keys completed as fixed points. An empty patch
    // uses the empty window [0, -1]: tails then split the line at zero, which
    // is enough to exhibit a witness when the tails disagree.
    let (lo, hi) = spec.key_span().unwrap_or((Int::zero(), -Int::from(1u32)));
    let up = &spec.tail_up;
    let down = &spec.tail_down;

    let mut images: Vec<Int> = Vec::new();
    {
        let mut n = lo.clone();
        while n <= hi {
            match by_key.get(&n) {
                Some(v) => images.push((*v).clone()),
                None => {
                    // Fixed point by completion; collides if some listed
                    // entry already produces this value.
                    if let Some(k) = by_value.get(&n) {
                        let (a, b) = if *k < &n { ((*k).clone(), n.clone()) } else { (n.clone(), (*k).clone()) };
                        return Err(Error::NotBijective(BijectivityWitness::Collision {
                            x: a,
                            y: b,
                            image: n.clone(),
                        }));
                    }
                    images.push(n.clone());
                }
            }
            n += 1u32;
        }
    }

    // The two tail rays must not meet.
    let upper_ray_lo = &hi + 1u32 + up;
    let lower_ray_hi = &lo - 1u32 + down;
    if upper_ray_lo <= lower_ray_hi {
        let x = &upper_ray_lo - down; // lower-tail point with the same image
        return Err(Error::NotBijective(BijectivityWitness::Collision {
            x,
            y: &hi + 1u32,
            image: upper_ray_lo,
        }));
    }

    // Every window image must land strictly between the rays.
    let image_lo = &lo + down;
    let image_hi = &hi + up;
    for (i, v) in images.iter().enumerate() {
        let key = &lo + i as u64;
        if *v > image_hi {
            return Err(Error::NotBijective(BijectivityWitness::Collision {
                x: key,
                y: v - up,
                image: v.clone(),
            }));
        }
        if *v < image_lo {
            return Err(Error::NotBijective(BijectivityWitness::Collision {
                x: v - down,
                y: key,
                image: v.clone(),
            }));
        }
    }

    // The images are distinct and inside [image_lo, image_hi]; the interval
    // is unhit exactly where a gap remains.
    let interval_len = &image_hi - &image_lo + 1u32;
    if Int::from(images.len() as u64) < interval_len {
        let hit: std::collections::HashSet<&Int> = images.iter().collect();
        let mut v = image_lo.clone();
        while v <= image_hi {
            if !hit.contains(&v) {
                return Err(Error::NotBijective(BijectivityWitness::MissingPreimage { value: v }));
            }
            v += 1u32;
        }
        unreachable!("interval larger than image set but fully hit");
    }
    // More images than interval slots would force a repeat, which was
    // excluded above; equality is the only remaining case, so the tails agree.
    debug_assert_eq!(Int::from(images.len() as u64), interval_len);
    debug_assert_eq!(up, down);

    Ok(from_contiguous(lo, images, up.clone()))
}
