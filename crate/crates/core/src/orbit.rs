//! Orbit decomposition of validated bijections: periodicity, canonical
//! representatives, strong discreteness, and cover constructions.
//!
//! For family A every cycle lives inside the patch window, because tail
//! points move strictly monotonically while they stay in a tail. Cycle
//! detection therefore scans the window with a visited set. Line orbits
//! split into an incoming ray, a finite middle weaving through the window,
//! and an outgoing ray; the outgoing ray of every line orbit enters the
//! outgoing tail through one of the `|shift|` integers adjacent to the
//! window, which makes the orbit count exact and the step coordinate of any
//! point computable without unbounded search.
//!
//! Family B (the paired shift) has closed-form orbit coordinates: the orbit
//! index and step of `x` are the two components of `pair(x)`.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::CoverDefect;
use crate::pairing::{pair, unpair, zigzag, zigzag_inverse};
use crate::presentation::{CanonicalForm, PairedShift, Translation, ValidatedBijection};
use crate::{Error, Int, Window};

/// Hard cap on iteration steps inside a single operation. Reaching it means
/// an implementation bug, never a property of the input.
const STEP_BUDGET: u64 = 1_000_000;

/// Where a point sits in the orbit decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitInfo {
    Periodic {
        /// The cycle rotated to start at its minimal element.
        cycle: Vec<Int>,
        period: usize,
    },
    Line {
        /// Index of the orbit among the canonical representatives.
        orbit_id: Int,
        /// Signed iteration distance from the representative.
        step: Int,
    },
}

/// Line orbits of a classification: a finite list of representatives, or the
/// countable family of the paired shift given by a generator rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineOrbits {
    Finite { representatives: Vec<Int> },
    /// Representative of orbit `a` is `unpair(zigzag(a), 0)`.
    CountablyInfinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineCount {
    Finite(usize),
    CountablyInfinite,
}

/// The full orbit partition of the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClassification {
    /// Finite cycles, each rotated to its minimal element, sorted by that
    /// element. For identity-tail maps these are the window cycles only; the
    /// cofinite tail of fixed points is reported by the flag instead.
    pub cycles: Vec<Vec<Int>>,
    /// True when the displacement is zero, so every point outside the patch
    /// window is fixed.
    pub cofinite_fixed_tail: bool,
    pub lines: LineOrbits,
    /// Region outside which every point is fixed, when the flag is set.
    /// `(0, -1)` (an empty region) means the map is the identity.
    fixed_outside: Option<(Int, Int)>,
}

impl OrbitClassification {
    pub fn line_count(&self) -> LineCount {
        match &self.lines {
            LineOrbits::Finite { representatives } => LineCount::Finite(representatives.len()),
            LineOrbits::CountablyInfinite => LineCount::CountablyInfinite,
        }
    }

    /// Canonical representative of line orbit `id`.
    pub fn representative(&self, id: &Int) -> Option<Int> {
        match &self.lines {
            LineOrbits::Finite { representatives } => {
                let idx = usize::try_from(id).ok()?;
                representatives.get(idx).cloned()
            }
            LineOrbits::CountablyInfinite => {
                if id.is_negative() {
                    None
                } else {
                    Some(unpair(&zigzag(id), &Int::zero()))
                }
            }
        }
    }

    /// Cycles meeting the window, materializing the fixed tail as 1-cycles.
    pub fn cycles_in_window(&self, window: &Window) -> Vec<Vec<Int>> {
        let mut out: Vec<Vec<Int>> = self
            .cycles
            .iter()
            .filter(|c| c.iter().any(|p| window.contains(p)))
            .cloned()
            .collect();
        if let Some((flo, fhi)) = &self.fixed_outside {
            for p in window.iter() {
                if p < *flo || p > *fhi {
                    out.push(vec![p]);
                }
            }
        }
        out.sort_by(|a, b| a[0].cmp(&b[0]));
        out
    }
}

/// An ordered family of finite sets whose orbits are pairwise disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    pub sets: Vec<BTreeSet<Int>>,
}

// ---------------------------------------------------------------------------
// Internal analyzer: one orbit-coordinate oracle per presentation.
// ---------------------------------------------------------------------------

/// Orbit coordinates of a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Coords {
    /// On a finite cycle of the window permutation.
    Cycle { index: usize },
    /// Fixed point of an identity tail (displacement zero, outside window).
    FixedTail,
    /// On line orbit `key` at signed distance `step` from its representative.
    Line { key: Int, step: Int },
}

impl Coords {
    pub(crate) fn is_periodic(&self) -> bool {
        !matches!(self, Coords::Line { .. })
    }
}

#[derive(Debug, Clone)]
struct LineData {
    rep: Int,
    /// First iterate of `rep` in the outgoing tail (equal to `rep` when the
    /// representative already sits there).
    rep_escape: Int,
    /// Iteration distance from `rep` to `rep_escape`, always nonnegative.
    rep_steps: Int,
}

#[derive(Debug, Clone)]
pub(crate) struct TranslationAnalysis {
    map: Translation,
    window: Option<(Int, Int)>,
    cycles: Vec<Vec<Int>>,
    cycle_of: HashMap<Int, usize>,
    lines: Vec<LineData>,
    /// Residue of outgoing-tail values modulo |shift| -> line index.
    line_by_residue: HashMap<Int, usize>,
}

#[derive(Debug, Clone)]
pub(crate) enum Analyzer {
    A(TranslationAnalysis),
    B(PairedShift),
}

impl Analyzer {
    pub(crate) fn build(f: &ValidatedBijection) -> Result<Analyzer, Error> {
        match f.canonical() {
            CanonicalForm::FamilyA(t) => Ok(Analyzer::A(TranslationAnalysis::build(t)?)),
            CanonicalForm::FamilyB(p) => Ok(Analyzer::B(*p)),
            CanonicalForm::Opaque(_) => Err(Error::UnsupportedPresentation),
        }
    }

    pub(crate) fn coords(&self, x: &Int) -> Result<Coords, Error> {
        match self {
            Analyzer::A(a) => a.coords(x),
            Analyzer::B(p) => {
                // x = unpair(i, k) sits k shifts above the representative
                // unpair(i, 0) when the direction is +1, k shifts below it
                // otherwise.
                let (i, k) = pair(x);
                let step = if p.direction >= 0 { k } else { -k };
                Ok(Coords::Line { key: zigzag_inverse(&i), step })
            }
        }
    }

    /// Canonical representative of line orbit `key`.
    pub(crate) fn line_representative(&self, key: &Int) -> Option<Int> {
        match self {
            Analyzer::A(a) => {
                let idx = usize::try_from(key).ok()?;
                a.lines.get(idx).map(|l| l.rep.clone())
            }
            Analyzer::B(_) => {
                if key.is_negative() {
                    None
                } else {
                    Some(unpair(&zigzag(key), &Int::zero()))
                }
            }
        }
    }

    pub(crate) fn line_count(&self) -> LineCount {
        match self {
            Analyzer::A(a) => LineCount::Finite(a.lines.len()),
            Analyzer::B(_) => LineCount::CountablyInfinite,
        }
    }

    pub(crate) fn has_periodic_points(&self) -> bool {
        match self {
            Analyzer::A(a) => !a.cycles.is_empty() || a.map.displacement().is_zero(),
            Analyzer::B(_) => false,
        }
    }

    /// A concrete cycle for error reporting; only meaningful when
    /// [`Self::has_periodic_points`] is true.
    pub(crate) fn sample_cycle(&self) -> Vec<Int> {
        match self {
            Analyzer::A(a) => a
                .cycles
                .first()
                .cloned()
                .unwrap_or_else(|| vec![first_fixed_tail_point(&a.window)]),
            Analyzer::B(_) => unreachable!("paired shift has no periodic points"),
        }
    }

    fn classification(&self) -> OrbitClassification {
        match self {
            Analyzer::A(a) => {
                let fixed = a.map.displacement().is_zero();
                OrbitClassification {
                    cycles: a.cycles.clone(),
                    cofinite_fixed_tail: fixed,
                    lines: LineOrbits::Finite {
                        representatives: a.lines.iter().map(|l| l.rep.clone()).collect(),
                    },
                    fixed_outside: fixed.then(|| {
                        a.window
                            .clone()
                            .unwrap_or_else(|| (Int::zero(), -Int::from(1u32)))
                    }),
                }
            }
            Analyzer::B(_) => OrbitClassification {
                cycles: Vec::new(),
                cofinite_fixed_tail: false,
                lines: LineOrbits::CountablyInfinite,
                fixed_outside: None,
            },
        }
    }
}

fn first_fixed_tail_point(window: &Option<(Int, Int)>) -> Int {
    match window {
        None => Int::zero(),
        Some((_, hi)) => hi + 1u32,
    }
}

/// Orders orbit representatives: by absolute value, nonnegative first.
fn canonical_key(x: &Int) -> (Int, bool) {
    (x.abs(), x.is_negative())
}

impl TranslationAnalysis {
    fn build(map: &Translation) -> Result<TranslationAnalysis, Error> {
        let window = map
            .patch_window()
            .map(|w| (w.lo().clone(), w.hi().clone()));
        let mut analysis = TranslationAnalysis {
            map: map.clone(),
            window,
            cycles: Vec::new(),
            cycle_of: HashMap::new(),
            lines: Vec::new(),
            line_by_residue: HashMap::new(),
        };
        analysis.scan_cycles()?;
        analysis.scan_lines()?;
        Ok(analysis)
    }

    fn in_window(&self, x: &Int) -> bool {
        match &self.window {
            None => false,
            Some((lo, hi)) => lo <= x && x <= hi,
        }
    }

    /// Visited-set cycle detection over the patch window, the only region
    /// that can host cycles.
    fn scan_cycles(&mut self) -> Result<(), Error> {
        let Some((lo, hi)) = self.window.clone() else {
            return Ok(());
        };
        let mut visited: HashSet<Int> = HashSet::new();
        let mut budget = 0u64;
        let mut start = lo;
        while start <= hi {
            if !visited.contains(&start) {
                // Walk forward. Injectivity rules out rho shapes, so the walk
                // either returns to its start (a cycle) or leaves the window
                // for good (a line orbit); merging into an already visited
                // point likewise means an escaping orbit.
                let mut path = vec![start.clone()];
                let is_cycle = loop {
                    budget += 1;
                    if budget > STEP_BUDGET {
                        return Err(Error::BudgetExceeded);
                    }
                    let next = self.map.eval(path.last().unwrap());
                    if next == start {
                        break true;
                    }
                    if !self.in_window(&next) || visited.contains(&next) {
                        break false;
                    }
                    path.push(next);
                };
                for p in &path {
                    visited.insert(p.clone());
                }
                if is_cycle {
                    let min_pos = path
                        .iter()
                        .enumerate()
                        .min_by(|(_, a), (_, b)| a.cmp(b))
                        .map(|(i, _)| i)
                        .unwrap();
                    path.rotate_left(min_pos);
                    self.cycles.push(path);
                }
            }
            start += 1u32;
        }
        self.cycles.sort_by(|a, b| a[0].cmp(&b[0]));
        for (idx, cycle) in self.cycles.iter().enumerate() {
            for p in cycle {
                self.cycle_of.insert(p.clone(), idx);
            }
        }
        Ok(())
    }

    /// Enumerates the `|shift|` line orbits via the integers adjacent to the
    /// window on the outgoing side, each of which is the first outgoing
    /// point of exactly one orbit.
    fn scan_lines(&mut self) -> Result<(), Error> {
        let s = self.map.displacement().clone();
        if s.is_zero() {
            return Ok(());
        }
        let abs_s = s.abs();
        let count = usize::try_from(&abs_s).expect("displacement too large to enumerate orbits");

        let probes: Vec<Int> = match &self.window {
            None => (0..count as u64).map(Int::from).collect(),
            Some((lo, hi)) => {
                // The first outgoing point of every line orbit is one of the
                // |shift| integers just beyond the window on the outgoing
                // side: no single application can jump further than that.
                let base = if s.is_positive() { hi.clone() } else { lo - &abs_s - 1u32 };
                (1..=count as u64).map(|i| &base + i).collect()
            }
        };

        let mut lines = Vec::with_capacity(count);
        for probe in probes {
            let rep = self.canonical_representative(&probe)?;
            let (rep_escape, rep_steps) = self.forward_escape(&rep)?;
            lines.push(LineData { rep, rep_escape, rep_steps });
        }
        lines.sort_by(|a, b| canonical_key(&a.rep).cmp(&canonical_key(&b.rep)));
        for (idx, line) in lines.iter().enumerate() {
            self.line_by_residue
                .insert(line.rep_escape.mod_floor(&abs_s), idx);
        }
        self.lines = lines;
        Ok(())
    }

    /// First forward iterate of `x` in the outgoing tail, with the iteration
    /// distance. Requires `x` not to lie on a cycle. Long tail runs are
    /// skipped in closed form.
    fn forward_escape(&self, x: &Int) -> Result<(Int, Int), Error> {
        let s = self.map.displacement();
        debug_assert!(!s.is_zero());
        let Some((lo, hi)) = &self.window else {
            return Ok((x.clone(), Int::zero()));
        };
        let mut steps;
        let mut p;
        if s.is_positive() {
            if x > hi {
                return Ok((x.clone(), Int::zero()));
            }
            if x < lo {
                // Incoming tail: jump straight to the first iterate >= lo.
                let j = (lo - x).div_ceil(s);
                p = x + &j * s;
                steps = j;
            } else {
                p = x.clone();
                steps = Int::zero();
            }
            let mut budget = 0u64;
            while p <= *hi {
                budget += 1;
                if budget > STEP_BUDGET {
                    return Err(Error::BudgetExceeded);
                }
                p = self.map.eval(&p);
                steps += 1u32;
            }
        } else {
            if x < lo {
                return Ok((x.clone(), Int::zero()));
            }
            if x > hi {
                let j = (x - hi).div_ceil(&-s);
                p = x + &j * s;
                steps = j;
            } else {
                p = x.clone();
                steps = Int::zero();
            }
            let mut budget = 0u64;
            while p >= *lo {
                budget += 1;
                if budget > STEP_BUDGET {
                    return Err(Error::BudgetExceeded);
                }
                p = self.map.eval(&p);
                steps += 1u32;
            }
        }
        Ok((p, steps))
    }

    /// The orbit element minimizing (|x|, nonnegative-first). The candidates
    /// are the finitely many orbit points in the window plus the ray points
    /// nearest zero; beyond those, |x| grows strictly along each ray.
    fn canonical_representative(&self, on_orbit: &Int) -> Result<Int, Error> {
        let s = self.map.displacement();
        let mut candidates: Vec<Int> = Vec::new();
        match &self.window {
            None => {
                // The orbit is the full arithmetic line through the probe.
                candidates.extend(ray_points_near_zero(on_orbit, s));
                candidates.extend(ray_points_near_zero(on_orbit, &-s));
            }
            Some((lo, hi)) => {
                let (outgoing_start, _) = self.forward_escape(on_orbit)?;
                candidates.extend(ray_points_near_zero(&outgoing_start, s));
                // Walk backward through the window to the incoming tail.
                let mut q = self.map.eval_inverse(&outgoing_start);
                let mut budget = 0u64;
                while *lo <= q && q <= *hi {
                    budget += 1;
                    if budget > STEP_BUDGET {
                        return Err(Error::BudgetExceeded);
                    }
                    candidates.push(q.clone());
                    q = self.map.eval_inverse(&q);
                }
                // q is now the first point of the incoming ray, which runs
                // away from the window with increment -s.
                candidates.extend(ray_points_near_zero(&q, &-s));
            }
        }
        Ok(candidates
            .into_iter()
            .min_by(|a, b| canonical_key(a).cmp(&canonical_key(b)))
            .expect("orbit has candidates"))
    }

    fn coords(&self, x: &Int) -> Result<Coords, Error> {
        if let Some(idx) = self.cycle_of.get(x) {
            return Ok(Coords::Cycle { index: *idx });
        }
        let s = self.map.displacement();
        if s.is_zero() {
            // Identity tails: everything off the window cycles is fixed.
            return Ok(Coords::FixedTail);
        }
        let (u, n_forward) = self.forward_escape(x)?;
        let abs_s = s.abs();
        let idx = *self
            .line_by_residue
            .get(&u.mod_floor(&abs_s))
            .expect("escape value outside every residue class");
        let line = &self.lines[idx];
        let ray_gap = (&u - &line.rep_escape) / s;
        let step = &line.rep_steps + ray_gap - n_forward;
        Ok(Coords::Line { key: Int::from(idx as u64), step })
    }
}

/// The one or two points of the ray `{base + k*step : k >= 0}` closest to
/// zero. Everywhere else |x| is strictly larger.
fn ray_points_near_zero(base: &Int, step: &Int) -> Vec<Int> {
    debug_assert!(!step.is_zero());
    if base.is_zero() || base.is_positive() == step.is_positive() {
        return vec![base.clone()];
    }
    let k = base.abs().div_floor(&step.abs());
    let near = base + &k * step;
    let next = &near + step;
    vec![near, next]
}

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

/// Classifies the orbit of a single point.
pub fn orbit_of(f: &ValidatedBijection, x: &Int) -> Result<OrbitInfo, Error> {
    let analyzer = Analyzer::build(f)?;
    orbit_of_with(&analyzer, x)
}

pub(crate) fn orbit_of_with(analyzer: &Analyzer, x: &Int) -> Result<OrbitInfo, Error> {
    match analyzer.coords(x)? {
        Coords::Cycle { index } => {
            let Analyzer::A(a) = analyzer else { unreachable!() };
            let cycle = a.cycles[index].clone();
            let period = cycle.len();
            Ok(OrbitInfo::Periodic { cycle, period })
        }
        Coords::FixedTail => Ok(OrbitInfo::Periodic { cycle: vec![x.clone()], period: 1 }),
        Coords::Line { key, step } => Ok(OrbitInfo::Line { orbit_id: key, step }),
    }
}

/// Full orbit partition: cycles plus line orbits with canonical
/// representatives.
pub fn classify(f: &ValidatedBijection) -> Result<OrbitClassification, Error> {
    Ok(Analyzer::build(f)?.classification())
}

/// True when no point is periodic.
pub fn is_periodic_point_free(f: &ValidatedBijection) -> Result<bool, Error> {
    Ok(!Analyzer::build(f)?.has_periodic_points())
}

/// On this carrier a bijection admits a compatible re-ordering making it
/// strictly increasing exactly when it has no periodic points.
pub fn is_potentially_monotonic(f: &ValidatedBijection) -> Result<bool, Error> {
    is_periodic_point_free(f)
}

/// True when the orbit of `{x}` is strongly discrete, i.e. `x` is aperiodic.
pub fn strongly_discrete_point(f: &ValidatedBijection, x: &Int) -> Result<bool, Error> {
    let analyzer = Analyzer::build(f)?;
    Ok(!analyzer.coords(x)?.is_periodic())
}

/// True when the translates `f^n(U)` are pairwise disjoint: every element is
/// aperiodic and no two elements share a line orbit.
pub fn strongly_discrete_set(f: &ValidatedBijection, set: &BTreeSet<Int>) -> Result<bool, Error> {
    let analyzer = Analyzer::build(f)?;
    let mut seen_orbits: HashSet<Int> = HashSet::new();
    for x in set {
        match analyzer.coords(x)? {
            Coords::Line { key, .. } => {
                if !seen_orbits.insert(key) {
                    return Ok(false);
                }
            }
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// The canonical cover: one singleton per line-orbit representative.
/// Requires family A and no periodic points.
pub fn canonical_cover(f: &ValidatedBijection) -> Result<CoverFamily, Error> {
    let analyzer = Analyzer::build(f)?;
    match &analyzer {
        Analyzer::B(_) => Err(Error::UnsupportedPresentation),
        Analyzer::A(a) => {
            if analyzer.has_periodic_points() {
                return Err(Error::PeriodicPointFound { cycle: analyzer.sample_cycle() });
            }
            Ok(CoverFamily {
                sets: a.lines.iter().map(|l| BTreeSet::from([l.rep.clone()])).collect(),
            })
        }
    }
}

/// Greedy cover extraction: walk the enumeration in order, keep from each
/// set the points whose orbits are still uncovered, and stop once every
/// orbit meeting the window is covered.
pub fn greedy_cover<I>(
    f: &ValidatedBijection,
    enumeration: I,
    window: &Window,
) -> Result<CoverFamily, Error>
where
    I: IntoIterator<Item = BTreeSet<Int>>,
{
    let analyzer = Analyzer::build(f)?;
    if analyzer.has_periodic_points() {
        return Err(Error::PeriodicPointFound { cycle: analyzer.sample_cycle() });
    }
    // Orbits that must end up covered, keyed by line-orbit id.
    let mut needed: Vec<(Int, Int)> = Vec::new(); // (key, witness point)
    let mut needed_keys: HashSet<Int> = HashSet::new();
    for p in window.iter() {
        if let Coords::Line { key, .. } = analyzer.coords(&p)? {
            if needed_keys.insert(key.clone()) {
                needed.push((key, p));
            }
        }
    }

    let mut covered: HashSet<Int> = HashSet::new();
    let mut sets: Vec<BTreeSet<Int>> = Vec::new();
    let fully_covered =
        |covered: &HashSet<Int>| needed.iter().all(|(key, _)| covered.contains(key));
    for candidate in enumeration {
        if fully_covered(&covered) {
            break;
        }
        let mut fresh = BTreeSet::new();
        for point in candidate {
            if let Coords::Line { key, .. } = analyzer.coords(&point)? {
                if covered.insert(key) {
                    fresh.insert(point);
                }
            }
        }
        if !fresh.is_empty() {
            sets.push(fresh);
        }
    }
    if let Some((_, point)) = needed.iter().find(|(key, _)| !covered.contains(key)) {
        return Err(Error::CoverInsufficient { point: point.clone() });
    }
    Ok(CoverFamily { sets })
}

/// Anchor of one cover set on one orbit: which set, the anchor's rank inside
/// it, and the anchor's step coordinate.
#[derive(Debug, Clone)]
pub(crate) struct CoverSlot {
    pub set_index: usize,
    pub rank: usize,
    pub base_step: Int,
    pub anchor: Int,
}

/// Validates a cover family against the analyzer and indexes it by orbit.
///
/// Checks the three hypotheses: each set's orbit is strongly discrete, the
/// sets' orbits are pairwise disjoint, and together they cover every orbit.
pub(crate) fn index_cover(
    analyzer: &Analyzer,
    cover: &CoverFamily,
) -> Result<HashMap<Int, CoverSlot>, Error> {
    let mut slots: HashMap<Int, CoverSlot> = HashMap::new();
    for (set_index, set) in cover.sets.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::CoverInvalid { defect: CoverDefect::EmptySet { index: set_index } });
        }
        for (rank, point) in set.iter().enumerate() {
            let Coords::Line { key, step } = analyzer.coords(point)? else {
                unreachable!("cover checked only for periodic-point-free maps");
            };
            if let Some(existing) = slots.get(&key) {
                let defect = if existing.set_index == set_index {
                    CoverDefect::SameOrbitWithinSet {
                        index: set_index,
                        a: existing.anchor.clone(),
                        b: point.clone(),
                    }
                } else {
                    CoverDefect::SharedOrbitAcrossSets {
                        first: existing.set_index,
                        second: set_index,
                        a: existing.anchor.clone(),
                        b: point.clone(),
                    }
                };
                return Err(Error::CoverInvalid { defect });
            }
            slots.insert(
                key,
                CoverSlot { set_index, rank, base_step: step, anchor: point.clone() },
            );
        }
    }
    // Coverage: every orbit must carry a slot.
    match analyzer.line_count() {
        LineCount::Finite(n) => {
            for idx in 0..n {
                let key = Int::from(idx as u64);
                if !slots.contains_key(&key) {
                    let rep = analyzer.line_representative(&key).unwrap();
                    return Err(Error::CoverInvalid {
                        defect: CoverDefect::OrbitNotCovered { representative: rep },
                    });
                }
            }
        }
        LineCount::CountablyInfinite => {
            // Finitely many slots can never cover countably many orbits;
            // name the smallest uncovered one.
            let mut key = Int::zero();
            while slots.contains_key(&key) {
                key += 1u32;
            }
            let rep = analyzer.line_representative(&key).unwrap();
            return Err(Error::CoverInvalid {
                defect: CoverDefect::OrbitNotCovered { representative: rep },
            });
        }
    }
    Ok(slots)
}

/// Public cover validity check against the three hypotheses.
pub fn check_cover(f: &ValidatedBijection, cover: &CoverFamily) -> Result<(), Error> {
    let analyzer = Analyzer::build(f)?;
    if analyzer.has_periodic_points() {
        return Err(Error::PeriodicPointFound { cycle: analyzer.sample_cycle() });
    }
    index_cover(&analyzer, cover).map(|_| ())
}
