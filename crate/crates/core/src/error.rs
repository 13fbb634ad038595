//! Error types shared by the whole crate.

use std::fmt;

use crate::Int;

/// A defect in a `patch { ... }` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatchDefect {
    /// The same key appears twice.
    DuplicateKey { key: Int },
    /// Two keys map to the same value.
    NonInjective { value: Int, first_key: Int, second_key: Int },
}

impl fmt::Display for PatchDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatchDefect::DuplicateKey { key } => write!(f, "duplicate key {key}"),
            PatchDefect::NonInjective { value, first_key, second_key } => {
                write!(f, "keys {first_key} and {second_key} both map to {value}")
            }
        }
    }
}

/// Concrete evidence that a presentation does not define a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectivityWitness {
    /// Two distinct inputs with the same output.
    Collision { x: Int, y: Int, image: Int },
    /// An integer hit by neither tail nor patch.
    MissingPreimage { value: Int },
}

impl fmt::Display for BijectivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectivityWitness::Collision { x, y, image } => {
                write!(f, "{x} and {y} both map to {image}")
            }
            BijectivityWitness::MissingPreimage { value } => {
                write!(f, "{value} has no preimage among tails or patch")
            }
        }
    }
}

/// Why a proposed cover family cannot back an order construction.
///
/// The three hypothesis numbers refer to: (1) each set has a strongly discrete
/// orbit, (2) distinct sets have disjoint orbits, (3) the orbits of the family
/// cover the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverDefect {
    EmptySet { index: usize },
    PeriodicElement { index: usize, point: Int },
    SameOrbitWithinSet { index: usize, a: Int, b: Int },
    SharedOrbitAcrossSets { first: usize, second: usize, a: Int, b: Int },
    OrbitNotCovered { representative: Int },
}

impl CoverDefect {
    /// Which of the three cover hypotheses is violated.
    pub fn property(&self) -> u8 {
        match self {
            CoverDefect::EmptySet { .. }
            | CoverDefect::PeriodicElement { .. }
            | CoverDefect::SameOrbitWithinSet { .. } => 1,
            CoverDefect::SharedOrbitAcrossSets { .. } => 2,
            CoverDefect::OrbitNotCovered { .. } => 3,
        }
    }
}

impl fmt::Display for CoverDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverDefect::EmptySet { index } => write!(f, "set #{index} is empty"),
            CoverDefect::PeriodicElement { index, point } => {
                write!(f, "set #{index} contains the periodic point {point}")
            }
            CoverDefect::SameOrbitWithinSet { index, a, b } => {
                write!(f, "set #{index} contains {a} and {b}, which share an orbit")
            }
            CoverDefect::SharedOrbitAcrossSets { first, second, a, b } => {
                write!(f, "sets #{first} and #{second} share an orbit ({a} and {b})")
            }
            CoverDefect::OrbitNotCovered { representative } => {
                write!(f, "the orbit of {representative} is not covered")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: expected {expected}, found {found}")]
    Syntax { line: usize, column: usize, expected: String, found: String },

    #[error("invalid patch: {0}")]
    InvalidPatch(PatchDefect),

    #[error("not a bijection: {0}")]
    NotBijective(BijectivityWitness),

    #[error("presentation only supports pointwise evaluation, not orbit analysis")]
    UnsupportedPresentation,

    #[error("periodic point found: cycle {}", format_cycle(.cycle))]
    PeriodicPointFound { cycle: Vec<Int> },

    #[error("cover violates hypothesis ({}): {defect}", .defect.property())]
    CoverInvalid { defect: CoverDefect },

    #[error("enumeration cannot cover the window: first uncovered point {point}")]
    CoverInsufficient { point: Int },

    // Tripwire for runaway iteration. Reaching it is a bug, not a user error.
    #[error("iteration budget exceeded (internal error)")]
    BudgetExceeded,
}

fn format_cycle(cycle: &[Int]) -> String {
    let parts: Vec<String> = cycle.iter().map(Int::to_string).collect();
    format!("[{}]", parts.join(", "))
}
