//! Verification reports: named checks with case counts and witnesses.

use crate::Int;

/// At most this many concrete witnesses are kept per check; the count of
/// violations is always exact.
pub const MAX_STORED_VIOLATIONS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// The offending points, in the order the check names them.
    pub witness: Vec<Int>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: &'static str,
    /// How many cases (pairs, triples, points) were examined.
    pub cases: u64,
    /// Exact number of violations found.
    pub violation_count: u64,
    /// First few violations, capped at [`MAX_STORED_VIOLATIONS`].
    pub violations: Vec<Violation>,
}

impl CheckSummary {
    pub fn new(name: &'static str) -> Self {
        CheckSummary { name, cases: 0, violation_count: 0, violations: Vec::new() }
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn violation(&mut self, witness: Vec<Int>, detail: impl Into<String>) {
        self.violation_count += 1;
        if self.violations.len() < MAX_STORED_VIOLATIONS {
            self.violations.push(Violation { witness, detail: detail.into() });
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// Outcome of a verification sweep over a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// What was verified, e.g. "order" or "coloring".
    pub subject: &'static str,
    pub checks: Vec<CheckSummary>,
}

impl VerificationReport {
    pub fn new(subject: &'static str) -> Self {
        VerificationReport { subject, checks: Vec::new() }
    }

    pub fn push(&mut self, check: CheckSummary) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::passed)
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.iter().map(|c| c.violation_count).sum()
    }

    /// First stored violation, if any.
    pub fn first_violation(&self) -> Option<&Violation> {
        self.checks.iter().flat_map(|c| c.violations.iter()).next()
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("{}: PASS ({} cases, 0 violations)", self.subject, self.total_cases())
        } else {
            format!(
                "{}: FAIL ({} cases, {} violations)",
                self.subject,
                self.total_cases(),
                self.total_violations()
            )
        }
    }
}
