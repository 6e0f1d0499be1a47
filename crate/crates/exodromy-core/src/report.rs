//! Verdicts and structured verification reports.
//!
//! Every check in the crate returns a three-valued verdict: `Verified`,
//! `Refuted` with a human-readable witness, or `Undecided` with the budget
//! that ran out. An `Undecided` answer is never upgraded to a guess.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Refuted { witness: String },
    Undecided { budget: usize },
}

impl Verdict {
    pub fn refuted(witness: impl Into<String>) -> Verdict {
        Verdict::Refuted {
            witness: witness.into(),
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided { .. })
    }

    /// Conjunction: refutation dominates, then undecidedness.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (v @ Verdict::Refuted { .. }, _) => v,
            (_, v @ Verdict::Refuted { .. }) => v,
            (v @ Verdict::Undecided { .. }, _) => v,
            (_, v @ Verdict::Undecided { .. }) => v,
            _ => Verdict::Verified,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "Verified"),
            Verdict::Refuted { witness } => write!(f, "Refuted: {witness}"),
            Verdict::Undecided { budget } => write!(f, "Undecided (budget {budget})"),
        }
    }
}

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

/// A bundle of verdicts for one model or pipeline run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> VerificationReport {
        VerificationReport {
            subject: subject.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.entries.push(ReportEntry {
            name: name.into(),
            verdict,
            detail: detail.into(),
        });
    }

    pub fn entry(&self, name: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Aggregate verdict over every entry.
    pub fn overall(&self) -> Verdict {
        self.entries
            .iter()
            .fold(Verdict::Verified, |acc, e| acc.and(e.verdict.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refutation_dominates_aggregation() {
        let mut r = VerificationReport::new("test");
        r.push("a", Verdict::Verified, "");
        r.push("b", Verdict::Undecided { budget: 10 }, "");
        r.push("c", Verdict::refuted("bad triple"), "");
        assert!(r.overall().is_refuted());
    }

    #[test]
    fn undecided_beats_verified() {
        let v = Verdict::Verified.and(Verdict::Undecided { budget: 5 });
        assert!(v.is_undecided());
    }

    #[test]
    fn all_verified_aggregates_verified() {
        let mut r = VerificationReport::new("test");
        r.push("a", Verdict::Verified, "");
        r.push("b", Verdict::Verified, "");
        assert_eq!(r.overall(), Verdict::Verified);
    }
}
