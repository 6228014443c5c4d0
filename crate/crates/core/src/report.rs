//! Validation reports: every law checker returns the full list of violated
//! axioms instead of failing on the first one.

use serde::Serialize;
use std::fmt;

/// One violated law, with a machine-readable code and the offending tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Stable dotted code, e.g. `category.compose.assoc`.
    pub law: String,
    /// The witnessing data (ids of the offending pair/triple/component).
    pub witness: String,
}

/// Outcome of exhaustively checking a family of axioms.
///
/// An empty report means every axiom holds; otherwise each violation cites
/// the offending tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ValidationReport {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, law: &str, witness: impl fmt::Display) {
        self.violations.push(Violation {
            law: law.to_string(),
            witness: witness.to_string(),
        });
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Merge another report in, keeping its violation order.
    pub fn absorb(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// First violation, if any. Reports are built in deterministic order, so
    /// this is the canonical witness to show a user.
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "{}: valid", self.subject)
        } else {
            writeln!(f, "{}: {} violation(s)", self.subject, self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {} @ {}", v.law, v.witness)?;
            }
            Ok(())
        }
    }
}
