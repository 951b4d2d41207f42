use std::fmt;

use crate::logic::{Formula, Vocabulary};

/// A law that failed, with the formulas that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witnesses: Vec<Formula>,
}

impl Violation {
    pub fn new(law: &'static str, witnesses: Vec<Formula>) -> Self {
        Self { law, witnesses }
    }

    pub fn render(&self, vocab: &Vocabulary) -> String {
        let parts: Vec<String> = self.witnesses.iter().map(|f| f.display(vocab).to_string()).collect();
        format!("{} violated by ({})", self.law, parts.join("; "))
    }
}

/// Outcome of an exhaustive check over a finite sample.
///
/// Checking stops at the first violation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: usize,
    pub violation: Option<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub(crate) fn check(&mut self, law: &'static str, holds: bool, witnesses: impl FnOnce() -> Vec<Formula>) -> bool {
        self.checks += 1;
        if !holds && self.violation.is_none() {
            self.violation = Some(Violation::new(law, witnesses()));
        }
        holds
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "pass ({} checks)", self.checks),
            Some(v) => write!(f, "FAIL: {} ({} witnesses)", v.law, v.witnesses.len()),
        }
    }
}
