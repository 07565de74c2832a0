use std::fmt;

use serde::Serialize;

/// Inputs and both sides of an inequality or equivalence that failed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trials: u64,
    pub applicable: u64,
    pub violations: Vec<Counterexample>,
    /// Failures observed where the property is not claimed to hold.
    pub informational: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub informational_samples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub passed: bool,
}

const SAMPLE_LIMIT: usize = 5;

impl PropertyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            seed: None,
            trials: 0,
            applicable: 0,
            violations: Vec::new(),
            informational: 0,
            informational_samples: Vec::new(),
            note: None,
            passed: true,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn violation(&mut self, c: Counterexample) {
        self.violations.push(c);
        self.passed = false;
    }

    pub fn informational(&mut self, c: Counterexample) {
        self.informational += 1;
        if self.informational_samples.len() < SAMPLE_LIMIT {
            self.informational_samples.push(c);
        }
    }

    /// Folds a partial report for the same suite into this one.
    pub fn merge(mut self, other: PropertyReport) -> Self {
        self.trials += other.trials;
        self.applicable += other.applicable;
        self.violations.extend(other.violations);
        self.informational += other.informational;
        for c in other.informational_samples {
            if self.informational_samples.len() < SAMPLE_LIMIT {
                self.informational_samples.push(c);
            }
        }
        self.passed = self.violations.is_empty();
        self
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} trials, {} applicable, {} violations",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.trials,
            self.applicable,
            self.violations.len()
        )?;
        if self.informational > 0 {
            write!(f, ", {} outside the claimed regime", self.informational)?;
        }
        if let Some(note) = &self.note {
            write!(f, "\n    note: {note}")?;
        }
        for c in self.violations.iter().take(SAMPLE_LIMIT) {
            write!(
                f,
                "\n    violation: {} (lhs {}, rhs {})",
                c.inputs, c.lhs, c.rhs
            )?;
        }
        for c in &self.informational_samples {
            write!(
                f,
                "\n    outside: {} (lhs {}, rhs {})",
                c.inputs, c.lhs, c.rhs
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(lhs: f64) -> Counterexample {
        Counterexample {
            inputs: "x".into(),
            lhs,
            rhs: 0.0,
        }
    }

    #[test]
    fn passed_tracks_violations() {
        let mut r = PropertyReport::new("s");
        assert!(r.passed);
        r.informational(c(1.0));
        assert!(r.passed);
        r.violation(c(2.0));
        assert!(!r.passed);
    }

    #[test]
    fn merge_is_order_independent_in_totals() {
        let mut a = PropertyReport::new("s");
        a.trials = 3;
        a.applicable = 2;
        let mut b = PropertyReport::new("s");
        b.trials = 5;
        b.violation(c(1.0));
        let ab = a.clone().merge(b.clone());
        let ba = b.merge(a);
        assert_eq!((ab.trials, ab.applicable, ab.passed), (8, 2, false));
        assert_eq!((ba.trials, ba.applicable, ba.passed), (8, 2, false));
    }
}
