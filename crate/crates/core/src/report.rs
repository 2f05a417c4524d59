//! Structured pass/fail reports for identity suites.

use serde::{Deserialize, Serialize};

/// One verified identity: residual against threshold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    /// The identity being checked, as a plain-math string.
    pub identity: String,
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// A named suite of checks with summary counts.
///
/// Invariant: `pass == (residual <= threshold)` for every check and the
/// counts equal the number of passing/failing entries; both are enforced by
/// construction through [`VerificationReport::push`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new(), passed: 0, failed: 0 }
    }

    /// Record a residual-style check: passes when residual <= threshold.
    pub fn push(&mut self, id: impl Into<String>, identity: impl Into<String>, residual: f64, threshold: f64) {
        let pass = residual.is_finite() && residual <= threshold;
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(CheckResult {
            id: id.into(),
            identity: identity.into(),
            residual,
            threshold,
            pass,
        });
    }

    /// Record a check that must EXCEED a floor (non-degeneracy controls).
    /// The residual is reported as-is; pass means residual >= floor.
    pub fn push_floor(&mut self, id: impl Into<String>, identity: impl Into<String>, value: f64, floor: f64) {
        let pass = value.is_finite() && value >= floor;
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(CheckResult {
            id: id.into(),
            identity: identity.into(),
            residual: value,
            threshold: floor,
            pass,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    /// Merge another report's checks into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.checks.extend(other.checks);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_track_entries() {
        let mut r = VerificationReport::new("demo");
        r.push("a", "x = y", 1e-16, 1e-12);
        r.push("b", "y = z", 1.0, 1e-12);
        r.push_floor("c", "ratio stays large", 0.5, 0.01);
        assert_eq!(r.passed, 2);
        assert_eq!(r.failed, 1);
        assert!(!r.all_passed());
        assert_eq!(r.checks.len(), 3);
        assert_eq!(r.max_residual(), 1.0);
    }

    #[test]
    fn non_finite_residual_fails() {
        let mut r = VerificationReport::new("demo");
        r.push("nan", "must not be nan", f64::NAN, 1e-12);
        assert_eq!(r.failed, 1);
    }
}
