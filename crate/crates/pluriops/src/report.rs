//! Verification reports and budget presets shared by the CLI and the
//! acceptance suite.

use serde::Serialize;
use std::fmt;
use std::time::Duration;

/// One failed instance: the inputs and the two sides that disagreed.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one named check. The failure list is empty exactly when the
/// status is PASS.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub check: String,
    pub gamma: u32,
    pub bounds: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall: Duration,
}

impl Report {
    pub fn new(check: &str, gamma: u32, bounds: String) -> Report {
        Report {
            check: check.to_string(),
            gamma,
            bounds,
            instances: 0,
            failures: Vec::new(),
            wall: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn count(&mut self, n: u64) {
        self.instances += n;
    }

    pub fn require(&mut self, ok: bool, inputs: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Deterministic TSV row; wall time is reported separately.
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.check,
            self.gamma,
            self.bounds,
            self.instances,
            self.failures.len(),
            self.status()
        )
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "gamma": self.gamma,
            "bounds": self.bounds,
            "instances": self.instances,
            "failures": self.failures,
            "status": self.status(),
        })
    }
}

/// Work-size presets: `smoke` for quick runs, `desk` for the full
/// desk-scale certification, `deep` for overnight-style sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Smoke,
    Desk,
    Deep,
}

impl Budget {
    pub fn parse(s: &str) -> Option<Budget> {
        match s {
            "smoke" => Some(Budget::Smoke),
            "desk" => Some(Budget::Desk),
            "deep" => Some(Budget::Deep),
            _ => None,
        }
    }

    pub fn max_gamma(&self) -> u32 {
        match self {
            Budget::Smoke => 2,
            Budget::Desk => 3,
            Budget::Deep => 4,
        }
    }

    pub fn max_arity(&self) -> u32 {
        match self {
            Budget::Smoke => 4,
            Budget::Desk => 6,
            Budget::Deep => 7,
        }
    }

    /// Rewrite-system degree bound; the tree count grows as
    /// `Catalan(d)·(2γ)^d`, so larger alphabets get a smaller bound.
    pub fn degree_bound(&self, gamma: u32) -> usize {
        match self {
            Budget::Smoke => 3,
            Budget::Desk | Budget::Deep => {
                if gamma <= 2 {
                    4
                } else {
                    3
                }
            }
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Smoke => write!(f, "smoke"),
            Budget::Desk => write!(f, "desk"),
            Budget::Deep => write!(f, "deep"),
        }
    }
}
