use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Display;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub description: String,
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a verification battery.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub checks: usize,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(suite: &str, m: usize, n: usize, seed: u64) -> Self {
        Report {
            suite: suite.to_string(),
            m,
            n,
            seed,
            samples: 0,
            checks: 0,
            pass: true,
            violations: Vec::new(),
        }
    }

    /// Record one identity check comparing two rendered sides.
    pub fn check_eq<T: PartialEq + Display>(
        &mut self,
        description: impl FnOnce() -> String,
        inputs: impl FnOnce() -> Value,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.checks += 1;
        if lhs == rhs {
            return true;
        }
        self.violations.push(Violation {
            description: description(),
            inputs: inputs(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
        self.pass = false;
        false
    }

    /// Record a check whose failure is described by free text.
    pub fn check(&mut self, ok: bool, violation: impl FnOnce() -> Violation) -> bool {
        self.checks += 1;
        if !ok {
            self.violations.push(violation());
            self.pass = false;
        }
        ok
    }

    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.samples += other.samples;
        for mut v in other.violations {
            v.description = format!(
                "[{} m={} n={}] {}",
                other.suite, other.m, other.n, v.description
            );
            self.violations.push(v);
        }
        self.pass = self.violations.is_empty();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
