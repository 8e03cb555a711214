//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

/// One verification record. `metric` is the number the check gates on (a
/// residual, a ratio, or a slack depending on the check); the comparison
/// direction is part of the check's definition and is baked into `pass`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub metric: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// Check that passes when metric <= tol.
    pub fn at_most(name: &str, lhs: f64, rhs: f64, metric: f64, tol: f64) -> CheckRecord {
        CheckRecord { name: name.into(), lhs, rhs, metric, tol, pass: metric <= tol }
    }

    /// Check that passes when metric >= tol.
    pub fn at_least(name: &str, lhs: f64, rhs: f64, metric: f64, tol: f64) -> CheckRecord {
        CheckRecord { name: name.into(), lhs, rhs, metric, tol, pass: metric >= tol }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnvBlock {
    pub grid: String,
    pub params: String,
    pub seed: u64,
    pub version: String,
    pub scale: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckRecord>,
    pub env: EnvBlock,
}

impl VerifyReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}
