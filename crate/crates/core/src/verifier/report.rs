//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One failing instance: the inputs that reproduce it and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub task: String,
    pub profile: String,
    pub seed: u64,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.instances
    }

    /// One line: task, verdict, counts and time.
    pub fn summary_line(&self) -> String {
        format!(
            "{:<34} {} {}/{} ({} ms)",
            self.task,
            if self.passed() { "PASS" } else { "FAIL" },
            self.passes,
            self.instances,
            self.millis
        )
    }
}
