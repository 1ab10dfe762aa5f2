//! Outcome type shared by the verification sweeps.

/// Outcome of a verification sweep.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    /// Instances checked.
    pub checked: usize,
    /// Instances outside the sweep's hypotheses.
    pub skipped: usize,
    /// Human-readable descriptions of every failure.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }
}
