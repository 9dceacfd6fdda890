//! Work counters threaded through the solvers.

use std::time::Duration;

/// Counters reported alongside solutions: how many compact representations
/// were tried, how many inclusion-exclusion subsets were evaluated, how many
/// dynamic-programming rows were materialized, and wall-clock time.
#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub reps_tried: u64,
    pub subsets_evaluated: u64,
    pub dp_rows: u64,
    pub elapsed: Duration,
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.reps_tried += other.reps_tried;
        self.subsets_evaluated += other.subsets_evaluated;
        self.dp_rows += other.dp_rows;
        self.elapsed += other.elapsed;
    }
}
