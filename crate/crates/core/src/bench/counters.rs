use std::ops::AddAssign;

use serde::Serialize;

/// Algorithmic event tallies collected by the engines.
///
/// Each engine only touches its own fields. Counters only ever grow during a
/// run; start from [`WorkCounters::default`] for a fresh one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WorkCounters {
    /// dp: evaluations of the translocation guard in the inner `(i, k, h)` loop.
    pub dp_guard_evaluations: u64,
    /// dawg: suffix-link steps, whether during scanning or in the `h`/`k` walks.
    pub dawg_link_hops: u64,
    /// dawg: end-position membership queries.
    pub dawg_endpos_tests: u64,
    /// dawg: prefix-set elements visited, in either case of the recurrence.
    pub dawg_prefix_iterations: u64,
    /// align: attempts taken off a frontier and processed.
    pub align_attempts: u64,
    /// align: candidate border lengths tried while re-splitting an attempt.
    pub align_resplit_steps: u64,
    /// align: the largest per-window sum of frontier sizes seen so far.
    pub align_max_window_frontier: u64,
}

impl WorkCounters {
    pub const NAMES: [&'static str; 7] = [
        "dp_guard_evaluations",
        "dawg_link_hops",
        "dawg_endpos_tests",
        "dawg_prefix_iterations",
        "align_attempts",
        "align_resplit_steps",
        "align_max_window_frontier",
    ];

    /// `(name, value)` pairs in [`WorkCounters::NAMES`] order.
    pub fn entries(&self) -> [(&'static str, u64); 7] {
        [
            (Self::NAMES[0], self.dp_guard_evaluations),
            (Self::NAMES[1], self.dawg_link_hops),
            (Self::NAMES[2], self.dawg_endpos_tests),
            (Self::NAMES[3], self.dawg_prefix_iterations),
            (Self::NAMES[4], self.align_attempts),
            (Self::NAMES[5], self.align_resplit_steps),
            (Self::NAMES[6], self.align_max_window_frontier),
        ]
    }

    pub fn dp_work(&self) -> u64 {
        self.dp_guard_evaluations
    }

    pub fn dawg_work(&self) -> u64 {
        self.dawg_link_hops + self.dawg_endpos_tests + self.dawg_prefix_iterations
    }

    pub fn align_work(&self) -> u64 {
        self.align_attempts + self.align_resplit_steps
    }

    /// Folds another run into this one. Sums, except the frontier maximum.
    pub fn merge(&mut self, other: &WorkCounters) {
        self.dp_guard_evaluations += other.dp_guard_evaluations;
        self.dawg_link_hops += other.dawg_link_hops;
        self.dawg_endpos_tests += other.dawg_endpos_tests;
        self.dawg_prefix_iterations += other.dawg_prefix_iterations;
        self.align_attempts += other.align_attempts;
        self.align_resplit_steps += other.align_resplit_steps;
        self.align_max_window_frontier = self
            .align_max_window_frontier
            .max(other.align_max_window_frontier);
    }
}

impl AddAssign<&WorkCounters> for WorkCounters {
    fn add_assign(&mut self, rhs: &WorkCounters) {
        self.merge(rhs);
    }
}
