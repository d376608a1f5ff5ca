//! The dynamic-programming engine.
//!
//! Two tables are swept column by column over the text:
//!
//! * `F[i, j]`, the length of the longest common suffix of `x[1..i]` and
//!   `y[1..j]`, so that `F[i, j] ≥ k` says the length-`k` factor ending at
//!   `x[i]` also ends at `y[j]`;
//! * `Q[i, j]`, what is known about aligning `x[1..i]` with a suffix of
//!   `y[1..j]`, in the cell domain of the requested variant.
//!
//! A cell of `Q` is reached either by a plain symbol match from
//! `Q[i-1, j-1]`, or by a trailing block `uv → vu` with `|u| = h`, `|v| = k`,
//! from `Q[i-h-k, j-h-k]` at one extra translocation. Only the last `m + 1`
//! columns of each table are kept.

use std::mem;

use crate::bench::WorkCounters;
use crate::config::{SearchConfig, Variant};
use crate::costs::{AllCosts, CostDomain, CostSet, MinCost, Reachability};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::report::{ReportBuilder, SearchReport};

/// Rolling longest-common-suffix table.
#[derive(Debug, Clone)]
pub struct FactorTable {
    m: usize,
    /// Index of the newest column; `0` before any text has been read.
    j: usize,
    cols: Vec<Vec<u32>>,
}

impl FactorTable {
    /// An empty table for a pattern of length `m`, positioned at column 0.
    pub fn new(m: usize) -> Self {
        FactorTable {
            m,
            j: 0,
            cols: vec![vec![0; m + 1]; m + 1],
        }
    }

    /// Index of the newest column.
    pub fn current(&self) -> usize {
        self.j
    }

    /// Computes column `j + 1` from the text symbol `c = y[j + 1]`.
    ///
    /// `F[i, j+1] = F[i-1, j] + 1` when `x[i] = c`, and `0` otherwise.
    pub fn advance_factor_column(&mut self, x: &[u8], c: u8) {
        debug_assert_eq!(x.len(), self.m);
        let width = self.m + 1;
        let prev_slot = self.j % width;
        self.j += 1;
        let slot = self.j % width;
        let mut col = mem::take(&mut self.cols[slot]);
        {
            let prev = &self.cols[prev_slot];
            col[0] = 0;
            for i in 1..=self.m {
                col[i] = if x[i - 1] == c { prev[i - 1] + 1 } else { 0 };
            }
        }
        self.cols[slot] = col;
    }

    /// `F[i, j]`, for `j` among the last `m + 1` columns.
    ///
    /// # Panics
    ///
    /// If column `j` is not held.
    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(
            j <= self.j && self.j - j <= self.m,
            "column {j} is not held (newest is {})",
            self.j
        );
        self.cols[j % (self.m + 1)][i] as usize
    }

    /// `{ i : F[i, j] ≥ k }` in increasing order.
    pub fn positions_with_suffix(&self, j: usize, k: usize) -> Vec<usize> {
        (1..=self.m).filter(|&i| self.get(i, j) >= k).collect()
    }
}

/// A case-(ii) combination observed during [`dp_search_observed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStep {
    /// Pattern prefix length of the updated cell.
    pub i: usize,
    /// Text prefix length of the updated cell.
    pub j: usize,
    /// Length of the block's leading factor in the pattern.
    pub h: usize,
    /// Length of the block's trailing factor in the pattern.
    pub k: usize,
    /// Costs recorded at the predecessor `Q[i-h-k, j-h-k]`; the block adds one.
    pub predecessor: CostSet,
}

/// Runs the dynamic-programming engine.
pub fn dp_search(x: &Pattern, y: &[u8], cfg: &SearchConfig) -> Result<SearchReport> {
    dp_search_counted(x, y, cfg, &mut WorkCounters::default())
}

/// [`dp_search`], tallying guard evaluations into `counters`.
pub fn dp_search_counted(
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
) -> Result<SearchReport> {
    search(x, y, cfg, counters, None)
}

/// [`dp_search_counted`] that also reports every case-(ii) combination with a
/// reached predecessor. Costs in the events are only meaningful for variant (d).
pub fn dp_search_observed(
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
    mut observer: impl FnMut(BlockStep),
) -> Result<SearchReport> {
    search(x, y, cfg, counters, Some(&mut observer))
}

fn search(
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
    observer: Option<&mut dyn FnMut(BlockStep)>,
) -> Result<SearchReport> {
    let m = x.len();
    if m > y.len() {
        return Err(Error::PatternLongerThanText {
            pattern: m,
            text: y.len(),
        });
    }
    let delta = cfg.effective_delta(m);
    let report = ReportBuilder::new(cfg.variant);
    let x = x.as_bytes();
    Ok(match cfg.variant {
        Variant::A => sweep(x, y, Reachability, report, counters, observer),
        Variant::B | Variant::C => sweep(
            x,
            y,
            MinCost {
                delta: delta as u32,
            },
            report,
            counters,
            observer,
        ),
        Variant::D => sweep(x, y, AllCosts { delta }, report, counters, observer),
    })
}

fn sweep<D: CostDomain>(
    x: &[u8],
    y: &[u8],
    domain: D,
    mut report: ReportBuilder,
    counters: &mut WorkCounters,
    mut observer: Option<&mut dyn FnMut(BlockStep)>,
) -> SearchReport {
    let m = x.len();
    let width = m + 1;
    let mut f = FactorTable::new(m);
    let mut q: Vec<Vec<D::Cell>> = (0..width)
        .map(|_| {
            let mut col = vec![domain.unreached(); width];
            col[0] = domain.origin();
            col
        })
        .collect();
    let mut guards = 0u64;

    for (j, &c) in (1..).zip(y) {
        f.advance_factor_column(x, c);
        let mut col = mem::take(&mut q[j % width]);
        col.fill(domain.unreached());
        col[0] = domain.origin();
        for i in 1..=m {
            let mut cell = domain.unreached();
            if x[i - 1] == c {
                domain.absorb(&mut cell, &q[(j - 1) % width][i - 1]);
            }
            for k in 1..i {
                for h in 1..=i - k {
                    guards += 1;
                    // (i-k) ∈ F^h_j  and  i ∈ F^k_{j-h}
                    if f.get(i - k, j) >= h && f.get(i, j - h) >= k {
                        let from = &q[(j - h - k) % width][i - h - k];
                        if domain.is_reached(from) {
                            domain.absorb_translocated(&mut cell, from);
                            if let Some(obs) = observer.as_mut() {
                                obs(BlockStep {
                                    i,
                                    j,
                                    h,
                                    k,
                                    predecessor: domain.costs(from),
                                });
                            }
                        }
                    }
                }
            }
            col[i] = cell;
        }
        if j >= m && domain.is_reached(&col[m]) {
            report.record(j - m, || domain.costs(&col[m]));
        }
        q[j % width] = col;
    }
    counters.dp_guard_evaluations += guards;
    report.finish()
}
