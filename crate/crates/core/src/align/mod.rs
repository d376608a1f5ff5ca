//! The attempt engine: each text window is aligned with the pattern left to
//! right, tracking translocation attempts.
//!
//! An attempt `(s1, k1, s2, k2)` describes a block `Z·W` of the pattern,
//! `Z = x[s1+1..s2]` and `W = x[s2+1..]`, that the window is reading in swapped
//! order: the first `k2` window symbols of the block matched `x[s2+1..s2+k2]`,
//! the following `k1` matched `x[s1+1..s1+k1]`. While `k1` is undefined the
//! right factor `W` may still grow. When `s1 + k1` reaches `s2` the block is
//! complete and the attempt closes. A closed attempt has only `s1`, which then
//! equals the number of window symbols read.
//!
//! Because factor boundaries are not known in advance, a partial left factor
//! can also be re-split: a border of `x[s1+1..s2+k2]` of length `b` lets the
//! last `b` symbols credited to `W` be credited to `Z` instead.
//!
//! Attempts carry the set of translocation counts that reach them, so one
//! closed attempt per frontier suffices for every variant.

mod tables;

use rayon::prelude::*;

pub use tables::{
    compute_border_tables, compute_border_tables_with, compute_next_position, BorderMode,
    BorderSetTable, NextPosTable, ShortestBorderTable,
};

use crate::bench::WorkCounters;
use crate::config::SearchConfig;
use crate::costs::CostSet;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::report::{ReportBuilder, SearchReport};

/// A translocation attempt. `None` stands for an undefined field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslocationAttempt {
    pub s1: usize,
    pub k1: Option<usize>,
    pub s2: Option<usize>,
    pub k2: Option<usize>,
    /// Translocation counts with which this attempt is reached.
    pub costs: CostSet,
}

impl TranslocationAttempt {
    pub fn is_closed(&self) -> bool {
        self.k1.is_none() && self.s2.is_none() && self.k2.is_none()
    }

    /// Window symbols accounted for: `s1 + k1 + k2`, undefined fields as 0.
    pub fn consumed(&self) -> usize {
        self.s1 + self.k1.unwrap_or(0) + self.k2.unwrap_or(0)
    }
}

/// The attempts alive after `i` window symbols.
#[derive(Debug, Clone, Default)]
pub struct AttemptFrontier {
    pub i: usize,
    /// Costs of the closed attempt `(i, -, -, -)`, if it is alive.
    pub closed: Option<CostSet>,
    pub open: Vec<Open>,
}

/// An attempt whose right key position is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Open {
    pub s1: usize,
    pub k1: Option<usize>,
    pub s2: usize,
    pub k2: usize,
    pub costs: CostSet,
}

impl AttemptFrontier {
    pub fn len(&self) -> usize {
        self.open.len() + usize::from(self.closed.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every attempt in quintuple form, closed one first.
    pub fn attempts(&self) -> impl Iterator<Item = TranslocationAttempt> + '_ {
        let closed = self.closed.iter().map(|costs| TranslocationAttempt {
            s1: self.i,
            k1: None,
            s2: None,
            k2: None,
            costs: costs.clone(),
        });
        closed.chain(self.open.iter().map(|a| TranslocationAttempt {
            s1: a.s1,
            k1: a.k1,
            s2: Some(a.s2),
            k2: Some(a.k2),
            costs: a.costs.clone(),
        }))
    }
}

/// Preprocessed pattern, reusable across windows.
#[derive(Debug, Clone)]
pub struct Aligner {
    x: Vec<u8>,
    mu: NextPosTable,
    psi: BorderSetTable,
    rho: ShortestBorderTable,
}

impl Aligner {
    pub fn new(x: &Pattern) -> Self {
        Aligner::with_mode(x, BorderMode::for_len(x.len()))
    }

    pub fn with_mode(x: &Pattern, mode: BorderMode) -> Self {
        let (psi, rho) = compute_border_tables_with(x, mode);
        Aligner {
            x: x.as_bytes().to_vec(),
            mu: compute_next_position(x),
            psi,
            rho,
        }
    }

    pub fn border_mode(&self) -> BorderMode {
        self.psi.mode()
    }

    /// Costs `t ≤ delta` with which the pattern aligns with `w`, `|w| = m`.
    pub fn window(&self, w: &[u8], delta: usize, counters: &mut WorkCounters) -> CostSet {
        self.run(w, delta, counters, None)
    }

    /// [`Aligner::window`], showing each frontier `Γ^(0)..Γ^(m)` to `trace`.
    pub fn window_traced(
        &self,
        w: &[u8],
        delta: usize,
        counters: &mut WorkCounters,
        mut trace: impl FnMut(&AttemptFrontier),
    ) -> CostSet {
        self.run(w, delta, counters, Some(&mut trace))
    }

    /// Does the block close early with a re-split of the right factor?
    ///
    /// With `b = |Z| - k1`, the last `b` symbols credited to `W` can complete
    /// `Z` when they form a border of `x[s1+1..s2+k2]` and the `k1` left
    /// symbols already read are a border of `Z` itself.
    #[inline]
    fn closes_early(&self, s1: usize, k1: usize, s2: usize, k2: usize) -> bool {
        let b = s2 - s1 - k1;
        b > 0
            && b < k2
            && self.psi.contains(s1 + 1, s2 + k2, b)
            && (k1 == 0 || self.psi.contains(s1 + 1, s2, k1))
    }

    fn run(
        &self,
        w: &[u8],
        delta: usize,
        counters: &mut WorkCounters,
        mut trace: Option<&mut dyn FnMut(&AttemptFrontier)>,
    ) -> CostSet {
        let x = &self.x;
        let m = x.len();
        assert_eq!(w.len(), m, "window length must equal pattern length");
        let check = cfg!(debug_assertions) && m <= 12;

        let mut frontier = AttemptFrontier {
            i: 0,
            closed: Some(CostSet::singleton(0)),
            open: Vec::new(),
        };
        let mut next_open: Vec<Open> = Vec::new();
        let mut processed = 0u64;
        let mut resplits = 0u64;

        for i in 1..=m {
            if let Some(t) = trace.as_mut() {
                t(&frontier);
            }
            processed += frontier.len() as u64;
            let c = w[i - 1];
            let mut closed = CostSet::new();
            next_open.clear();

            if let Some(costs) = &frontier.closed {
                if x[i - 1] == c {
                    closed.union_with(costs);
                }
                let opened = costs.shifted(delta);
                if !opened.is_empty() {
                    let mut r = self.mu.get(c, i);
                    while r <= m {
                        next_open.push(Open {
                            s1: i - 1,
                            k1: None,
                            s2: r - 1,
                            k2: 1,
                            costs: opened.clone(),
                        });
                        r = self.mu.get(c, r);
                    }
                }
            }

            for a in frontier.open.drain(..) {
                let Open { s1, k1, s2, k2, costs } = a;
                let k1 = match k1 {
                    Some(k1) => k1,
                    None if s2 + k2 < m && x[s2 + k2] == c => {
                        // right factor grows
                        if self.closes_early(s1, 0, s2, k2 + 1) {
                            closed.union_with(&costs);
                        }
                        next_open.push(Open {
                            s1,
                            k1: None,
                            s2,
                            k2: k2 + 1,
                            costs,
                        });
                        continue;
                    }
                    None => 0,
                };

                // left factor grows, possibly after a re-split
                let b = if x[s1 + k1] == c {
                    0
                } else {
                    let mut found = None;
                    let mut b = self.rho.get(s1 + 1, s2 + k2);
                    while b < k2 && s1 + k1 + b < s2 {
                        resplits += 1;
                        if self.psi.contains(s1 + 1, s2 + k2, b)
                            && (k1 == 0 || self.psi.contains(s1 + 1, s1 + k1 + b, k1))
                            && x[s1 + k1 + b] == c
                        {
                            found = Some(b);
                            break;
                        }
                        b += 1;
                    }
                    match found {
                        Some(b) => b,
                        None => continue,
                    }
                };
                let (nk1, nk2) = (k1 + b + 1, k2 - b);
                if s1 + nk1 == s2 {
                    closed.union_with(&costs);
                    continue;
                }
                if self.closes_early(s1, nk1, s2, nk2) {
                    closed.union_with(&costs);
                }
                next_open.push(Open {
                    s1,
                    k1: Some(nk1),
                    s2,
                    k2: nk2,
                    costs,
                });
            }

            std::mem::swap(&mut frontier.open, &mut next_open);
            frontier.closed = (!closed.is_empty()).then_some(closed);
            frontier.i = i;
            if check {
                self.check_frontier(&frontier, w);
            }
        }
        if let Some(t) = trace.as_mut() {
            t(&frontier);
        }

        let m3 = (m as u64).pow(3);
        debug_assert!(processed <= m3, "frontier sum {processed} exceeds m³ = {m3}");
        counters.align_attempts += processed;
        counters.align_resplit_steps += resplits;
        counters.align_max_window_frontier = counters.align_max_window_frontier.max(processed);
        frontier.closed.unwrap_or_default()
    }

    /// Attempt invariants, by direct comparison against the window.
    fn check_frontier(&self, f: &AttemptFrontier, w: &[u8]) {
        let x = &self.x;
        let mut keys = std::collections::HashSet::new();
        for a in &f.open {
            let k1 = a.k1.unwrap_or(0);
            assert_eq!(a.s1 + k1 + a.k2, f.i, "attempt {a:?} off frontier {}", f.i);
            assert!(a.s1 + k1 < a.s2 && a.s2 + a.k2 <= x.len(), "attempt {a:?} out of bounds");
            assert_eq!(w[a.s1..a.s1 + a.k2], x[a.s2..a.s2 + a.k2], "right factor of {a:?}");
            assert_eq!(
                w[a.s1 + a.k2..a.s1 + a.k2 + k1],
                x[a.s1..a.s1 + k1],
                "left factor of {a:?}"
            );
            assert!(keys.insert((a.s1, a.s2)), "duplicate attempt {a:?}");
        }
    }
}

/// Costs `t ≤ delta` with which `x` aligns with `w`.
pub fn align_window(x: &Pattern, w: &[u8], delta: usize) -> Result<CostSet> {
    if w.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: w.len(),
        });
    }
    let delta = delta.min(x.len() / 2);
    Ok(Aligner::new(x).window(w, delta, &mut WorkCounters::default()))
}

/// Runs the attempt engine on every window of `y`.
pub fn align_search(x: &Pattern, y: &[u8], cfg: &SearchConfig) -> Result<SearchReport> {
    align_search_counted(x, y, cfg, &mut WorkCounters::default())
}

/// [`align_search`], tallying attempts and re-split steps into `counters`.
/// Windows are aligned in parallel; results are merged in window order.
pub fn align_search_counted(
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
) -> Result<SearchReport> {
    let m = x.len();
    if m > y.len() {
        return Err(Error::PatternLongerThanText {
            pattern: m,
            text: y.len(),
        });
    }
    let delta = cfg.effective_delta(m);
    let aligner = Aligner::new(x);
    let results: Vec<(CostSet, WorkCounters)> = y
        .par_windows(m)
        .with_min_len(64)
        .map(|w| {
            let mut local = WorkCounters::default();
            let costs = aligner.window(w, delta, &mut local);
            (costs, local)
        })
        .collect();
    let mut report = ReportBuilder::new(cfg.variant);
    for (start, (costs, local)) in results.into_iter().enumerate() {
        counters.merge(&local);
        if !costs.is_empty() {
            report.record(start, || costs);
        }
    }
    Ok(report.finish())
}
