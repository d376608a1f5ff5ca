//! Ground truth: the translocation semantics evaluated by brute force.
//!
//! A string `x` is transformed into `z` by cutting `x` into consecutive
//! blocks, where each block is either a single symbol copied as is or a pair of
//! adjacent non-empty factors `uv` written as `vu` (one translocation). No
//! symbol takes part in more than one translocation.

use std::collections::{BTreeSet, HashMap};

use crate::config::SearchConfig;
use crate::costs::CostSet;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::report::{ReportBuilder, SearchReport};

/// Longest string accepted by [`enumerate_utd_images`].
pub const MAX_ENUMERATION_LEN: usize = 12;

/// Whether [`utd_cost_set_with`] caches prefix results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Memoization {
    On,
    Off,
}

/// The set of translocation counts `t ≤ delta` that turn `x` into `z`.
///
/// An empty set means `z` is not reachable within the bound. `0` belongs to
/// the set exactly when `x == z`.
pub fn utd_cost_set(x: &[u8], z: &[u8], delta: usize) -> Result<CostSet> {
    utd_cost_set_with(x, z, delta, Memoization::On)
}

pub fn utd_cost_set_with(
    x: &[u8],
    z: &[u8],
    delta: usize,
    memo: Memoization,
) -> Result<CostSet> {
    if x.len() != z.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: z.len(),
        });
    }
    Ok(match memo {
        Memoization::On => prefix_costs_table(x, z, delta),
        Memoization::Off => prefix_costs(x, z, x.len(), delta),
    })
}

/// Does the block ending at prefix length `i`, made of a left factor of
/// length `h` and a right factor of length `k` of `x`, appear swapped in `z`?
///
/// In `x` the block reads `u·v` with `|u| = h`, `|v| = k`; in `z` it reads `v·u`.
#[inline]
fn block_swaps(x: &[u8], z: &[u8], i: usize, h: usize, k: usize) -> bool {
    let start = i - h - k;
    x[start..start + h] == z[i - h..i] && x[start + h..i] == z[start..start + k]
}

fn prefix_costs_table(x: &[u8], z: &[u8], delta: usize) -> CostSet {
    let m = x.len();
    let mut sets: Vec<CostSet> = Vec::with_capacity(m + 1);
    sets.push(CostSet::singleton(0));
    for i in 1..=m {
        let mut s = CostSet::new();
        if x[i - 1] == z[i - 1] {
            s.union_with(&sets[i - 1]);
        }
        for len in 2..=i {
            for h in 1..len {
                if block_swaps(x, z, i, h, len - h) {
                    s.union_shifted(&sets[i - len], delta);
                }
            }
        }
        sets.push(s);
    }
    sets.pop().unwrap_or_default()
}

fn prefix_costs(x: &[u8], z: &[u8], i: usize, delta: usize) -> CostSet {
    if i == 0 {
        return CostSet::singleton(0);
    }
    let mut s = CostSet::new();
    if x[i - 1] == z[i - 1] {
        s.union_with(&prefix_costs(x, z, i - 1, delta));
    }
    if delta > 0 {
        for len in 2..=i {
            for h in 1..len {
                if block_swaps(x, z, i, h, len - h) {
                    s.union_shifted(&prefix_costs(x, z, i - len, delta), delta);
                }
            }
        }
    }
    s
}

/// Applies [`utd_cost_set`] to every window of `y` and aggregates per variant.
pub fn oracle_search(x: &Pattern, y: &[u8], cfg: &SearchConfig) -> Result<SearchReport> {
    let m = x.len();
    if m > y.len() {
        return Err(Error::PatternLongerThanText {
            pattern: m,
            text: y.len(),
        });
    }
    let delta = cfg.effective_delta(m);
    let mut report = ReportBuilder::new(cfg.variant);
    for (start, window) in y.windows(m).enumerate() {
        let costs = prefix_costs_table(x.as_bytes(), window, delta);
        if !costs.is_empty() {
            report.record(start, || costs);
        }
    }
    Ok(report.finish())
}

/// Every string `z` that `x` can be turned into with at most `delta`
/// non-overlapping translocations.
///
/// Built by generating all block decompositions of `x` directly, without going
/// through [`utd_cost_set`], so the two serve as checks on each other.
pub fn enumerate_utd_images(x: &[u8], delta: usize) -> Result<BTreeSet<Vec<u8>>> {
    if x.len() > MAX_ENUMERATION_LEN {
        return Err(Error::EnumerationTooLarge {
            len: x.len(),
            limit: MAX_ENUMERATION_LEN,
        });
    }
    let mut memo = HashMap::new();
    Ok(suffix_images(x, 0, delta.min(x.len() / 2), &mut memo))
}

fn suffix_images(
    x: &[u8],
    from: usize,
    budget: usize,
    memo: &mut HashMap<(usize, usize), BTreeSet<Vec<u8>>>,
) -> BTreeSet<Vec<u8>> {
    if from == x.len() {
        return BTreeSet::from([Vec::new()]);
    }
    if let Some(done) = memo.get(&(from, budget)) {
        return done.clone();
    }
    let mut out = BTreeSet::new();
    for tail in suffix_images(x, from + 1, budget, memo) {
        let mut z = Vec::with_capacity(x.len() - from);
        z.push(x[from]);
        z.extend_from_slice(&tail);
        out.insert(z);
    }
    if budget > 0 {
        for len in 2..=x.len() - from {
            let rest = suffix_images(x, from + len, budget - 1, memo);
            let block = &x[from..from + len];
            for h in 1..len {
                let mut head = block[h..].to_vec();
                head.extend_from_slice(&block[..h]);
                for tail in &rest {
                    let mut z = head.clone();
                    z.extend_from_slice(tail);
                    out.insert(z);
                }
            }
        }
    }
    memo.insert((from, budget), out.clone());
    out
}
