//! Translocation-count sets and the cell domains used by the table-driven
//! engines.
//!
//! A cell of the cost table summarises the ways a pattern prefix aligns with a
//! text suffix. How much of that information is kept depends on the variant:
//! reachability only for (a), the minimum count for (b)/(c), and the whole set
//! of counts for (d).

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of translocation counts, stored as a little-endian bitset.
#[derive(Clone, Default)]
pub struct CostSet {
    words: SmallVec<[u64; 2]>,
}

impl CostSet {
    pub fn new() -> Self {
        CostSet::default()
    }

    pub fn singleton(t: usize) -> Self {
        let mut s = CostSet::new();
        s.insert(t);
        s
    }

    pub fn insert(&mut self, t: usize) {
        let w = t / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (t % WORD);
    }

    pub fn contains(&self, t: usize) -> bool {
        self.words
            .get(t / WORD)
            .is_some_and(|w| w & (1 << (t % WORD)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn clear(&mut self) {
        self.words.clear();
    }

    pub fn min(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn union_with(&mut self, other: &CostSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Adds `{t + 1 : t ∈ other, t + 1 ≤ limit}`.
    pub fn union_shifted(&mut self, other: &CostSet, limit: usize) {
        let needed = (limit / WORD + 1).min(other.words.len() + 1);
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        let mut carry = 0u64;
        for (i, slot) in self.words.iter_mut().enumerate().take(needed) {
            let w = other.words.get(i).copied().unwrap_or(0);
            let mut shifted = (w << 1) | carry;
            carry = w >> (WORD - 1);
            if i == limit / WORD {
                let bits = limit % WORD + 1;
                if bits < WORD {
                    shifted &= (1u64 << bits) - 1;
                }
            }
            *slot |= shifted;
        }
    }

    /// `{t + 1 : t ∈ self, t + 1 ≤ limit}` as a new set.
    pub fn shifted(&self, limit: usize) -> CostSet {
        let mut out = CostSet::new();
        out.union_shifted(self, limit);
        out
    }

    /// Removes every element greater than `limit`.
    pub fn truncate(&mut self, limit: usize) {
        let keep = limit / WORD + 1;
        if self.words.len() > keep {
            self.words.truncate(keep);
        }
        if let Some(last) = self.words.get_mut(keep - 1) {
            let bits = limit % WORD + 1;
            if bits < WORD {
                *last &= (1u64 << bits) - 1;
            }
        }
    }
}

impl PartialEq for CostSet {
    fn eq(&self, other: &Self) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| {
            self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0)
        })
    }
}

impl Eq for CostSet {}

impl fmt::Debug for CostSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for CostSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = CostSet::new();
        for t in iter {
            s.insert(t);
        }
        s
    }
}

impl Serialize for CostSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for t in self.iter() {
            seq.serialize_element(&t)?;
        }
        seq.end()
    }
}

/// Cell algebra shared by the dynamic-programming and automaton engines.
///
/// `absorb` folds in an alignment that extends a predecessor by one matching
/// symbol; `absorb_translocated` folds in one that appends a translocated
/// block, which costs one more translocation and is dropped past the bound.
pub(crate) trait CostDomain {
    type Cell: Clone + fmt::Debug;

    fn unreached(&self) -> Self::Cell;
    fn origin(&self) -> Self::Cell;
    fn is_reached(&self, cell: &Self::Cell) -> bool;
    fn absorb(&self, into: &mut Self::Cell, from: &Self::Cell);
    fn absorb_translocated(&self, into: &mut Self::Cell, from: &Self::Cell);
    /// The costs a cell stands for, as far as the domain records them.
    fn costs(&self, cell: &Self::Cell) -> CostSet;
}

/// Variant (a): a prefix either aligns or it does not.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Reachability;

impl CostDomain for Reachability {
    type Cell = bool;

    fn unreached(&self) -> bool {
        false
    }
    fn origin(&self) -> bool {
        true
    }
    fn is_reached(&self, cell: &bool) -> bool {
        *cell
    }
    fn absorb(&self, into: &mut bool, from: &bool) {
        *into |= *from;
    }
    fn absorb_translocated(&self, into: &mut bool, from: &bool) {
        *into |= *from;
    }
    fn costs(&self, _cell: &bool) -> CostSet {
        CostSet::new()
    }
}

pub(crate) const UNREACHED: u32 = u32::MAX;

/// Variants (b) and (c): the least translocation count, `UNREACHED` for +∞.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MinCost {
    pub delta: u32,
}

impl CostDomain for MinCost {
    type Cell = u32;

    fn unreached(&self) -> u32 {
        UNREACHED
    }
    fn origin(&self) -> u32 {
        0
    }
    fn is_reached(&self, cell: &u32) -> bool {
        *cell != UNREACHED
    }
    fn absorb(&self, into: &mut u32, from: &u32) {
        *into = (*into).min(*from);
    }
    fn absorb_translocated(&self, into: &mut u32, from: &u32) {
        if *from != UNREACHED && *from < self.delta {
            *into = (*into).min(*from + 1);
        }
    }
    fn costs(&self, cell: &u32) -> CostSet {
        if *cell == UNREACHED {
            CostSet::new()
        } else {
            CostSet::singleton(*cell as usize)
        }
    }
}

/// Variant (d): every achievable count up to δ.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AllCosts {
    pub delta: usize,
}

impl CostDomain for AllCosts {
    type Cell = CostSet;

    fn unreached(&self) -> CostSet {
        CostSet::new()
    }
    fn origin(&self) -> CostSet {
        CostSet::singleton(0)
    }
    fn is_reached(&self, cell: &CostSet) -> bool {
        !cell.is_empty()
    }
    fn absorb(&self, into: &mut CostSet, from: &CostSet) {
        into.union_with(from);
    }
    fn absorb_translocated(&self, into: &mut CostSet, from: &CostSet) {
        into.union_shifted(from, self.delta);
    }
    fn costs(&self, cell: &CostSet) -> CostSet {
        cell.clone()
    }
}
