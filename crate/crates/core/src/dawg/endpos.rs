//! End-position sets of automaton states.

/// How end-position sets are stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EndPosRepr {
    /// Sorted position arrays, binary-searched: `O(log m)` membership.
    #[cfg_attr(not(feature = "endpos-bitset"), default)]
    Sorted,
    /// One `(m + 1)`-bit row per state: `O(1)` membership, `O(m²)` bits.
    #[cfg_attr(feature = "endpos-bitset", default)]
    Bitset,
}

#[derive(Debug, Clone)]
pub(crate) enum EndPosStore {
    Sorted(Vec<Vec<u32>>),
    Bitset { row_words: usize, bits: Vec<u64> },
}

impl EndPosStore {
    /// `lists[q]` must be sorted ascending.
    pub(crate) fn from_lists(lists: Vec<Vec<u32>>, m: usize, repr: EndPosRepr) -> Self {
        match repr {
            EndPosRepr::Sorted => EndPosStore::Sorted(lists),
            EndPosRepr::Bitset => {
                let row_words = (m + 1).div_ceil(64);
                let mut bits = vec![0u64; row_words * lists.len()];
                for (q, list) in lists.iter().enumerate() {
                    let row = &mut bits[q * row_words..(q + 1) * row_words];
                    for &p in list {
                        row[p as usize / 64] |= 1 << (p % 64);
                    }
                }
                EndPosStore::Bitset { row_words, bits }
            }
        }
    }

    pub(crate) fn repr(&self) -> EndPosRepr {
        match self {
            EndPosStore::Sorted(_) => EndPosRepr::Sorted,
            EndPosStore::Bitset { .. } => EndPosRepr::Bitset,
        }
    }

    #[inline]
    pub(crate) fn contains(&self, q: usize, pos: usize) -> bool {
        match self {
            EndPosStore::Sorted(lists) => u32::try_from(pos)
                .is_ok_and(|p| lists[q].binary_search(&p).is_ok()),
            EndPosStore::Bitset { row_words, bits } => {
                let w = pos / 64;
                w < *row_words && bits[q * row_words + w] & (1 << (pos % 64)) != 0
            }
        }
    }

    pub(crate) fn positions(&self, q: usize) -> Vec<usize> {
        match self {
            EndPosStore::Sorted(lists) => lists[q].iter().map(|&p| p as usize).collect(),
            EndPosStore::Bitset { row_words, bits } => {
                let row = &bits[q * row_words..(q + 1) * row_words];
                (0..row_words * 64)
                    .filter(|&p| row[p / 64] & (1 << (p % 64)) != 0)
                    .collect()
            }
        }
    }
}
