//! Pattern preprocessing for the attempt engine: next positions and borders.
//!
//! All positions are 1-based. A border of `x[i..j]` is a non-empty string that
//! is both a prefix and a suffix of it; the whole of `x[i..j]` counts.

use crate::alphabet::Alphabet;
use crate::pattern::Pattern;

/// `μ(c, i)`: the least `j > i` with `x[j] = c`, or `m + 1`.
#[derive(Debug, Clone)]
pub struct NextPosTable {
    alphabet: Alphabet,
    m: usize,
    /// `table[rank(c) * (m + 1) + i]` for `0 ≤ i ≤ m`
    table: Vec<u32>,
}

pub fn compute_next_position(x: &Pattern) -> NextPosTable {
    NextPosTable::new(x)
}

impl NextPosTable {
    pub fn new(x: &Pattern) -> Self {
        let alphabet = x.alphabet().clone();
        let m = x.len();
        let width = m + 1;
        let mut table = vec![m as u32 + 1; alphabet.size() * width];
        for r in 0..alphabet.size() {
            let row = &mut table[r * width..(r + 1) * width];
            for i in (0..m).rev() {
                row[i] = if alphabet.rank(x.at(i + 1)) == Some(r) {
                    i as u32 + 1
                } else {
                    row[i + 1]
                };
            }
        }
        NextPosTable { alphabet, m, table }
    }

    /// `μ(c, i)` for `0 ≤ i ≤ m`.
    #[inline]
    pub fn get(&self, c: u8, i: usize) -> usize {
        debug_assert!(i <= self.m);
        match self.alphabet.rank(c) {
            Some(r) => self.table[r * (self.m + 1) + i] as usize,
            None => self.m + 1,
        }
    }
}

/// How [`BorderSetTable`] answers queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorderMode {
    /// Precomputed bit per `(i, j, k)`: `O(m³)` bits, `O(1)` queries.
    Full,
    /// Direct slice comparison: `O(m)` per query, no extra storage.
    Compact,
}

impl BorderMode {
    /// Patterns longer than this get [`BorderMode::Compact`] by default
    /// (the full table would exceed 2 MiB).
    pub const FULL_LIMIT: usize = 256;

    pub fn for_len(m: usize) -> BorderMode {
        if m <= Self::FULL_LIMIT {
            BorderMode::Full
        } else {
            BorderMode::Compact
        }
    }
}

/// `Ψ(i, j, k)`: whether `k` is a border length of `x[i..j]`.
#[derive(Debug, Clone)]
pub struct BorderSetTable {
    x: Vec<u8>,
    /// For `Full`, bit `((i-1)·m + (j-1))·(m+1) + k`.
    bits: Option<Vec<u64>>,
}

/// `ρ(i, j)`: the shortest border length of `x[i..j]`.
#[derive(Debug, Clone)]
pub struct ShortestBorderTable {
    m: usize,
    rho: Vec<u32>,
}

impl ShortestBorderTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i <= j && j <= self.m, "({i}, {j}) out of range");
        self.rho[(i - 1) * self.m + (j - 1)] as usize
    }
}

impl BorderSetTable {
    pub fn mode(&self) -> BorderMode {
        if self.bits.is_some() {
            BorderMode::Full
        } else {
            BorderMode::Compact
        }
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        if k == 0 || i == 0 || j < i || k > j - i + 1 || j > self.x.len() {
            return false;
        }
        match &self.bits {
            Some(bits) => {
                let bit = bit_index(self.x.len(), i, j, k);
                bits[bit / 64] & (1 << (bit % 64)) != 0
            }
            None => self.x[i - 1..i - 1 + k] == self.x[j - k..j],
        }
    }

    /// All border lengths of `x[i..j]`, ascending.
    pub fn borders(&self, i: usize, j: usize) -> Vec<usize> {
        if i == 0 || j < i {
            return Vec::new();
        }
        (1..=j - i + 1).filter(|&k| self.contains(i, j, k)).collect()
    }
}

fn bit_index(m: usize, i: usize, j: usize, k: usize) -> usize {
    ((i - 1) * m + (j - 1)) * (m + 1) + k
}

/// Builds Ψ and ρ with one prefix-function pass per start position.
pub fn compute_border_tables(x: &Pattern) -> (BorderSetTable, ShortestBorderTable) {
    compute_border_tables_with(x, BorderMode::for_len(x.len()))
}

pub fn compute_border_tables_with(
    x: &Pattern,
    mode: BorderMode,
) -> (BorderSetTable, ShortestBorderTable) {
    let m = x.len();
    let xs = x.as_bytes();
    let mut rho = vec![0u32; m * m];
    let mut bits = (mode == BorderMode::Full).then(|| vec![0u64; (m * m * (m + 1)).div_ceil(64)]);
    let mut pi = vec![0usize; m + 1];
    let mut shortest = vec![0usize; m + 1];
    for i in 1..=m {
        let s = &xs[i - 1..];
        // pi[l]: longest proper border of s[..l]
        pi[1] = 0;
        for l in 2..=s.len() {
            let mut b = pi[l - 1];
            while b > 0 && s[b] != s[l - 1] {
                b = pi[b];
            }
            pi[l] = if s[b] == s[l - 1] { b + 1 } else { 0 };
        }
        for l in 1..=s.len() {
            shortest[l] = if pi[l] == 0 { l } else { shortest[pi[l]] };
            let j = i + l - 1;
            rho[(i - 1) * m + (j - 1)] = shortest[l] as u32;
            if let Some(bits) = bits.as_mut() {
                let mut b = l;
                while b > 0 {
                    let bit = bit_index(m, i, j, b);
                    bits[bit / 64] |= 1 << (bit % 64);
                    b = pi[b];
                }
            }
        }
    }
    (
        BorderSetTable {
            x: xs.to_vec(),
            bits,
        },
        ShortestBorderTable { m, rho },
    )
}
