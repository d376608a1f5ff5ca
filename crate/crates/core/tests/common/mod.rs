#![allow(dead_code)]

use proptest::prelude::*;
use transloc::CostSet;

/// Strings over the first `sigma` lowercase letters.
pub fn word(sigma: u8, len: impl Into<proptest::collection::SizeRange>) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec((0..sigma).prop_map(|c| b'a' + c), len)
}

/// `(x, y)` with `1 ≤ |x| ≤ max_m` and `|x| ≤ |y| ≤ max_n`.
pub fn pattern_and_text(max_m: usize, max_n: usize) -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    (prop_oneof![Just(2u8), Just(4u8)], 1..=max_m).prop_flat_map(move |(sigma, m)| {
        (word(sigma, m), word(sigma, m..=max_n.max(m)))
    })
}

/// Applies non-overlapping translocations to `x`: each chosen block `x[i..i+len]`
/// is rotated left by `h`. `cuts` supplies the random choices.
pub fn translocate(x: &[u8], cuts: &[(bool, usize, usize)]) -> Vec<u8> {
    let mut out = Vec::with_capacity(x.len());
    let mut i = 0;
    let mut it = cuts.iter().cycle();
    while i < x.len() {
        let &(swap, a, b) = it.next().unwrap();
        let rest = x.len() - i;
        if swap && rest >= 2 {
            let len = 2 + a % (rest - 1);
            let h = 1 + b % (len - 1);
            out.extend_from_slice(&x[i + h..i + len]);
            out.extend_from_slice(&x[i..i + h]);
            i += len;
        } else {
            out.push(x[i]);
            i += 1;
        }
    }
    out
}

/// Full cost matrix `q[i][j]` for aligning `x[..i]` with a suffix of `y[..j]`,
/// straight from the recurrence with direct slice comparisons.
pub fn reference_costs(x: &[u8], y: &[u8], delta: usize) -> Vec<Vec<CostSet>> {
    let (m, n) = (x.len(), y.len());
    let mut q = vec![vec![CostSet::new(); n + 1]; m + 1];
    q[0].fill(CostSet::singleton(0));
    for j in 1..=n {
        for i in 1..=m.min(j) {
            let mut s = CostSet::new();
            if x[i - 1] == y[j - 1] {
                s.union_with(&q[i - 1][j - 1]);
            }
            for len in 2..=i {
                for h in 1..len {
                    let k = len - h;
                    let (xs, ys) = (&x[i - len..i], &y[j - len..j]);
                    if xs[..h] == ys[k..] && xs[h..] == ys[..k] {
                        let from = q[i - len][j - len].clone();
                        s.union_shifted(&from, delta);
                    }
                }
            }
            q[i][j] = s;
        }
    }
    q
}
