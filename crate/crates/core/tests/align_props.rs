mod common;

use common::{translocate, word};
use proptest::prelude::*;
use transloc::align::{
    compute_border_tables_with, compute_next_position, Aligner, BorderMode,
};
use transloc::bench::WorkCounters;
use transloc::oracle::utd_cost_set;
use transloc::Pattern;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn border_tables_match_definition(x in prop_oneof![word(2, 1..=14), word(3, 1..=14)]) {
        let p = Pattern::new(x.clone()).unwrap();
        let m = x.len();
        for mode in [BorderMode::Full, BorderMode::Compact] {
            let (psi, rho) = compute_border_tables_with(&p, mode);
            for i in 1..=m {
                for j in i..=m {
                    let s = &x[i - 1..j];
                    let want: Vec<usize> = (1..=s.len()).filter(|&k| s[..k] == s[s.len() - k..]).collect();
                    prop_assert_eq!(psi.borders(i, j), want.clone());
                    prop_assert_eq!(rho.get(i, j), want[0]);
                }
            }
        }
    }

    #[test]
    fn next_position_laws(x in word(4, 1..=14)) {
        let p = Pattern::new(x.clone()).unwrap();
        let mu = compute_next_position(&p);
        let m = x.len();
        for c in b"abcdz".iter().copied() {
            let mut prev = 0;
            for i in 0..=m {
                let r = mu.get(c, i);
                prop_assert!(i < r && r <= m + 1);
                prop_assert!(r >= prev);
                prev = r;
                if r <= m {
                    prop_assert_eq!(x[r - 1], c);
                }
                prop_assert!(x[i..r - 1].iter().all(|&s| s != c));
            }
        }
    }

    #[test]
    fn windows_match_oracle(
        x in prop_oneof![word(2, 1..=12), word(3, 1..=12), word(4, 1..=12)],
        cuts in proptest::collection::vec(any::<(bool, usize, usize)>(), 1..8),
        scramble in any::<bool>(),
        delta in 0usize..7,
    ) {
        let p = Pattern::new(x.clone()).unwrap();
        let delta = delta.min(x.len() / 2);
        let w = if scramble {
            let mut w = x.clone();
            w.rotate_left(cuts[0].1 % x.len());
            w
        } else {
            translocate(&x, &cuts)
        };
        let want = utd_cost_set(&x, &w, delta).unwrap();
        for mode in [BorderMode::Full, BorderMode::Compact] {
            let got = Aligner::with_mode(&p, mode).window(&w, delta, &mut WorkCounters::default());
            prop_assert_eq!(&got, &want);
        }
    }

    #[test]
    fn frontier_invariants(
        x in prop_oneof![word(2, 1..=12), word(4, 1..=12)],
        cuts in proptest::collection::vec(any::<(bool, usize, usize)>(), 1..8),
        delta in 0usize..7,
    ) {
        let p = Pattern::new(x.clone()).unwrap();
        let m = x.len();
        let delta = delta.min(m / 2);
        let w = translocate(&x, &cuts);
        let mut total = 0;
        let mut last = None;
        Aligner::new(&p).window_traced(&w, delta, &mut WorkCounters::default(), |f| {
            let mut closed = 0;
            for a in f.attempts() {
                assert_eq!(a.consumed(), f.i, "{a:?}");
                assert!(a.costs.max().is_none_or(|t| t <= delta));
                if a.is_closed() {
                    closed += 1;
                    continue;
                }
                let (s2, k2) = (a.s2.unwrap(), a.k2.unwrap());
                let k1 = a.k1.unwrap_or(0);
                assert_eq!(w[a.s1..a.s1 + k2], x[s2..s2 + k2]);
                assert_eq!(w[a.s1 + k2..a.s1 + k2 + k1], x[a.s1..a.s1 + k1]);
            }
            assert!(closed <= 1);
            if f.i < m {
                total += f.len();
            }
            last = f.closed.clone();
        });
        prop_assert!(total <= m * m * m);
        prop_assert_eq!(last.unwrap_or_default(), utd_cost_set(&x, &w, delta).unwrap());
    }
}

#[test]
fn unary_frontier_within_cube() {
    for m in 1..=24 {
        let x = Pattern::new(vec![b'a'; m]).unwrap();
        let mut c = WorkCounters::default();
        Aligner::new(&x).window(&vec![b'a'; m], m / 2, &mut c);
        assert!(c.align_max_window_frontier <= (m as u64).pow(3), "m = {m}");
    }
}
