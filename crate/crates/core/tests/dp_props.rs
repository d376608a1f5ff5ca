mod common;

use common::{pattern_and_text, reference_costs};
use proptest::prelude::*;
use transloc::bench::WorkCounters;
use transloc::dp::{dp_search, dp_search_counted, dp_search_observed, FactorTable};
use transloc::oracle::utd_cost_set;
use transloc::{EngineKind, Pattern, SearchConfig, SearchReport, Variant};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rolling_tables_match_full_matrix((x, y) in pattern_and_text(8, 32), delta in 0usize..5) {
        let p = Pattern::new(x.clone()).unwrap();
        let delta = delta.min(x.len() / 2);
        let q = reference_costs(&x, &y, delta);
        let cfg = SearchConfig::new(delta, Variant::D, EngineKind::Dp);
        let SearchReport::D { windows } = dp_search(&p, &y, &cfg).unwrap() else { unreachable!() };
        let m = x.len();
        let want: Vec<_> = (m..=y.len())
            .filter(|&j| !q[m][j].is_empty())
            .map(|j| (j - m, q[m][j].clone()))
            .collect();
        let got: Vec<_> = windows.into_iter().map(|w| (w.position, w.costs)).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn factor_table_is_longest_common_suffix((x, y) in pattern_and_text(8, 24)) {
        let m = x.len();
        let mut f = FactorTable::new(m);
        for (j, &c) in (1..).zip(&y) {
            f.advance_factor_column(&x, c);
            for i in 0..=m {
                let lcs = x[..i].iter().rev().zip(y[..j].iter().rev()).take_while(|(a, b)| a == b).count();
                prop_assert_eq!(f.get(i, j), lcs);
                prop_assert!(f.get(i, j) <= i);
            }
        }
    }

    #[test]
    fn block_steps_are_real_translocations((x, y) in pattern_and_text(7, 20), delta in 1usize..4) {
        let p = Pattern::new(x.clone()).unwrap();
        let delta = delta.min(x.len() / 2);
        let cfg = SearchConfig::new(delta, Variant::D, EngineKind::Dp);
        let mut steps = Vec::new();
        dp_search_observed(&p, &y, &cfg, &mut WorkCounters::default(), |s| steps.push(s)).unwrap();
        for s in steps {
            let len = s.h + s.k;
            let xb = &x[s.i - len..s.i];
            let yb = &y[s.j - len..s.j];
            prop_assert_eq!(&xb[..s.h], &yb[s.k..]);
            prop_assert_eq!(&xb[s.h..], &yb[..s.k]);
            // predecessor costs are what the oracle says for the shorter prefix
            let i0 = s.i - len;
            let pred = utd_cost_set(&x[..i0], &y[s.j - s.i..s.j - len], delta).unwrap();
            prop_assert_eq!(&s.predecessor, &pred);
            let whole = utd_cost_set(&x[..s.i], &y[s.j - s.i..s.j], delta).unwrap();
            prop_assert!(s.predecessor.iter().filter(|&t| t < delta).all(|t| whole.contains(t + 1)));
        }
    }

    #[test]
    fn variants_are_consistent((x, y) in pattern_and_text(8, 30), delta in 0usize..4) {
        let p = Pattern::new(x).unwrap();
        let run = |v| dp_search(&p, &y, &SearchConfig::new(delta, v, EngineKind::Dp)).unwrap();
        let (a, b, c, d) = (run(Variant::A), run(Variant::B), run(Variant::C), run(Variant::D));
        prop_assert_eq!(b.occurrences(), c.occurrences());
        prop_assert_eq!(c.positions(), d.positions());
        prop_assert!(a.occurrences() >= b.occurrences());
        let m = p.len();
        let bound = delta.min(m / 2);
        if let SearchReport::D { windows } = &d {
            for w in windows {
                prop_assert!(w.costs.max().unwrap() <= bound);
                prop_assert!(w.position + m <= y.len());
            }
        }
    }
}

#[test]
fn dp_work_scales_linearly_in_n() {
    let x = Pattern::try_from("abcabd").unwrap();
    let cfg = SearchConfig::new(3, Variant::C, EngineKind::Dp);
    let work = |n: usize| {
        let y: Vec<u8> = (0..n).map(|i| b"abcd"[(i * 7 + i / 3) % 4]).collect();
        let mut c = WorkCounters::default();
        dp_search_counted(&x, &y, &cfg, &mut c).unwrap();
        c.dp_guard_evaluations as f64
    };
    let ratio = work(2000) / work(1000);
    assert!((ratio - 2.0).abs() <= 0.02, "ratio {ratio}");
}
