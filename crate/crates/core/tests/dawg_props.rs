mod common;

use std::collections::HashSet;

use common::{pattern_and_text, reference_costs, word};
use proptest::prelude::*;
use transloc::bench::WorkCounters;
use transloc::dawg::{dawg_search_observed, Dawg, EndPosRepr, StateId};
use transloc::dp::FactorTable;
use transloc::{EngineKind, Pattern, SearchConfig, Variant};

fn factors(x: &[u8]) -> HashSet<Vec<u8>> {
    (0..=x.len())
        .flat_map(|i| (i..=x.len()).map(move |j| x[i..j].to_vec()))
        .collect()
}

fn occurrences_ending(x: &[u8], w: &[u8]) -> Vec<usize> {
    (w.len()..=x.len()).filter(|&e| &x[e - w.len()..e] == w).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn accepts_exactly_the_factors(x in prop_oneof![word(2, 1..=10), word(4, 1..=10)]) {
        let dawg = Dawg::build(&Pattern::new(x.clone()).unwrap());
        let facts = factors(&x);
        let mut symbols: Vec<u8> = b"abcd".to_vec();
        symbols.push(b'z');
        // Factors are closed under taking prefixes, so checking every accepted
        // string's one-symbol extensions covers all strings.
        let mut stack = vec![Vec::new()];
        let mut visited = 0;
        while let Some(w) = stack.pop() {
            prop_assert!(dawg.accepts(&w));
            visited += 1;
            for &c in &symbols {
                let mut v = w.clone();
                v.push(c);
                let is_factor = facts.contains(&v);
                prop_assert_eq!(dawg.accepts(&v), is_factor);
                if is_factor {
                    stack.push(v);
                }
            }
        }
        prop_assert_eq!(visited, facts.len());
    }

    #[test]
    fn structure_of_states(x in prop_oneof![word(2, 1..=16), word(4, 1..=16)]) {
        let p = Pattern::new(x.clone()).unwrap();
        let m = x.len();
        let sorted = Dawg::build_with(&p, EndPosRepr::Sorted);
        let bits = Dawg::build_with(&p, EndPosRepr::Bitset);
        prop_assert!(sorted.state_count() <= 2 * m + 1);
        if m >= 3 {
            prop_assert!(sorted.transition_count() <= 3 * m - 4);
        }
        for q in 1..sorted.state_count() as StateId {
            let link = sorted.suffix_link(q).unwrap();
            prop_assert!(sorted.len(link) < sorted.len(q));
            let ends = sorted.end_pos(q);
            prop_assert_eq!(&ends, &bits.end_pos(q));
            let e = ends[0];
            let val = &x[e - sorted.len(q)..e];
            prop_assert_eq!(&occurrences_ending(&x, val), &ends);
            for k in sorted.len(link) + 1..=sorted.len(q) {
                prop_assert_eq!(sorted.state_of(&val[val.len() - k..]), Some(q));
                prop_assert_eq!(sorted.phi(q, k).unwrap(), q);
            }
            for pos in 0..=m + 1 {
                prop_assert_eq!(sorted.end_pos_contains(q, pos), ends.contains(&pos));
                prop_assert_eq!(bits.end_pos_contains(q, pos), ends.contains(&pos));
            }
        }
        prop_assert!(sorted.suffix_link(0).is_none());
    }

    #[test]
    fn end_pos_of_phi_matches_factor_table((x, y) in pattern_and_text(10, 40)) {
        let p = Pattern::new(x.clone()).unwrap();
        let dawg = Dawg::build(&p);
        let mut f = FactorTable::new(x.len());
        for (j, (cfg, &c)) in (1..).zip(dawg.scan(&y).zip(&y)) {
            f.advance_factor_column(&x, c);
            let longest = (0..=x.len()).map(|i| f.get(i, j)).max().unwrap();
            prop_assert_eq!(cfg.len, longest);
            prop_assert_eq!(cfg.len == 0, cfg.state == dawg.root());
            for k in 1..=cfg.len {
                let q = dawg.phi(cfg.state, k).unwrap();
                prop_assert_eq!(dawg.end_pos(q), f.positions_with_suffix(j, k));
            }
        }
    }

    #[test]
    fn prefix_sets_are_reached_cells((x, y) in pattern_and_text(8, 30), delta in 0usize..4) {
        let p = Pattern::new(x.clone()).unwrap();
        let delta = delta.min(x.len() / 2);
        let q = reference_costs(&x, &y, delta);
        let cfg = SearchConfig::new(delta, Variant::B, EngineKind::Dawg);
        for repr in [EndPosRepr::Sorted, EndPosRepr::Bitset] {
            let dawg = Dawg::build_with(&p, repr);
            dawg_search_observed(&dawg, &p, &y, &cfg, &mut WorkCounters::default(), |step| {
                let want: Vec<usize> = (0..=x.len()).filter(|&i| !q[i][step.j].is_empty()).collect();
                assert_eq!(step.prefixes.as_slice(), &want[..], "j = {}", step.j);
            })
            .unwrap();
        }
    }
}
