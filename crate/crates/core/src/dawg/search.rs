use std::mem;

use super::{Dawg, YConfiguration};
use crate::bench::WorkCounters;
use crate::config::{SearchConfig, Variant};
use crate::costs::{AllCosts, CostDomain, MinCost, Reachability};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::report::{ReportBuilder, SearchReport};

/// Pattern prefix lengths `i` whose cell at the current text position is
/// reached, in increasing order. Always contains `0`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixSet {
    items: Vec<usize>,
}

impl PrefixSet {
    pub fn as_slice(&self) -> &[usize] {
        &self.items
    }

    pub fn contains(&self, i: usize) -> bool {
        self.items.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// One step of the automaton engine, as seen by [`dawg_search_observed`].
#[derive(Debug, Clone, Copy)]
pub struct ScanStep<'a> {
    pub j: usize,
    pub config: YConfiguration,
    pub prefixes: &'a PrefixSet,
}

struct Column<C> {
    cells: Vec<C>,
    prefixes: PrefixSet,
}

/// Runs the automaton engine.
pub fn dawg_search(x: &Pattern, y: &[u8], cfg: &SearchConfig) -> Result<SearchReport> {
    dawg_search_counted(x, y, cfg, &mut WorkCounters::default())
}

/// [`dawg_search`], tallying link hops, end-position tests and prefix-set
/// visits into `counters`.
pub fn dawg_search_counted(
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
) -> Result<SearchReport> {
    let dawg = Dawg::build(x);
    search(&dawg, x, y, cfg, counters, None)
}

/// Like [`dawg_search_counted`] over a prebuilt automaton of `x`, calling
/// `observer` after each text position.
pub fn dawg_search_observed(
    dawg: &Dawg,
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
    mut observer: impl FnMut(ScanStep<'_>),
) -> Result<SearchReport> {
    assert_eq!(dawg.pattern_len(), x.len(), "automaton built for another pattern");
    search(dawg, x, y, cfg, counters, Some(&mut observer))
}

fn search(
    dawg: &Dawg,
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
    observer: Option<&mut dyn FnMut(ScanStep<'_>)>,
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
        Variant::A => sweep(dawg, x, y, Reachability, report, counters, observer),
        Variant::B | Variant::C => sweep(
            dawg,
            x,
            y,
            MinCost {
                delta: delta as u32,
            },
            report,
            counters,
            observer,
        ),
        Variant::D => sweep(dawg, x, y, AllCosts { delta }, report, counters, observer),
    })
}

#[inline]
fn reach<D: CostDomain>(
    domain: &D,
    col: &mut Column<D::Cell>,
    i: usize,
    from: &D::Cell,
    translocated: bool,
) {
    let cell = &mut col.cells[i];
    let was = domain.is_reached(cell);
    if translocated {
        domain.absorb_translocated(cell, from);
    } else {
        domain.absorb(cell, from);
    }
    if !was && domain.is_reached(cell) {
        col.prefixes.items.push(i);
    }
}

fn sweep<D: CostDomain>(
    dawg: &Dawg,
    x: &[u8],
    y: &[u8],
    domain: D,
    mut report: ReportBuilder,
    counters: &mut WorkCounters,
    mut observer: Option<&mut dyn FnMut(ScanStep<'_>)>,
) -> SearchReport {
    let m = x.len();
    let width = m + 1;
    let mut configs = vec![YConfiguration::START; width];
    let mut cols: Vec<Column<D::Cell>> = (0..width)
        .map(|_| {
            let mut cells = vec![domain.unreached(); width];
            cells[0] = domain.origin();
            Column {
                cells,
                prefixes: PrefixSet { items: vec![0] },
            }
        })
        .collect();
    let (mut hops, mut tests, mut visits) = (0u64, 0u64, 0u64);
    let check_phi = cfg!(debug_assertions) && m <= 12;

    for (j, &c) in (1..).zip(y) {
        let config = dawg.delta_counted(configs[(j - 1) % width], c, &mut hops);
        configs[j % width] = config;

        let mut col = mem::take(&mut cols[j % width]);
        for &i in &col.prefixes.items {
            col.cells[i] = domain.unreached();
        }
        col.prefixes.items.clear();
        col.cells[0] = domain.origin();
        col.prefixes.items.push(0);

        // Case (i): extend by a matching symbol.
        let prev = &cols[(j - 1) % width];
        for &i in &prev.prefixes.items {
            visits += 1;
            if i < m && x[i] == c {
                reach(&domain, &mut col, i + 1, &prev.cells[i], false);
            }
        }

        // Case (ii): y[j-h-k+1..j] = v·u with u = x[i+1..i+h], v = x[i+h+1..i+h+k].
        let mut u = config.state;
        for h in (1..=config.len).rev() {
            while let Some(l) = dawg.suffix_link(u).filter(|&l| dawg.len(l) >= h) {
                u = l;
                hops += 1;
            }
            debug_assert!(!check_phi || dawg.phi(config.state, h) == Ok(u));
            let before = configs[(j - h) % width];
            let mut p = before.state;
            for k in (1..=before.len).rev() {
                while let Some(l) = dawg.suffix_link(p).filter(|&l| dawg.len(l) >= k) {
                    p = l;
                    hops += 1;
                }
                if h + k > m {
                    continue;
                }
                let src = &cols[(j - h - k) % width];
                for &i in &src.prefixes.items {
                    visits += 1;
                    if i + h + k > m {
                        break;
                    }
                    tests += 1;
                    if !dawg.end_pos_contains(u, i + h) {
                        continue;
                    }
                    tests += 1;
                    if dawg.end_pos_contains(p, i + h + k) {
                        reach(&domain, &mut col, i + h + k, &src.cells[i], true);
                    }
                }
            }
        }
        col.prefixes.items.sort_unstable();

        if j >= m && domain.is_reached(&col.cells[m]) {
            report.record(j - m, || domain.costs(&col.cells[m]));
        }
        if let Some(obs) = observer.as_mut() {
            obs(ScanStep {
                j,
                config,
                prefixes: &col.prefixes,
            });
        }
        cols[j % width] = col;
    }
    counters.dawg_link_hops += hops;
    counters.dawg_endpos_tests += tests;
    counters.dawg_prefix_iterations += visits;
    report.finish()
}

impl<C> Default for Column<C> {
    fn default() -> Self {
        Column {
            cells: Vec::new(),
            prefixes: PrefixSet::default(),
        }
    }
}
