//! Work counters, seeded random corpora and budget checks.
//!
//! Texts and patterns are drawn i.i.d. uniformly from `σ` symbols with
//! SplitMix64: every output `r` of the generator yields the symbol code
//! `r mod σ` (raw byte values `0..σ`). Trial `t` of a spec with seed `s` seeds
//! its generator with `s + t`, draws the pattern, then the text.

mod counters;

use std::io::Write;
use std::time::{Duration, Instant};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

pub use counters::WorkCounters;

use crate::align::align_search_counted;
use crate::config::{EngineKind, SearchConfig, Variant};
use crate::dawg::dawg_search_counted;
use crate::dp::dp_search_counted;
use crate::error::Result;
use crate::oracle::oracle_search;
use crate::pattern::Pattern;

/// Constant `c` in the worst-case budget `work ≤ c·n·m³`.
pub const WORST_CASE_CONSTANT: u64 = 16;

/// A family of random search instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RandomTextSpec {
    pub sigma: usize,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub seed: u64,
    pub trials: usize,
}

impl RandomTextSpec {
    /// The pattern and text of one trial.
    pub fn instance(&self, trial: usize) -> (Pattern, Vec<u8>) {
        assert!((1..=256).contains(&self.sigma), "σ must be in 1..=256");
        let mut rng = SplitMix64::seed_from_u64(self.seed.wrapping_add(trial as u64));
        let x = random_symbols(&mut rng, self.m, self.sigma);
        let y = random_symbols(&mut rng, self.n, self.sigma);
        (Pattern::new(x).expect("m ≥ 1"), y)
    }
}

/// `len` symbol codes in `0..sigma`.
pub fn random_symbols(rng: &mut SplitMix64, len: usize, sigma: usize) -> Vec<u8> {
    (0..len)
        .map(|_| (rng.next_u64() % sigma as u64) as u8)
        .collect()
}

/// Runs one engine with counters. The oracle counts nothing.
pub fn run_counted(
    x: &Pattern,
    y: &[u8],
    cfg: &SearchConfig,
    counters: &mut WorkCounters,
) -> Result<crate::report::SearchReport> {
    match cfg.engine {
        EngineKind::Oracle => oracle_search(x, y, cfg),
        EngineKind::Dp => dp_search_counted(x, y, cfg, counters),
        EngineKind::Dawg => dawg_search_counted(x, y, cfg, counters),
        EngineKind::Align => align_search_counted(x, y, cfg, counters),
    }
}

/// The counter total that stands for an engine's work.
pub fn engine_work(engine: EngineKind, counters: &WorkCounters) -> u64 {
    match engine {
        EngineKind::Oracle => 0,
        EngineKind::Dp => counters.dp_work(),
        EngineKind::Dawg => counters.dawg_work(),
        EngineKind::Align => counters.align_work(),
    }
}

/// Per-trial counters and their summary for one spec and engine.
#[derive(Debug, Clone, Serialize)]
pub struct AverageWork {
    pub spec: RandomTextSpec,
    pub engine: EngineKind,
    pub trials: Vec<WorkCounters>,
    /// Mean over trials of engine work divided by `n`.
    pub mean_per_symbol: f64,
    /// Sample standard deviation of the same quantity.
    pub std_dev: f64,
    /// Wall time for all trials; informational only.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Searches every trial of `spec` for variant (c) and summarises the work.
/// Trials run in parallel.
pub fn measure_average_work(spec: &RandomTextSpec, engine: EngineKind) -> Result<AverageWork> {
    let start = Instant::now();
    let cfg = SearchConfig::new(spec.delta, Variant::C, engine);
    let trials = (0..spec.trials)
        .into_par_iter()
        .map(|t| {
            let (x, y) = spec.instance(t);
            let mut counters = WorkCounters::default();
            run_counted(&x, &y, &cfg, &mut counters)?;
            Ok(counters)
        })
        .collect::<Result<Vec<_>>>()?;
    let per_symbol: Vec<f64> = trials
        .iter()
        .map(|c| engine_work(engine, c) as f64 / spec.n as f64)
        .collect();
    let k = per_symbol.len() as f64;
    let mean = per_symbol.iter().sum::<f64>() / k.max(1.0);
    let var = if per_symbol.len() > 1 {
        per_symbol.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0)
    } else {
        0.0
    };
    Ok(AverageWork {
        spec: *spec,
        engine,
        trials,
        mean_per_symbol: mean,
        std_dev: var.sqrt(),
        elapsed: start.elapsed(),
    })
}

/// [`measure_average_work`] for each pattern length in `ms`, with
/// `delta = ⌊m/2⌋`.
pub fn measure_scaling(base: &RandomTextSpec, ms: &[usize], engine: EngineKind) -> Result<Vec<AverageWork>> {
    ms.iter()
        .map(|&m| {
            let spec = RandomTextSpec {
                m,
                delta: m / 2,
                ..*base
            };
            measure_average_work(&spec, engine)
        })
        .collect()
}

/// One row of the counter CSV.
#[derive(Debug, Clone, Serialize)]
pub struct CsvRow {
    pub engine: EngineKind,
    pub sigma: usize,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub trial: usize,
    pub counter_name: &'static str,
    pub value: u64,
}

impl AverageWork {
    /// Every counter of every trial, plus the engine's `work` total.
    pub fn csv_rows(&self) -> Vec<CsvRow> {
        let s = &self.spec;
        let mut rows = Vec::new();
        for (trial, c) in self.trials.iter().enumerate() {
            let named = c
                .entries()
                .into_iter()
                .chain([("work", engine_work(self.engine, c))]);
            for (counter_name, value) in named {
                rows.push(CsvRow {
                    engine: self.engine,
                    sigma: s.sigma,
                    n: s.n,
                    m: s.m,
                    delta: s.delta,
                    trial,
                    counter_name,
                    value,
                });
            }
        }
        rows
    }
}

/// Writes rows under the header `engine,sigma,n,m,delta,trial,counter_name,value`.
pub fn write_csv<W: Write>(out: W, rows: &[CsvRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    if rows.is_empty() {
        w.write_record(["engine", "sigma", "n", "m", "delta", "trial", "counter_name", "value"])?;
    }
    w.flush()?;
    Ok(())
}

/// A named input for [`assert_worst_case_budgets`].
#[derive(Debug, Clone)]
pub struct BudgetCase {
    pub label: String,
    pub pattern: Pattern,
    pub text: Vec<u8>,
    pub delta: usize,
}

impl BudgetCase {
    pub fn new(label: impl Into<String>, pattern: Pattern, text: Vec<u8>, delta: usize) -> Self {
        BudgetCase {
            label: label.into(),
            pattern,
            text,
            delta,
        }
    }

    /// `aᵐ` against `aⁿ` with `δ = ⌊m/2⌋`.
    pub fn unary(m: usize, n: usize) -> Self {
        BudgetCase::new(
            format!("a^{m} in a^{n}"),
            Pattern::new(vec![b'a'; m]).expect("m ≥ 1"),
            vec![b'a'; n],
            m / 2,
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetCheck {
    pub engine: EngineKind,
    pub label: String,
    pub m: usize,
    pub n: usize,
    pub work: u64,
    /// `c·n·m³`
    pub bound: u64,
    /// Largest per-window frontier sum, align only.
    pub frontier: Option<u64>,
}

impl BudgetCheck {
    pub fn ok(&self) -> bool {
        let m3 = (self.m as u64).pow(3);
        self.work <= self.bound && self.frontier.is_none_or(|f| f <= m3)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetReport {
    pub constant: u64,
    pub checks: Vec<BudgetCheck>,
}

impl BudgetReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(BudgetCheck::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BudgetCheck> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

/// Runs dp, dawg and align (variant (d)) on each case and checks
/// `work ≤ WORST_CASE_CONSTANT·n·m³`, and for align the per-window frontier
/// sum `≤ m³`.
pub fn assert_worst_case_budgets(corpus: &[BudgetCase]) -> Result<BudgetReport> {
    let engines = [EngineKind::Dp, EngineKind::Dawg, EngineKind::Align];
    let jobs: Vec<(&BudgetCase, EngineKind)> = corpus
        .iter()
        .flat_map(|case| engines.iter().map(move |&e| (case, e)))
        .collect();
    let checks = jobs
        .into_par_iter()
        .map(|(case, engine)| {
            let cfg = SearchConfig::new(case.delta, Variant::D, engine);
            let mut counters = WorkCounters::default();
            run_counted(&case.pattern, &case.text, &cfg, &mut counters)?;
            let (m, n) = (case.pattern.len(), case.text.len());
            Ok(BudgetCheck {
                engine,
                label: case.label.clone(),
                m,
                n,
                work: engine_work(engine, &counters),
                bound: WORST_CASE_CONSTANT * n as u64 * (m as u64).pow(3),
                frontier: (engine == EngineKind::Align).then_some(counters.align_max_window_frontier),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BudgetReport {
        constant: WORST_CASE_CONSTANT,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_plain_splitmix64() {
        // reference outputs of SplitMix64 from state 0
        let mut rng = SplitMix64::seed_from_u64(0);
        assert_eq!(rng.next_u64(), 0xe220_a839_7b1d_cdaf);
        assert_eq!(rng.next_u64(), 0x6e78_9e6a_a1b9_65f4);
    }

    #[test]
    fn instances_are_reproducible() {
        let spec = RandomTextSpec {
            sigma: 4,
            n: 50,
            m: 5,
            delta: 2,
            seed: 11,
            trials: 3,
        };
        assert_eq!(spec.instance(1), spec.instance(1));
        assert_ne!(spec.instance(0).1, spec.instance(1).1);
        assert!(spec.instance(2).1.iter().all(|&c| c < 4));
    }

    #[test]
    fn minimal_dp_budget() {
        let case = BudgetCase::new("ab", Pattern::try_from("ab").unwrap(), b"ab".to_vec(), 1);
        let report = assert_worst_case_budgets(&[case]).unwrap();
        assert!(report.passed());
        let dp = report.checks.iter().find(|c| c.engine == EngineKind::Dp).unwrap();
        assert!(dp.work <= WORST_CASE_CONSTANT * 2 * 8);
    }

    #[test]
    fn csv_layout() {
        let spec = RandomTextSpec {
            sigma: 4,
            n: 40,
            m: 3,
            delta: 1,
            seed: 1,
            trials: 2,
        };
        let avg = measure_average_work(&spec, EngineKind::Dawg).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &avg.csv_rows()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("engine,sigma,n,m,delta,trial,counter_name,value"));
        assert_eq!(lines.count(), 2 * 8);
        assert!(text.contains("\ndawg,4,40,3,1,0,dawg_link_hops,"));
    }
}
