//! Prints mean automaton work per text symbol for growing pattern lengths.
//!
//! cargo run --release -p transloc --example scaling [sigma]

use transloc::bench::{assert_worst_case_budgets, measure_scaling, BudgetCase, RandomTextSpec};
use transloc::EngineKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sigma = std::env::args().nth(1).map_or(Ok(4), |s| s.parse())?;
    let base = RandomTextSpec {
        sigma,
        n: 1 << 16,
        m: 1,
        delta: 0,
        seed: 2024,
        trials: 20,
    };
    for w in measure_scaling(&base, &[1, 4, 16, 64, 256], EngineKind::Dawg)? {
        println!(
            "m={:4} work/symbol={:10.3} sd={:.3} ({:.2?})",
            w.spec.m, w.mean_per_symbol, w.std_dev, w.elapsed
        );
    }
    let corpus: Vec<_> = [1, 2, 3, 4, 8, 16, 32]
        .iter()
        .map(|&m| BudgetCase::unary(m, 1024))
        .collect();
    for c in assert_worst_case_budgets(&corpus)?.checks {
        let per = c.work as f64 / (c.n as f64 * (c.m as f64).powi(3));
        println!("{:6} {:16} work/(n·m³)={per:.4} frontier={:?}", c.engine.name(), c.label, c.frontier);
    }
    Ok(())
}
