//! The `transloc` command line.

pub mod input;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use transloc::bench::{
    assert_worst_case_budgets, measure_average_work, write_csv, BudgetCase, RandomTextSpec,
};
use transloc::dawg::Dawg;
use transloc::{search, EngineKind, Pattern, SearchConfig, SearchReport, Variant};

use input::{InputDocument, InputFormat};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when nothing matched and `--fail-on-nomatch` was given.
pub const EXIT_NO_MATCH: i32 = 1;
/// Exit status for usage and input errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "transloc",
    version,
    about = "Find approximate occurrences of a pattern under adjacent-factor translocations",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Measure engine work on seeded random texts and print counters as CSV.
    Bench(BenchArgs),
    /// Print the suffix automaton of a pattern.
    DumpDawg(PatternArgs),
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct PatternSource {
    /// Pattern given literally.
    #[arg(short = 'p', long)]
    pattern: Option<String>,
    /// Read the pattern from a file (plain or FASTA).
    #[arg(long, value_name = "PATH")]
    pattern_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PatternArgs {
    #[command(flatten)]
    source: PatternSource,
    /// Input format of pattern and text files.
    #[arg(long, default_value = "auto", value_name = "plain|fasta|auto")]
    format: InputFormat,
    /// Lower-case ASCII letters of pattern and text before matching.
    #[arg(long)]
    fold_case: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[command(flatten)]
    pattern: PatternArgs,
    /// Text file, or `-` for standard input.
    #[arg(short = 't', long, value_name = "PATH")]
    text: Option<String>,
    /// Maximum number of translocations [default: ⌊m/2⌋].
    #[arg(short = 'd', long)]
    delta: Option<usize>,
    /// a: count, any cost; b: count within δ; c: positions; d: positions with costs.
    #[arg(long, default_value = "c", value_name = "a|b|c|d")]
    variant: Variant,
    #[arg(long, default_value = "dawg", value_name = "oracle|dp|dawg|align")]
    engine: EngineKind,
    /// One JSON object per output line.
    #[arg(long)]
    json: bool,
    /// Exit with status 1 when there is no occurrence.
    #[arg(long)]
    fail_on_nomatch: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    /// Text length.
    #[arg(short = 'n', long, default_value_t = 1 << 16)]
    n: usize,
    /// Pattern lengths, comma separated.
    #[arg(short = 'm', long, value_delimiter = ',', default_values_t = [16, 64, 256])]
    m: Vec<usize>,
    /// Translocation bound [default: ⌊m/2⌋ for each m].
    #[arg(short = 'd', long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "dawg")]
    engine: EngineKind,
    /// Write the CSV here instead of standard output.
    #[arg(short = 'o', long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Also check the worst-case budgets on unary inputs aᵐ against aⁿ.
    #[arg(long)]
    unary: bool,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the command line with explicit streams; returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Some(Command::Bench(args)) => bench(&args, stdout, stderr),
        Some(Command::DumpDawg(args)) => dump_dawg(&args, stdin, stdout),
        None => run_search(&cli.search, stdin, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    if path == "-" {
        let mut buf = Vec::new();
        stdin
            .read_to_end(&mut buf)
            .map_err(|e| Failure(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure(format!("{path}: {e}")))
    }
}

fn load_pattern(args: &PatternArgs, stdin: &mut dyn Read) -> Result<Pattern, Failure> {
    let doc = match (&args.source.pattern, &args.source.pattern_file) {
        (Some(p), _) => InputDocument::parse("<pattern>", p.as_bytes(), InputFormat::Plain, args.fold_case)?,
        (None, Some(path)) => {
            let path = path.to_string_lossy();
            let raw = read_source(&path, stdin)?;
            InputDocument::parse(&path, &raw, args.format, args.fold_case)?
        }
        (None, None) => return Err(Failure("a pattern is required (--pattern or --pattern-file)".into())),
    };
    Ok(Pattern::new(doc.sequence)?)
}

fn run_search(
    args: &SearchArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let pattern_args = &args.pattern;
    let text_path = args
        .text
        .as_deref()
        .ok_or_else(|| Failure("a text is required (--text PATH, or `-` for standard input)".into()))?;
    let x = load_pattern(pattern_args, stdin)?;
    let raw = read_source(text_path, stdin)?;
    let text = InputDocument::parse(text_path, &raw, pattern_args.format, pattern_args.fold_case)?;

    let m = x.len();
    let cfg = SearchConfig::new(args.delta.unwrap_or(m / 2), args.variant, args.engine);
    if cfg.is_clamped(m) {
        writeln!(
            stderr,
            "warning: delta {} exceeds {} (half the pattern length); using {}",
            cfg.delta,
            m / 2,
            m / 2
        )?;
    }
    let report = search(&x, &text.sequence, &cfg)?;
    write_report(&report, args.json, stdout)?;
    Ok(if args.fail_on_nomatch && report.occurrences() == 0 {
        EXIT_NO_MATCH
    } else {
        EXIT_OK
    })
}

/// Formats a report the way the search command prints it.
pub fn write_report(report: &SearchReport, as_json: bool, out: &mut dyn Write) -> io::Result<()> {
    match report {
        SearchReport::A { count } | SearchReport::B { count } => {
            if as_json {
                writeln!(out, "{}", json!({ "variant": report.variant().to_string(), "count": count }))
            } else {
                writeln!(out, "{count}")
            }
        }
        SearchReport::C { positions } => {
            for p in positions {
                if as_json {
                    writeln!(out, "{}", json!({ "position": p }))?;
                } else {
                    writeln!(out, "{p}")?;
                }
            }
            Ok(())
        }
        SearchReport::D { windows } => {
            for w in windows {
                if as_json {
                    writeln!(
                        out,
                        "{}",
                        json!({ "position": w.position, "count": w.count(), "costs": w.costs })
                    )?;
                } else {
                    let costs: Vec<String> = w.costs.iter().map(|t| t.to_string()).collect();
                    writeln!(out, "{}\t{}\t{}", w.position, w.count(), costs.join(","))?;
                }
            }
            Ok(())
        }
    }
}

fn dump_dawg(args: &PatternArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let x = load_pattern(args, stdin)?;
    stdout.write_all(Dawg::build(&x).dump().as_bytes())?;
    Ok(EXIT_OK)
}

fn bench(args: &BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    if args.m.iter().any(|&m| m == 0 || m > args.n) {
        return Err(Failure("every pattern length must be in 1..=n".into()));
    }
    if !(1..=256).contains(&args.sigma) {
        return Err(Failure("sigma must be in 1..=256".into()));
    }
    let mut rows = Vec::new();
    for &m in &args.m {
        let spec = RandomTextSpec {
            sigma: args.sigma,
            n: args.n,
            m,
            delta: args.delta.unwrap_or(m / 2),
            seed: args.seed,
            trials: args.trials,
        };
        let work = measure_average_work(&spec, args.engine)?;
        writeln!(
            stderr,
            "{} sigma={} n={} m={} delta={}: {:.3} ± {:.3} work per symbol ({:.2?})",
            args.engine, spec.sigma, spec.n, m, spec.delta, work.mean_per_symbol, work.std_dev, work.elapsed
        )?;
        rows.extend(work.csv_rows());
    }
    match &args.output {
        Some(path) => write_csv(fs::File::create(path)?, &rows)?,
        None => write_csv(&mut *stdout, &rows)?,
    }

    let mut code = EXIT_OK;
    if args.unary {
        let corpus: Vec<_> = args.m.iter().map(|&m| BudgetCase::unary(m, args.n)).collect();
        let report = assert_worst_case_budgets(&corpus)?;
        for c in &report.checks {
            writeln!(
                stderr,
                "{} {} {}: work {} vs bound {}{}",
                if c.ok() { "ok  " } else { "FAIL" },
                c.engine,
                c.label,
                c.work,
                c.bound,
                c.frontier.map_or(String::new(), |f| format!(", frontier {f}")),
            )?;
        }
        if !report.passed() {
            code = EXIT_NO_MATCH;
        }
    }
    Ok(code)
}
