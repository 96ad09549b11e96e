//! Command line front end: exact expansions, probability tables and the
//! verification suites, with machine-readable output.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 on a
//! usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use csq::graphs::AreaSequence;
use csq::growth::growth_distribution;
use csq::tableaux::Partition;
use csq::verify::{
    verify_lemmas, verify_main, verify_modular, verify_normalization, verify_probability,
    ModularTarget, SampleMode, VerificationReport,
};
use csq::{elementary_expansion, monomial_expansion};

#[derive(Parser)]
#[command(
    name = "csq",
    version,
    about = "Exact chromatic quasisymmetric functions of unit interval graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Main,
    ModularP,
    ModularChi,
    Normalization,
    Lemmas,
    Prob,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the coloring generating function of a sequence in the
    /// elementary basis
    Expand {
        /// Area sequence, comma separated, e.g. 0,0,1
        #[arg(long)]
        e: String,
        /// Only print the coefficient of this partition, e.g. 2,1
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Allow sizes that take minutes instead of seconds
        #[arg(long)]
        slow: bool,
        /// Worker threads (number or "auto"); falls back to CSQ_THREADS
        #[arg(long)]
        threads: Option<String>,
    },
    /// Print the growth-process probabilities of every reachable tableau
    /// and shape
    Ptable {
        /// Area sequence, comma separated, e.g. 0,0,1
        #[arg(long)]
        e: String,
        /// Only print the probability of this partition
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        threads: Option<String>,
    },
    /// Run a verification suite and exit nonzero on any failure
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Size to verify at
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Allow n = 6 (minutes instead of seconds)
        #[arg(long)]
        slow: bool,
        /// Seed for the sampled sub-suites
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        threads: Option<String>,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn configure_threads(threads: &Option<String>) -> Result<(), String> {
    let spec = match threads
        .clone()
        .or_else(|| std::env::var("CSQ_THREADS").ok())
    {
        Some(spec) => spec,
        None => return Ok(()),
    };
    if spec == "auto" {
        return Ok(());
    }
    let count: usize = spec
        .parse()
        .map_err(|_| format!("invalid thread count {spec:?}"))?;
    if count == 0 {
        return Err("thread count must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(count)
        .build_global()
        .map_err(|e| e.to_string())?;
    Ok(())
}

fn parse_sequence(text: &str, cap: usize, what: &str) -> Result<AreaSequence, String> {
    let e: AreaSequence = text
        .parse()
        .map_err(|err| format!("invalid area sequence {text:?}: {err}"))?;
    if e.is_empty() {
        return Err("area sequence must be nonempty".into());
    }
    if e.len() > cap {
        return Err(format!(
            "{what} supports n <= {cap} here; pass --slow for larger sizes where available"
        ));
    }
    Ok(e)
}

fn parse_shape(text: &str, n: usize) -> Result<Partition, String> {
    let shape: Partition = text
        .parse()
        .map_err(|err| format!("invalid partition {text:?}: {err}"))?;
    if shape.size() != n {
        return Err(format!("partition {shape} is not a partition of {n}"));
    }
    Ok(shape)
}

fn run_expand(e: &AreaSequence, lambda: Option<Partition>, format: Format) {
    let table = elementary_expansion(&monomial_expansion(e)).expect("expansion lands in Z[q]");
    match (format, lambda) {
        (Format::Json, Some(shape)) => {
            let value = json!({
                "e": e.to_string(),
                "lambda": shape.to_string(),
                "coefficient": table.coefficient(&shape).to_string(),
            });
            println!("{value}");
        }
        (Format::Json, None) => println!("{}", table.to_json()),
        (Format::Text, Some(shape)) => {
            println!("{shape}: {}", table.coefficient(&shape));
        }
        (Format::Text, None) => {
            for (shape, coeff) in table.entries().collect::<Vec<_>>().into_iter().rev() {
                println!("{shape}: {coeff}");
            }
        }
    }
}

fn run_ptable(e: &AreaSequence, lambda: Option<Partition>, format: Format) {
    let dist = growth_distribution(e);
    if let Some(shape) = lambda {
        let mass = dist.shape_mass(&shape);
        match format {
            Format::Json => {
                let value = json!({
                    "e": e.to_string(),
                    "lambda": shape.to_string(),
                    "probability": mass.to_string(),
                });
                println!("{value}");
            }
            Format::Text => println!("{shape}: {mass}"),
        }
        return;
    }
    let total = dist.total_mass();
    let shapes: Vec<(Partition, String)> = Partition::all(e.len())
        .into_iter()
        .filter_map(|shape| {
            let mass = dist.shape_mass(&shape);
            (!mass.is_zero()).then(|| (shape, mass.to_string()))
        })
        .collect();
    match format {
        Format::Json => {
            let mut by_tableau = Map::new();
            for (t, coeff) in dist.terms() {
                by_tableau.insert(t.to_string(), Value::String(coeff.to_string()));
            }
            let mut by_partition = Map::new();
            for (shape, mass) in &shapes {
                by_partition.insert(shape.to_string(), Value::String(mass.clone()));
            }
            let value = json!({
                "e": e.to_string(),
                "by_tableau": Value::Object(by_tableau),
                "by_partition": Value::Object(by_partition),
                "total": total.to_string(),
            });
            println!("{value}");
        }
        Format::Text => {
            println!("e: {e}");
            for (t, coeff) in dist.terms() {
                println!("tableau {t}: {coeff}");
            }
            for (shape, mass) in &shapes {
                println!("shape {shape}: {mass}");
            }
            println!("total: {total}");
        }
    }
}

fn run_verify(suite: SuiteArg, n: usize, seed: u64, format: Format) -> ExitCode {
    let lemma_mode = if n <= 4 {
        SampleMode::Exhaustive
    } else {
        SampleMode::Sampled { count: 100, seed }
    };
    let reports: Vec<VerificationReport> = match suite {
        SuiteArg::Main => vec![verify_main(n)],
        SuiteArg::ModularP => vec![verify_modular(n, ModularTarget::Probability)],
        SuiteArg::ModularChi => vec![verify_modular(n, ModularTarget::Expansion)],
        SuiteArg::Normalization => vec![verify_normalization(n)],
        SuiteArg::Lemmas => vec![verify_lemmas(n, lemma_mode)],
        SuiteArg::Prob => vec![verify_probability(n)],
        SuiteArg::All => vec![
            verify_main(n),
            verify_modular(n, ModularTarget::Expansion),
            verify_modular(n, ModularTarget::Probability),
            verify_normalization(n),
            verify_lemmas(n, lemma_mode),
            verify_probability(n),
        ],
    };
    match format {
        Format::Json => {
            if reports.len() == 1 {
                println!("{}", serde_json::to_string(&reports[0]).unwrap());
            } else {
                println!("{}", serde_json::to_string(&reports).unwrap());
            }
        }
        Format::Text => {
            for report in &reports {
                println!(
                    "suite={} n={} checked={} failed={}",
                    report.suite, report.n, report.checked, report.failed
                );
                for failure in &report.failures {
                    println!(
                        "  FAIL {}: lhs={} rhs={}",
                        failure.instance, failure.lhs, failure.rhs
                    );
                }
            }
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Expand {
            e,
            lambda,
            format,
            slow,
            threads,
        } => {
            if let Err(msg) = configure_threads(&threads) {
                return usage_error(&msg);
            }
            let cap = if slow { 7 } else { 6 };
            let e = match parse_sequence(&e, cap, "expand") {
                Ok(e) => e,
                Err(msg) => return usage_error(&msg),
            };
            let lambda = match lambda.map(|text| parse_shape(&text, e.len())).transpose() {
                Ok(shape) => shape,
                Err(msg) => return usage_error(&msg),
            };
            run_expand(&e, lambda, format);
            ExitCode::SUCCESS
        }
        Command::Ptable {
            e,
            lambda,
            format,
            slow: _,
            threads,
        } => {
            if let Err(msg) = configure_threads(&threads) {
                return usage_error(&msg);
            }
            let e = match parse_sequence(&e, 6, "ptable") {
                Ok(e) => e,
                Err(msg) => return usage_error(&msg),
            };
            let lambda = match lambda.map(|text| parse_shape(&text, e.len())).transpose() {
                Ok(shape) => shape,
                Err(msg) => return usage_error(&msg),
            };
            run_ptable(&e, lambda, format);
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            n,
            slow,
            seed,
            format,
            threads,
        } => {
            if let Err(msg) = configure_threads(&threads) {
                return usage_error(&msg);
            }
            if n == 0 {
                return usage_error("verification requires n >= 1");
            }
            let cap = if slow { 6 } else { 5 };
            if n > cap {
                return usage_error(&format!(
                    "verify supports n <= 5, or n <= 6 with --slow (got {n})"
                ));
            }
            run_verify(suite, n, seed, format)
        }
    }
}
