use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use comvar::catalog::VarietyId;
use comvar::charseries::{character_series, partition_count};
use comvar::oracle::{
    hilbert_function_by_evaluation, jacobian_rank_dimension, parametrizations, sample_points,
};
use comvar::{
    buchberger, hilbert_series, ideal_member, parse_polynomial, radical_member, Error,
    IdealPresentation,
};

use comvar_cli::config::{parse_field, RunConfig};
use comvar_cli::format::{read_ideal, write_ideal};
use comvar_cli::report::{Report, Status};
use comvar_cli::scenarios::{self, filter_matches, run_scenario, run_suite, CLAIMS};

/// Exact commuting-variety computations: ideals, Groebner bases,
/// dimensions, sampling oracles, character series, and the verification
/// scenario suite.
#[derive(Parser)]
#[command(name = "comvar", version, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    common: CommonOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Flat key-value config file (overridden by flags)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Coefficient field: `q` or `p=<prime>`
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for all randomized oracles
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on S-pairs per basis computation
    #[arg(long = "budget-pairs", global = true)]
    budget_pairs: Option<u64>,
    /// Wall-clock cap per basis computation, in seconds
    #[arg(long = "budget-seconds", global = true)]
    budget_seconds: Option<f64>,
    /// Worker threads for the scenario suite
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Include scenarios gated as heavy
    #[arg(long = "include-heavy", global = true)]
    include_heavy: bool,
    /// Rerun passing field-sensitive scenarios over the rationals
    #[arg(long = "certify-q", global = true)]
    certify_q: bool,
    /// Restrict scenario sweeps to one tuple length
    #[arg(long, global = true)]
    r: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog ideal and print it in the ideal file format
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
    /// Reduced Groebner basis of an ideal
    Gb {
        #[command(flatten)]
        source: IdealSource,
        /// Append a comment line with engine statistics
        #[arg(long)]
        stats: bool,
    },
    /// Krull dimension of the quotient by an ideal
    Dim {
        #[command(flatten)]
        source: IdealSource,
    },
    /// Hilbert series data of a homogeneous ideal
    Hilbert {
        #[command(flatten)]
        source: IdealSource,
        /// Number of series coefficients to print
        #[arg(short = 'N', long, default_value_t = 8)]
        coefficients: usize,
        #[arg(long)]
        json: bool,
    },
    /// Ideal membership of a polynomial
    Member {
        #[command(flatten)]
        source: IdealSource,
        /// Polynomial in the ideal's variables
        #[arg(long, value_name = "POLY")]
        poly: String,
    },
    /// Radical membership of a polynomial
    RadicalMember {
        #[command(flatten)]
        source: IdealSource,
        #[arg(long, value_name = "POLY")]
        poly: String,
    },
    /// Sampling oracle: dimensions, Hilbert functions, points
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Per-degree weight characters of the graded ring for tuple length r
    Charseries {
        #[arg(short = 'r', long)]
        r: usize,
        /// Maximum degree
        #[arg(short = 'N', long, default_value_t = 8)]
        max_degree: u64,
        #[arg(long)]
        json: bool,
    },
    /// Verification scenarios
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Subcommand)]
enum IdealAction {
    /// Construct a catalog ideal by its id (e.g. sl2-nilcomm:r=3)
    Build {
        id: String,
        /// Output path (stdout if omitted)
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    /// Jacobian-rank dimension estimate (max over components)
    Dim {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
    /// Evaluation-rank Hilbert function at one degree
    Hf {
        #[arg(long)]
        id: String,
        #[arg(short = 'n', long)]
        degree: usize,
        /// Sample budget; defaults to the full monomial count
        #[arg(long)]
        samples: Option<u64>,
    },
    /// Draw certified exact points; prints JSON rows of rational strings
    Sample {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Component index for reducible varieties (all if omitted)
        #[arg(long)]
        component: Option<usize>,
    },
}

#[derive(Subcommand)]
enum VerifyAction {
    /// Run a single scenario by id
    Run {
        scenario: String,
        #[arg(long)]
        json: bool,
    },
    /// Run every scenario matching the filter
    Suite {
        /// Glob-ish filter over scenario ids (`*` wildcards)
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long)]
        json: bool,
    },
    /// List claims and the scenarios covering them
    Audit,
}

#[derive(Args)]
struct IdealSource {
    /// Catalog variety id (e.g. sl2-nilcomm:r=2)
    #[arg(long, value_name = "ID", conflicts_with = "input")]
    id: Option<String>,
    /// Path to an ideal file
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

impl IdealSource {
    fn load(&self, config: &RunConfig) -> Result<IdealPresentation> {
        match (&self.id, &self.input) {
            (Some(id), None) => {
                let id = VarietyId::from_str(id)?;
                Ok(id.build_ideal(&config.field)?)
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                Ok(read_ideal(&text)?)
            }
            _ => bail!("usage: exactly one of --id or --in is required"),
        }
    }
}

fn resolve_config(opts: &CommonOpts) -> Result<RunConfig> {
    let mut config = RunConfig::default();
    if let Some(path) = &opts.config {
        config.load_file(path)?;
    }
    if let Some(field) = &opts.field {
        config.field = parse_field(field)?;
    }
    if let Some(seed) = opts.seed {
        config.seed = seed;
    }
    if let Some(pairs) = opts.budget_pairs {
        config.budget_pairs = pairs;
    }
    if let Some(secs) = opts.budget_seconds {
        config.budget_seconds = Some(secs);
    }
    if let Some(workers) = opts.workers {
        config.workers = workers;
    }
    if opts.include_heavy {
        config.include_heavy = true;
    }
    if opts.certify_q {
        config.certify_q = true;
    }
    if let Some(r) = opts.r {
        config.r_override = Some(r);
    }
    Ok(config)
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            // budget exhaustion has its own exit code; usage errors from
            // our own validation exit 2
            let msg = format!("{err:#}");
            eprintln!("error: {msg}");
            if err.downcast_ref::<Error>().is_some_and(|e| matches!(e, Error::Budget(_))) {
                3
            } else if msg.starts_with("usage:") {
                2
            } else {
                1
            }
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32> {
    let config = resolve_config(&cli.common)?;
    match cli.command {
        Command::Ideal { action } => match action {
            IdealAction::Build { id, out } => {
                let id = VarietyId::from_str(&id)?;
                let ideal = id.build_ideal(&config.field)?;
                let text = write_ideal(&ideal);
                match out {
                    Some(path) => std::fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?,
                    None => print!("{text}"),
                }
                Ok(0)
            }
        },
        Command::Gb { source, stats } => {
            let ideal = source.load(&config)?;
            let gb = buchberger(&ideal, &config.gb_config())?;
            let mut stdout = std::io::stdout().lock();
            for g in gb.basis() {
                writeln!(stdout, "{g}")?;
            }
            if stats {
                let s = gb.stats();
                writeln!(
                    stdout,
                    "# pairs={} reduced={} zero={} basis={}",
                    s.pairs_considered, s.pairs_reduced, s.zero_reductions, s.basis_size
                )?;
            }
            Ok(0)
        }
        Command::Dim { source } => {
            let ideal = source.load(&config)?;
            let dim = comvar::krull_dimension(&ideal, &config.gb_config())?;
            println!("{dim}");
            Ok(0)
        }
        Command::Hilbert {
            source,
            coefficients,
            json,
        } => {
            let ideal = source.load(&config)?;
            let gb = buchberger(&ideal, &config.gb_config())?;
            let h = hilbert_series(&gb, coefficients)?;
            let numerator: Vec<String> = h.numerator.iter().map(|c| c.to_string()).collect();
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "numerator": numerator,
                        "denominator_power": h.denominator_power,
                        "dimension": h.dimension,
                        "coefficients": h.coefficients,
                    }))?
                );
            } else {
                println!("numerator: [{}]", numerator.join(", "));
                println!("denominator_power: {}", h.denominator_power);
                println!("dimension: {}", h.dimension);
                println!(
                    "coefficients: [{}]",
                    h.coefficients
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
            Ok(0)
        }
        Command::Member { source, poly } => {
            let ideal = source.load(&config)?;
            let f = parse_polynomial(ideal.ring(), &poly)?;
            let gb = buchberger(&ideal, &config.gb_config())?;
            println!("{}", ideal_member(&f, &gb)?);
            Ok(0)
        }
        Command::RadicalMember { source, poly } => {
            let ideal = source.load(&config)?;
            let f = parse_polynomial(ideal.ring(), &poly)?;
            println!("{}", radical_member(&f, &ideal, &config.gb_config())?);
            Ok(0)
        }
        Command::Oracle { action } => match action {
            OracleAction::Dim { id, trials } => {
                let id = VarietyId::from_str(&id)?;
                let dim = jacobian_rank_dimension(&id, trials, config.seed)?;
                println!("{dim}");
                Ok(0)
            }
            OracleAction::Hf {
                id,
                degree,
                samples,
            } => {
                let id = VarietyId::from_str(&id)?;
                let minimum = monomial_count(degree as u64, ambient_dim(&id) as u64);
                let samples = samples.unwrap_or(minimum).max(1);
                let value = hilbert_function_by_evaluation(&id, degree, samples, config.seed)?;
                println!("{value}");
                Ok(0)
            }
            OracleAction::Sample {
                id,
                count,
                component,
            } => {
                let id = VarietyId::from_str(&id)?;
                let comps = parametrizations(&id)?;
                let selected: Vec<_> = match component {
                    Some(k) => vec![comps
                        .into_iter()
                        .nth(k)
                        .ok_or_else(|| anyhow!("component index {k} out of range"))?],
                    None => comps,
                };
                let mut rows = Vec::new();
                for p in &selected {
                    for s in sample_points(p, config.seed, count)? {
                        rows.push(json!({
                            "component": s.component,
                            "params": s.params,
                            "point": s.point.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        }));
                    }
                }
                println!("{}", serde_json::to_string_pretty(&rows)?);
                Ok(0)
            }
        },
        Command::Charseries { r, max_degree, json } => {
            let series = character_series(r, max_degree);
            if json {
                let rows: Vec<_> = series
                    .degrees
                    .iter()
                    .enumerate()
                    .map(|(n, ch)| {
                        json!({
                            "degree": n,
                            "count": partition_count(r, n as u64),
                            "dim": ch.dimension(),
                            "weights": ch
                                .weights()
                                .map(|(w, m)| (w.to_string(), m))
                                .collect::<std::collections::BTreeMap<_, _>>(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                println!("{:>6} {:>10} {:>8}  weights", "degree", "count", "dim");
                for (n, ch) in series.degrees.iter().enumerate() {
                    let weights: Vec<String> = ch
                        .weights()
                        .map(|(w, m)| format!("{w}:{m}"))
                        .collect();
                    println!(
                        "{:>6} {:>10} {:>8}  {{{}}}",
                        n,
                        partition_count(r, n as u64),
                        ch.dimension(),
                        weights.join(", ")
                    );
                }
            }
            Ok(0)
        }
        Command::Verify { action } => match action {
            VerifyAction::Run { scenario, json } => {
                let def = scenarios::find(&scenario)
                    .ok_or_else(|| anyhow!("unknown scenario `{scenario}`"))?;
                let report = run_scenario(&def, &config);
                if json {
                    println!("{}", serde_json::to_string_pretty(&report)?);
                } else {
                    print_report_line(&report);
                }
                Ok(match report.status {
                    Status::Pass => 0,
                    Status::Aborted => 3,
                    _ => 1,
                })
            }
            VerifyAction::Suite { filter, json } => {
                let matched_any = scenarios::registry()
                    .iter()
                    .any(|d| filter_matches(&filter, d.id));
                if !matched_any {
                    eprintln!("warning: filter `{filter}` matches no scenario");
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&scenarios::suite_report(vec![]))?
                        );
                    }
                    return Ok(0);
                }
                let (reports, exit) = run_suite(&filter, &config);
                if json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&scenarios::suite_report(reports))?
                    );
                } else {
                    for report in &reports {
                        print_report_line(report);
                    }
                    let summary = comvar_cli::report::Summary::of(&reports);
                    println!(
                        "{} scenarios: {} pass, {} fail, {} error, {} aborted",
                        summary.total, summary.pass, summary.fail, summary.error, summary.aborted
                    );
                }
                Ok(exit)
            }
            VerifyAction::Audit => {
                let reg = scenarios::registry();
                for (key, text) in CLAIMS {
                    let covering: Vec<&str> = reg
                        .iter()
                        .filter(|d| d.claim == *key)
                        .map(|d| d.id)
                        .collect();
                    println!("{key}: {}", covering.join(", "));
                    println!("    {text}");
                }
                let uncovered = scenarios::audit_uncovered();
                if uncovered.is_empty() {
                    println!("all claims are covered");
                    Ok(0)
                } else {
                    println!("uncovered claims: {}", uncovered.join(", "));
                    Ok(1)
                }
            }
        },
    }
}

fn print_report_line(report: &Report) {
    let tag = match report.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
        Status::Aborted => "ABORT",
    };
    println!("[{tag}] {} ({} ms)", report.id, report.runtime_ms);
    if report.status == Status::Fail {
        println!("    measured: {}", report.measured);
        println!("    expected: {}", report.expected);
    }
    if let Some(detail) = &report.detail {
        println!("    {detail}");
    }
}

fn ambient_dim(id: &VarietyId) -> usize {
    let r = id.tuple_length();
    match id {
        VarietyId::Gl2Comm { .. } => 4 * r,
        VarietyId::Sl3NilComm { .. } | VarietyId::SubregComponent { .. } => 8 * r,
        _ => 3 * r,
    }
}

/// Number of degree-n monomials in v variables.
fn monomial_count(degree: u64, v: u64) -> u64 {
    let n = degree + v - 1;
    let k = (v - 1).min(degree);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
