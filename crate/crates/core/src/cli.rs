//! Command-line front end: argument parsing and command dispatch.
//!
//! Exit codes: 0 when every check passes, 1 when a checked inequality is
//! violated, 2 on bad input or an undecidable comparison.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::bounds::{
    bound_constants, degree_growth, independence_profile, verify_bounds, zannier_check,
};
use crate::error::{Error, Result};
use crate::io::{self, DocFormat, NumfieldSummary, SandwichRecord};
use crate::numfield::{
    product_sandwich, schmidt_zero_bound_log, verify_epsilon_inequality, EpsilonCheckConfig,
};
use crate::places::Place;
use crate::recurrence::require_nondegenerate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const DEFAULT_N_MAX: u64 = 100;
pub const THREADS_ENV: &str = "RECGROW_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Constants,
    Verify,
    DegreeGrowth,
    Horizon,
    Zannier,
    Numfield,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input_path: PathBuf,
    pub mu: Place,
    /// `None` defers to the input file (numfield) or [`DEFAULT_N_MAX`].
    pub n_max: Option<u64>,
    pub epsilon: Option<Rational>,
    pub precision_bits: Option<u32>,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(name = "recgrow", version, about = "Growth bounds for linear recurrences over Q(x) and Q")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Constants C~, q, S, C1, C2 for a sequence and a place
    Constants(Common),
    /// Check C~ + n m <= mu(G_n) <= C + n m for n = 0..=n_max
    Verify(Common),
    /// Check deg G_n >= n max deg alpha_j - C for polynomial data
    DegreeGrowth(Common),
    /// Scan the independence of {pi_ji alpha_j^n}
    Horizon(Common),
    /// Check one instance of the function field subspace inequality
    Zannier(Common),
    /// Growth check for an integer recurrence over Q
    Numfield(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Input document (.json for JSON, TOML otherwise)
    #[arg(long)]
    input: PathBuf,
    /// inf | point:<rational> | factor:<poly>
    #[arg(long, default_value = "inf")]
    mu: String,
    #[arg(long)]
    n_max: Option<u64>,
    /// Rational in (0, 1), e.g. 1/10
    #[arg(long)]
    epsilon: Option<String>,
    #[arg(long)]
    precision_bits: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, PartialEq, Eq)]
pub enum ConfigError {
    /// Help or version text requested.
    Info(String),
    Usage(String),
}

/// Parses arguments that follow the program name.
pub fn parse_config<I, S>(argv: I) -> std::result::Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once("recgrow".into()).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ConfigError::Info(e.to_string()),
            _ => ConfigError::Usage(e.to_string()),
        }
    })?;
    let (command, c) = match cli.command {
        Sub::Constants(c) => (Command::Constants, c),
        Sub::Verify(c) => (Command::Verify, c),
        Sub::DegreeGrowth(c) => (Command::DegreeGrowth, c),
        Sub::Horizon(c) => (Command::Horizon, c),
        Sub::Zannier(c) => (Command::Zannier, c),
        Sub::Numfield(c) => (Command::Numfield, c),
    };
    let usage = |e: Error| ConfigError::Usage(format!("error: {e}"));
    let mu = io::parse_mu(&c.mu).map_err(usage)?;
    let epsilon = c.epsilon.as_deref().map(parse_rational).transpose().map_err(usage)?;
    Ok(RunConfig {
        command,
        input_path: c.input,
        mu,
        n_max: c.n_max,
        epsilon,
        precision_bits: c.precision_bits,
        output_format: c.format,
        output_path: c.output,
    })
}

/// The rendered report and whether every check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let text = io::read_text(&cfg.input_path)?;
    let fmt = DocFormat::from_path(&cfg.input_path);
    let n_max = cfg.n_max.unwrap_or(DEFAULT_N_MAX);
    let csv = cfg.output_format == OutputFormat::Csv;
    let pick = |a: String, b: String| if csv { a } else { b };
    match cfg.command {
        Command::Constants => {
            let spec = io::parse_spec(&text, fmt)?;
            let c = bound_constants(&spec, &cfg.mu)?;
            Ok(Outcome {
                report: pick(io::constants_csv(&c), io::constants_json(&c)),
                passed: true,
            })
        }
        Command::Verify => {
            let spec = io::parse_spec(&text, fmt)?;
            let r = verify_bounds(&spec, &cfg.mu, n_max)?;
            Ok(Outcome {
                passed: r.violations().is_empty(),
                report: pick(io::bound_report_csv(&r), io::bound_report_json(&r)),
            })
        }
        Command::DegreeGrowth => {
            let spec = io::parse_spec(&text, fmt)?;
            let r = degree_growth(&spec, n_max)?;
            Ok(Outcome {
                passed: r.violations().is_empty(),
                report: pick(io::degree_report_csv(&r), io::degree_report_json(&r)),
            })
        }
        Command::Horizon => {
            let spec = io::parse_spec(&text, fmt)?;
            if spec.len() >= 2 {
                require_nondegenerate(&spec)?;
            }
            let profile = independence_profile(&spec, n_max);
            let horizon = profile.iter().rposition(|&ok| !ok).map(|n| n as u64 + 1);
            Ok(Outcome {
                report: pick(io::horizon_csv(horizon, &profile), io::horizon_json(horizon, &profile)),
                passed: true,
            })
        }
        Command::Zannier => {
            let inst = io::parse_zannier(&text, fmt)?;
            let o = zannier_check(&inst)?;
            Ok(Outcome {
                passed: o.ok,
                report: pick(io::zannier_csv(&o), io::zannier_json(&o)),
            })
        }
        Command::Numfield => numfield(cfg, &text, fmt, csv),
    }
}

fn numfield(cfg: &RunConfig, text: &str, fmt: DocFormat, csv: bool) -> Result<Outcome> {
    let mut inp = io::parse_numfield(text, fmt)?;
    if let Some(b) = cfg.precision_bits {
        inp.precision_bits = b;
    }
    let epsilon = cfg
        .epsilon
        .clone()
        .or(inp.epsilon.clone())
        .ok_or_else(|| Error::InvalidSpec("numfield needs epsilon".into()))?;
    let n_max = cfg.n_max.or(inp.n_max).unwrap_or(DEFAULT_N_MAX);
    let rec = inp.recurrence()?;
    let ecfg = EpsilonCheckConfig {
        epsilon: epsilon.clone(),
        n_max,
        precision_bits: inp.precision_bits,
    };
    let report = verify_epsilon_inequality(&rec, &ecfg)?;
    let sch = rec.schmidt_input();
    let mut sandwich = Vec::new();
    if let Some((f, rs)) = &inp.sandwich {
        for r in rs {
            sandwich.push(SandwichRecord {
                r: r.to_string(),
                outcome: product_sandwich(f, r)?,
            });
        }
    }
    let passed = sandwich.iter().all(|s| s.outcome.ok && s.outcome.cancellation_ok);
    let summary = NumfieldSummary {
        epsilon: format_rational(&epsilon),
        precision_bits: inp.precision_bits,
        distinct_roots: sch.k,
        max_multiplicity: sch.a,
        schmidt_log_bound: schmidt_zero_bound_log(sch).ok().map(|v| v.to_string()),
        report,
        sandwich,
    };
    Ok(Outcome {
        report: if csv { io::numfield_csv(&summary) } else { io::numfield_json(&summary) },
        passed,
    })
}

/// Caps the global thread pool from `RECGROW_THREADS` when set.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            // a pool may already exist when called twice in one process
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Runs a configuration, writing the report and diagnostics; returns the
/// exit code.
pub fn run(cfg: &RunConfig) -> i32 {
    configure_threads();
    let outcome = match execute(cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match &cfg.output_path {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &outcome.report) {
                eprintln!("error: {}: {e}", p.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{}", outcome.report),
    }
    if outcome.passed {
        EXIT_OK
    } else {
        eprintln!("violation: a checked inequality failed");
        EXIT_VIOLATION
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_config(argv) {
        Ok(cfg) => run(&cfg),
        Err(ConfigError::Info(text)) => {
            print!("{text}");
            EXIT_OK
        }
        Err(ConfigError::Usage(text)) => {
            eprint!("{text}");
            if !text.ends_with('\n') {
                eprintln!();
            }
            EXIT_INPUT
        }
    }
}
