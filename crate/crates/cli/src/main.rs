//! `siegel-weights`: analyze one weight, sweep a grid, or run the property
//! suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

mod table;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use siegel_weights::intersection::avoided_interval;
use siegel_weights::verify::{run_verify, VerifyConfig};
use siegel_weights::{analysis_report, Error, Exponent, RootDatum, StratumDatum, WeightTriple};

const THREADS_VAR: &str = "SIEGEL_WEIGHTS_THREADS";
const SWEEP_LIMIT: i64 = 200;

#[derive(Parser, Debug)]
#[command(name = "siegel-weights", version, about, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full boundary analysis of V_λ, λ = α(k1, k2, r).
    Analyze {
        #[arg(long, allow_negative_numbers = true)]
        k1: i64,
        #[arg(long, allow_negative_numbers = true)]
        k2: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        /// Siegel stratum invariants `g,c`; repeatable. Defaults to 0,3.
        #[arg(long = "stratum", value_name = "G,C", value_parser = parse_pair)]
        strata: Vec<(i64, i64)>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Computed k against min(k1 − k2, k2) for every dominant pair with k1 <= max.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        max_k1: i64,
        #[arg(long = "stratum", value_name = "G,C", value_parser = parse_pair)]
        strata: Vec<(i64, i64)>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the oracle and property suites.
    Verify {
        #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
        max_k1: i64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Number of random weights for the sampled suites.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long = "stratum", value_name = "G,C", value_parser = parse_pair)]
        strata: Vec<(i64, i64)>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Replace ρ; negative-control fixture.
        #[arg(long, hide = true, value_parser = parse_triple, allow_negative_numbers = true)]
        rho: Option<(i64, i64, i64)>,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected G,C but got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn parse_triple(s: &str) -> Result<(i64, i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected K1,K2,R but got {s:?}"));
    };
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(a)?, parse(b)?, parse(c)?))
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Invalid { kind: String, message: String },
    Verification(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) | Error::DivisionFailure(_) | Error::Overflow(_) => {
                Failure::Verification(
                    serde_json::json!({ "error": e.kind(), "message": e.to_string() }).to_string(),
                )
            }
            _ => Failure::Invalid {
                kind: e.kind().to_string(),
                message: e.to_string(),
            },
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn invalid(kind: &str, message: impl Into<String>) -> Failure {
    Failure::Invalid {
        kind: kind.to_string(),
        message: message.into(),
    }
}

fn strata_from(pairs: &[(i64, i64)]) -> Result<Vec<StratumDatum>, Failure> {
    if pairs.is_empty() {
        return Ok(vec![StratumDatum::default()]);
    }
    Ok(pairs
        .iter()
        .map(|&(g, c)| StratumDatum::new(g, c))
        .collect::<Result<Vec<_>, _>>()?)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
        invalid(
            "InvalidEnvironment",
            format!("{THREADS_VAR}={raw:?} is not a positive integer"),
        )
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| invalid("InvalidEnvironment", e.to_string()))
}

fn analyze(
    out: &mut impl Write,
    (k1, k2, r): (i64, i64, i64),
    strata: &[(i64, i64)],
    format: Format,
) -> Result<(), Failure> {
    let lambda = WeightTriple::new(k1, k2, r)?.require_dominant()?;
    let strata = strata_from(strata)?;
    let report = analysis_report(lambda, &strata)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Table => table::write_report(out, &report)?,
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub k1: i64,
    pub k2: i64,
    pub r: i64,
    pub k: i64,
    pub closed_form: i64,
}

#[derive(Debug, Serialize)]
struct SweepOutput<'a> {
    strata: &'a [StratumDatum],
    rows: &'a [SweepRow],
}

fn sweep(
    out: &mut impl Write,
    max_k1: i64,
    strata: &[(i64, i64)],
    format: Format,
) -> Result<(), Failure> {
    if !(0..=SWEEP_LIMIT).contains(&max_k1) {
        return Err(invalid(
            "InvalidBounds",
            format!("--max-k1 must lie in [0, {SWEEP_LIMIT}], got {max_k1}"),
        ));
    }
    let strata = strata_from(strata)?;
    let pairs: Vec<(i64, i64)> = (0..=max_k1)
        .flat_map(|k1| (0..=k1).map(move |k2| (k1, k2)))
        .collect();
    let rows = pairs
        .par_iter()
        .map(|&(k1, k2)| {
            let lambda = WeightTriple::new(k1, k2, k1 + k2)?;
            Ok(SweepRow {
                k1,
                k2,
                r: lambda.r(),
                k: avoided_interval(lambda, &strata)?.k,
                closed_form: lambda.k_invariant()?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    match format {
        Format::Json => {
            let output = SweepOutput {
                strata: &strata,
                rows: &rows,
            };
            serde_json::to_writer_pretty(&mut *out, &output).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Table => table::write_sweep(out, &rows)?,
    }
    if let Some(bad) = rows.iter().find(|row| row.k != row.closed_form) {
        return Err(Failure::Verification(
            serde_json::json!({ "error": "SweepMismatch", "k1": bad.k1, "k2": bad.k2, "k": bad.k, "closed_form": bad.closed_form })
                .to_string(),
        ));
    }
    Ok(())
}

fn verify(
    out: &mut impl Write,
    config: VerifyConfig,
    rho: Option<(i64, i64, i64)>,
    format: Format,
) -> Result<(), Failure> {
    if config.max_k1 < 0 || config.max_k1 > SWEEP_LIMIT {
        return Err(invalid(
            "InvalidBounds",
            format!(
                "--max-k1 must lie in [0, {SWEEP_LIMIT}], got {}",
                config.max_k1
            ),
        ));
    }
    let datum = match rho {
        Some((a, b, c)) => RootDatum::with_rho(Exponent::new(a, b, c)),
        None => RootDatum::GSP4,
    };
    let report = run_verify(&datum, &config);
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Table => table::write_verify(out, &report)?,
    }
    match report.first_failure() {
        None => Ok(()),
        Some(counterexample) => Err(Failure::Verification(
            serde_json::to_string(counterexample).map_err(io::Error::from)?,
        )),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Analyze {
            k1,
            k2,
            r,
            strata,
            format,
        } => analyze(&mut out, (k1, k2, r), &strata, format),
        Command::Sweep {
            max_k1,
            strata,
            format,
        } => sweep(&mut out, max_k1, &strata, format),
        Command::Verify {
            max_k1,
            seed,
            samples,
            strata,
            format,
            rho,
        } => {
            let mut config = VerifyConfig {
                max_k1,
                seed,
                samples,
                ..VerifyConfig::default()
            };
            if !strata.is_empty() {
                config.strata = strata_from(&strata)?;
            }
            verify(&mut out, config, rho, format)
        }
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid { kind, message }) => {
            eprintln!(
                "{}",
                serde_json::json!({ "error": kind, "message": message })
            );
            ExitCode::from(2)
        }
        Err(Failure::Verification(detail)) => {
            eprintln!("{detail}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!(
                "{}",
                serde_json::json!({ "error": "Io", "message": e.to_string() })
            );
            ExitCode::from(1)
        }
    }
}
