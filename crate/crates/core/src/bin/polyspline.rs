//! Command-line front end: torsion constants, interpolation error reports
//! and refinement studies as CSV or JSON.
//!
//! Exit codes: 0 success, 1 output file not writable, 2 invalid input,
//! 3 a bound certificate exceeded its headroom.

use std::path::PathBuf;
use std::process::ExitCode;

use annular_polyspline::report::{
    cmd_convergence, cmd_interpolate, cmd_torsion, render, Format, Order, RunConfig,
};
use annular_polyspline::harness::StudyKind;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "polyspline", version, about = "Harmonic and biharmonic splines on annuli")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Space dimension.
    #[arg(long)]
    dim: usize,
    /// Comma-separated, strictly increasing radii.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    radii: Vec<f64>,
    /// Spherical-harmonic truncation degree (default 16 for d = 2, 8 for d = 3, 0 otherwise).
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact torsion constant of the annulus between two radii.
    Torsion {
        #[command(flatten)]
        common: Common,
    },
    /// Interpolation errors and the matching bound certificate.
    Interpolate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        field: String,
        /// 2 (harmonic) or 4 (biharmonic).
        #[arg(long)]
        order: Order,
    },
    /// Errors and observed rates under repeated bisection.
    Convergence {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        field: String,
        #[arg(long, default_value = "2")]
        order: Order,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Override the error measure (harmonic_sup, harmonic_l2, biharmonic_l2).
        #[arg(long)]
        study: Option<StudyKind>,
    },
}

enum Failure {
    Invalid(annular_polyspline::Error),
    Io(std::io::Error),
}

impl From<annular_polyspline::Error> for Failure {
    fn from(e: annular_polyspline::Error) -> Self {
        Failure::Invalid(e)
    }
}

fn config(c: &Common) -> Result<RunConfig, Failure> {
    Ok(RunConfig::new(c.dim, c.radii.clone(), c.truncation, c.format)?)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Failure::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Torsion { common } => {
            let cfg = config(&common)?;
            emit(&render(&cmd_torsion(&cfg)?, cfg.format), &common.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Interpolate { common, field, order } => {
            let cfg = config(&common)?;
            let report = cmd_interpolate(&cfg, &field, order)?;
            emit(&render(&report, cfg.format), &common.out)?;
            if report.passes {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("bound certificate failed: ratio {:?}", report.ratio);
                Ok(ExitCode::from(3))
            }
        }
        Command::Convergence { common, field, order, levels, study } => {
            let cfg = config(&common)?;
            let report = cmd_convergence(&cfg, &field, study.unwrap_or(order.default_study()), levels)?;
            emit(&render(&report, cfg.format), &common.out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
    }
}
