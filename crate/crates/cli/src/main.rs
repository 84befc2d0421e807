//! `lppqs`: verification suites, RSK bijections, exact distribution
//! functions and Monte Carlo simulation for last passage percolation.

mod error;
mod exact;
mod rsk;
mod simulate;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lppqs::lpp::{GeometryKind, DEFAULT_NODE_BUDGET};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "lppqs", version, about = "Exact and Monte Carlo tools for half-space last passage percolation")]
struct Cli {
    /// Worker threads for parallel suites (default: all cores).
    #[arg(long, global = true, env = "LPPQS_THREADS")]
    threads: Option<usize>,

    /// Search-node cap for exhaustive enumerations.
    #[arg(long, global = true, env = "LPPQS_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check exact identities and bijection properties; exit 1 on any failure.
    Verify(verify::VerifyArgs),
    /// Apply an RSK bijection to a filling, pattern or matrix file.
    Rsk(rsk::RskArgs),
    /// Exact distribution function of the passage time under geometric weights.
    Cdf(exact::CdfArgs),
    /// Monte Carlo simulation of the passage time under geometric weights.
    Simulate(simulate::SimulateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    P2hlr,
    P2pr,
    P2l,
}

impl From<GeometryArg> for GeometryKind {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::P2hlr => GeometryKind::P2hlr,
            GeometryArg::P2pr => GeometryKind::P2pr,
            GeometryArg::P2l => GeometryKind::P2l,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Writes to `path`, or to stdout when no path is given.
pub fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Verify(args) => verify::run(&args, cli.node_budget),
        Command::Rsk(args) => rsk::run(&args),
        Command::Cdf(args) => exact::run(&args, cli.node_budget),
        Command::Simulate(args) => simulate::run(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
