//! `coopnet`: cooperation thresholds on graphs from the command line.
//!
//! Every analysis command writes CSV with a fixed header; identical flags
//! and seeds give byte-identical files whatever the thread count.

mod commands;
mod output;
mod source;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use commands::{census, critical, empirical, ensemble, generate, rank, simulate};

#[derive(Parser, Debug)]
#[command(name = "coopnet", version, about = "Weak-selection cooperation thresholds on graphs")]
struct Cli {
    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Thresholds of one graph or of every graph in a graph6 file.
    Critical(critical::CriticalArgs),
    /// Thresholds and category tallies for all connected graphs of given sizes.
    Census(census::CensusArgs),
    /// Mean thresholds over random-graph ensembles.
    Ensemble(ensemble::EnsembleArgs),
    /// Monte Carlo fixation estimates.
    Simulate(simulate::SimulateArgs),
    /// Rank census graphs and look up named structures.
    Rank(rank::RankArgs),
    /// Write generated graphs or the connected-graph atlas.
    Gen(generate::GenArgs),
    /// Degree-normalised thresholds of an observed network.
    Empirical(empirical::EmpiricalArgs),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    match &cli.command {
        Command::Critical(args) => critical::run(args),
        Command::Census(args) => census::run(args),
        Command::Ensemble(args) => ensemble::run(args),
        Command::Simulate(args) => simulate::run(args),
        Command::Rank(args) => rank::run(args),
        Command::Gen(args) => generate::run(args),
        Command::Empirical(args) => empirical::run(args),
    }
}
