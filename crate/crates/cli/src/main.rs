//! `locwave` — localized-mode analysis and inverse design of a layered
//! periodic half-space joined to a homogeneous half-space.

mod commands;
mod config;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    NotLocalized(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::NotLocalized(_) => 3,
            CliError::Infeasible(_) => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "locwave",
    version,
    about = "Interface-localized waves in layered periodic media: classification, band scans, mode profiles, and swarm-based inverse design"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Override one config value, e.g. --set pso.seed=7 (repeatable; wins
    /// over the file and LOCWAVE_SEED).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Directory for output files (created if missing).
    #[arg(long)]
    out: PathBuf,
    /// Output format for single-record results (grids are always CSV).
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one (medium, wave) pair by localization behavior.
    Classify(RunArgs),
    /// Sweep an (eta, omega) grid into a region map.
    Scan(RunArgs),
    /// Reconstruct the localized mode profile and optional 2-D field.
    Mode(RunArgs),
    /// Find the design triple minimizing |lambda1| by particle swarm.
    Optimize(RunArgs),
    /// Tabulate per-period envelope decay for two media.
    Compare(RunArgs),
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let (runner, args): (fn(_, _, _) -> _, &RunArgs) = match &cli.command {
        Command::Classify(a) => (commands::run_classify, a),
        Command::Scan(a) => (commands::run_scan, a),
        Command::Mode(a) => (commands::run_mode, a),
        Command::Optimize(a) => (commands::run_optimize, a),
        Command::Compare(a) => (commands::run_compare, a),
    };
    let cfg = config::load(&args.config, &args.set)?;
    fs::create_dir_all(&args.out).map_err(|e| {
        CliError::Config(format!(
            "output directory {} is not writable: {e}",
            args.out.display()
        ))
    })?;
    runner(&cfg, &args.out, args.format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
