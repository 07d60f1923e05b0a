//! `ucx`: analyze families, run verification sweeps, generate instances.
//!
//! Exit codes: 0 success, 1 a checked property was violated, 2 usage or
//! input error.

mod analyze;
mod sweep;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use ucx_core::format::{parse_family, write_family};
use ucx_core::verify::{random_union_closed, union_closure, Property};
use ucx_core::SetFamily;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: ucx_core::Error,
    },
    #[error(transparent)]
    Core(#[from] ucx_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type CliResult<T> = Result<T, CliError>;

/// Whether the command found a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Clean,
    Violated,
}

#[derive(Debug, Parser)]
#[command(
    name = "ucx",
    version,
    about = "Exact analysis of union-closed set families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print statistics for a family file.
    Analyze {
        path: PathBuf,
        /// Also write the report as JSON.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Check a property over all or random instances.
    Verify(VerifyArgs),
    /// Write the union closure of random generators.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        generators: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write the union closure of a family file.
    Closure {
        path: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Tabulate a quantity over random instances as CSV.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of: duality, shadow-lemma, parseval, influence-identity,
    /// corollary-lb, theorem2, frankl, conjecture2, partial-claim, edge-iso,
    /// kotlov, fkn-zero, ks-zero, positive-cap, thin-boundary.
    pub property: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    #[arg(long, requires = "samples")]
    pub random: bool,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to the number of available cores.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Where to write violating instances.
    #[arg(long, value_name = "DIR")]
    pub witness_dir: Option<PathBuf>,
    /// Write the full report as JSON.
    #[arg(long, value_name = "OUT")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    Conjecture2,
    #[value(name = "theorem2-deficiency")]
    Theorem2Deficiency,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub kind: ScanKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to standard output.
    #[arg(long, value_name = "OUT")]
    pub csv: Option<PathBuf>,
    /// Where to write instances with negative margin.
    #[arg(long, value_name = "DIR")]
    pub witness_dir: Option<PathBuf>,
}

pub fn read_family(path: &Path) -> CliResult<SetFamily> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_family(&text).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit_family(family: &SetFamily, output: Option<&Path>) -> CliResult<()> {
    let text = write_family(family);
    match output {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Analyze { path, json } => {
            let report = analyze::analyze(&read_family(&path)?);
            print!("{}", report.table());
            if let Some(out) = json {
                write_file(&out, &(report.to_json() + "\n"))?;
            }
            Ok(Outcome::Clean)
        }
        Command::Verify(args) => {
            let property: Property = args.property.parse()?;
            sweep::verify(property, &args)
        }
        Command::Gen {
            n,
            generators,
            seed,
            output,
        } => {
            let family = random_union_closed(n, generators, seed)?;
            emit_family(&family, output.as_deref())?;
            Ok(Outcome::Clean)
        }
        Command::Closure { path, output } => {
            let family = union_closure(&read_family(&path)?);
            emit_family(&family, output.as_deref())?;
            Ok(Outcome::Clean)
        }
        Command::Scan(args) => sweep::scan(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
