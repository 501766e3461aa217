//! The `pierce` command-line tool.
//!
//! Every subcommand prints a JSON report on stdout and returns one of the
//! exit codes below; [`run`] is the whole program minus process setup, so
//! tests can drive it in-process.

mod commands;
mod render;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pierce_core::PierceMode;
use thiserror::Error;

pub use render::{render_svg, RenderOptions};

/// Verdict positive.
pub const EXIT_OK: i32 = 0;
/// Usage, parse or I/O error.
pub const EXIT_USAGE: i32 = 1;
/// The mathematical verdict is negative.
pub const EXIT_NEGATIVE: i32 = 2;
/// A fast path disagrees with its brute-force oracle.
pub const EXIT_ORACLE_MISMATCH: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: pierce_core::io::IoError },
    #[error(transparent)]
    Output(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[value(name = "incidence")]
    Incidence,
    #[value(name = "outside_segment", alias = "outside-segment")]
    OutsideSegment,
}

impl From<ModeArg> for PierceMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Incidence => PierceMode::Incidence,
            ModeArg::OutsideSegment => PierceMode::OutsideSegment,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    /// Null space of all points at once.
    Direct,
    /// Nine-point seed propagated through Chasles grids.
    #[value(alias = "seeded")]
    Paper,
}

#[derive(Debug, Parser)]
#[command(name = "pierce", version, about = "Exact piercing sets, cyclic structure and cubic certificates")]
pub struct Cli {
    /// Add wall-clock timings to the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every line determined by P contains a point of R.
    Verify {
        path: PathBuf,
        /// Override the mode stored in the file.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Extract the cyclic labeling, hull audit and tangency verdict.
    Structure { path: PathBuf },
    /// Find a cubic through P ∪ R.
    Fit {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "direct")]
        strategy: StrategyArg,
    },
    /// Exact minimum piercing sets of random or given point sets.
    Search(SearchArgs),
    /// Draw a configuration as SVG.
    Render {
        path: PathBuf,
        out: PathBuf,
        /// Also draw the determined lines.
        #[arg(long)]
        lines: bool,
    },
    /// Re-check the fast paths against brute-force oracles.
    Oracle {
        path: PathBuf,
        /// Also compare the optimizer with exhaustive search (at most 5 points).
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Number of random points per instance.
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "incidence")]
    pub mode: ModeArg,
    /// Test optimal witnesses of size n for a common cubic.
    #[arg(long)]
    pub scan_conjecture: bool,
    /// Coordinates of random points lie in [-bound, bound].
    #[arg(long, default_value_t = 4)]
    pub bound: i64,
    /// Maximum optimal witnesses tested per instance.
    #[arg(long, default_value_t = 100)]
    pub cap: usize,
    /// Solve the P of this file instead of random instances.
    #[arg(long, conflicts_with_all = ["trials", "scan_conjecture"])]
    pub input: Option<PathBuf>,
    /// Run in parallel; the optimum is unchanged, witnesses and node counts may differ.
    #[arg(long)]
    pub parallel: bool,
}

/// Largest `n` accepted by `search`.
pub const SEARCH_MAX_N: usize = 10;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match commands::execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
