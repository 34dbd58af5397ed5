//! `forestry`: exact forest counts, bound tables, 2-lifts and verification
//! suites from the command line.

mod count;
mod input;
mod lift;
mod output;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use forestry::count::Backend;
use forestry::Budget;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "forestry", version, about = "Exact forest counts and forest-count bounds for multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count forests, connected spanning subgraphs, acyclic orientations,
    /// spanning trees and weakly induced forests.
    Count {
        #[command(flatten)]
        common: Common,
    },
    /// Regenerate a forest-bound table for d = 5..9.
    Table {
        #[arg(value_parser = ["1", "2"])]
        which: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites over the built-in corpora.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Number of random 2-lifts in the covers suite.
        #[arg(long, default_value_t = 100)]
        covers: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Build a 2-lift, a random 2-lift or a tower of lifts.
    Lift {
        /// One `+` or `-` per edge, in edge order.
        #[arg(long, group = "mode", allow_hyphen_values = true)]
        signs: Option<String>,
        /// Uniformly random signs drawn from `--seed`.
        #[arg(long, group = "mode")]
        random: bool,
        /// Number of tower levels; one edge-list file is written per level.
        #[arg(long, group = "mode")]
        tower: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Edge-list or graph6 file, registry name such as `k4` or `cycle(5)`,
    /// or an inline graph6 string.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
    backend: BackendArg,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Largest number of live frontier states.
    #[arg(long)]
    max_states: Option<usize>,
    /// Largest edge count for full subset enumeration.
    #[arg(long)]
    max_subset_bits: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Output file, or output directory for `lift --tower`.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(s) = self.max_states {
            b = b.with_max_states(s);
        }
        if let Some(bits) = self.max_subset_bits {
            b = b.with_subset_bits(bits);
        }
        if let Some(t) = self.time_limit {
            b = b.with_time_limit(Duration::from_secs_f64(t.max(0.0)));
        }
        b
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum BackendArg {
    Oracle,
    Dc,
    Frontier,
    Auto,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Oracle => Backend::Oracle,
            BackendArg::Dc => Backend::DeletionContraction,
            BackendArg::Frontier => Backend::Frontier,
            BackendArg::Auto => Backend::Auto,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Correlation,
    Covers,
    Sandwich,
    Bounds,
    All,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad input; exit code 2.
    Input(String),
    /// A resource limit stopped the run; exit code 3.
    Budget,
    /// A bound was violated or two methods disagreed; exit code 1.
    Check,
    /// Anything else; exit code 1.
    Other(String),
}

impl From<forestry::Error> for Failure {
    fn from(e: forestry::Error) -> Self {
        match e {
            forestry::Error::Parse { .. } | forestry::Error::UnknownGraph(_) => Failure::Input(e.to_string()),
            e if e.is_budget() => Failure::Budget,
            e => Failure::Other(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn configure_threads() {
    let Some(n) = std::env::var("FORESTRY_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) else {
        return;
    };
    if n > 0 {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { common } => count::run(&common),
        Command::Table { which, common } => table::run(&which, &common),
        Command::Verify { suite, covers, common } => verify::run(suite, covers, &common),
        Command::Lift { signs, random, tower, common } => lift::run(signs.as_deref(), random, tower, &common),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget) => {
            eprintln!("error: budget exhausted; results above are partial");
            ExitCode::from(3)
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
