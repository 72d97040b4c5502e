//! Command-line front end for golden-point analyses of chromatic
//! polynomials.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<golden_chroma::Error> for CliError {
    fn from(e: golden_chroma::Error) -> Self {
        use golden_chroma::{ChromaError, Error};
        match e {
            Error::Chroma(c @ (ChromaError::ResourceLimit { .. } | ChromaError::TooLarge { .. })) => {
                CliError::Resource(c.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

macro_rules! lift_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                golden_chroma::Error::from(e).into()
            }
        }
    )*};
}
lift_error!(
    golden_chroma::ArithError,
    golden_chroma::GraphError,
    golden_chroma::ChromaError,
    golden_chroma::FamilyError,
    golden_chroma::AnalysisError
);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Families,
    Apollonian,
    Flip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Qn,
    Nq,
}

/// Where a graph or polynomial comes from: a family member or a JSON file
/// holding either a graph `{"n", "edges"}` or a polynomial `{"coeffs"}`.
#[derive(Debug, Clone, clap::Args)]
pub struct Source {
    /// Family id: R, TC, I, B, H, CM, CE12
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameter (m or n); ignored for CE12
    #[arg(long)]
    pub param: Option<i64>,
    /// JSON input file
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Sink {
    /// Output file, written atomically; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Parser)]
#[command(name = "golden-chroma", version, about = "Chromatic polynomials of planar triangulations at the golden point")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic polynomial of a graph or family member
    Chromatic {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sink: Sink,
        /// Deletion-contraction node budget
        #[arg(long, default_value_t = golden_chroma::chroma::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Golden-point record: P(τ+1), the Tutte bound, the ratio and the nearest zero
    Report {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sink: Sink,
        #[arg(long, default_value_t = golden_chroma::chroma::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = golden_chroma::analysis::DEFAULT_TOL)]
        tol: f64,
    },
    /// Zero of P(B_n, q) nearest τ+1 for a range of n
    TableBn {
        #[arg(long, default_value_t = 6)]
        n_min: i64,
        #[arg(long, default_value_t = 20)]
        n_max: i64,
        #[command(flatten)]
        sink: Sink,
        #[arg(long, default_value_t = golden_chroma::analysis::DEFAULT_TOL)]
        tol: f64,
    },
    /// Exact Tutte-bound run over generated triangulations
    Boundcheck {
        #[arg(long, value_enum, default_value = "families")]
        generator: Generator,
        /// Walk length, or the largest vertex count for the family sweep
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        sink: Sink,
        #[arg(long, default_value_t = golden_chroma::chroma::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// All zeros of a polynomial
    Zeros {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sink: Sink,
        #[arg(long, default_value_t = golden_chroma::analysis::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = golden_chroma::chroma::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Equimodular locus of the bipyramid family on a grid
    Locus {
        /// Rectangle re_min,re_max,im_min,im_max
        #[arg(long, default_value = "1,4,-2,2")]
        grid: String,
        /// Grid points per unit
        #[arg(long, default_value_t = 64)]
        res: u32,
        /// Equimodularity tolerance; half a cell by default
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        sink: Sink,
    },
    /// Ground-state degeneracy W and entropy S0 of a family
    Entropy {
        #[arg(long)]
        family: String,
        /// Rational q such as 4 or 7/2, or `golden` for τ+1
        #[arg(long)]
        q: String,
        #[arg(long, value_enum, default_value = "nq")]
        order: Order,
        #[command(flatten)]
        sink: Sink,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
