use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use consensus_faces::faces::DEFAULT_MAX_N;
use consensus_faces::oracle::{DEFAULT_BUDGET, MAX_ORACLE_N};

/// Decide convergence to consensus of switched linear systems.
///
/// Matrix indices in switching words are 0-based.
#[derive(Debug, Parser)]
#[command(name = "cfaces", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide both problems with the face graph (or the two-matrix fast path).
    Analyze(AnalyzeArgs),
    /// Decide both problems by direct enumeration of switching words.
    Oracle(OracleArgs),
    /// Simulate the system under a periodically repeated word.
    Simulate(SimulateArgs),
    /// Print the number of faces of the consensus polyhedron in dimension n.
    Census(CensusArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// System file (JSON).
    pub path: PathBuf,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Write the face graph in DOT format here.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Also print witnesses in the summary.
    #[arg(long)]
    pub witness: bool,
    /// Use the face graph even for two undirected stochastic matrices.
    #[arg(long)]
    pub force_general: bool,
    /// Largest dimension for which the face graph is built.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// System file (JSON).
    pub path: PathBuf,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Also decide with the face graph and fail with exit code 3 on disagreement.
    #[arg(long)]
    pub compare: bool,
    /// Also print witnesses in the summary.
    #[arg(long)]
    pub witness: bool,
    /// Largest dimension accepted (at most the built-in limit).
    #[arg(long, default_value_t = MAX_ORACLE_N)]
    pub max_n: usize,
    /// Number of search nodes the enumeration may expand.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// System file (JSON).
    pub path: PathBuf,
    /// Initial state, comma separated, e.g. "1,-1/2,0".
    #[arg(long, allow_hyphen_values = true)]
    pub x0: String,
    /// Switching word, comma separated 0-based matrix indices.
    #[arg(long)]
    pub word: String,
    /// How many times the word is repeated.
    #[arg(long, default_value_t = 1)]
    pub periods: usize,
    /// Write the CSV trace here instead of standard output.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Dimension, between 2 and 80.
    pub n: usize,
}
