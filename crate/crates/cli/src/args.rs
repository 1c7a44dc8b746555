use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const MAX_LEN: usize = 64;
pub const MAX_GRID: usize = 512;

/// Twisted Ihara zeta functions, trace distributions and circuit counts.
#[derive(Debug, Parser)]
#[command(name = "ihara", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus, complexity, canonical character and spectral radius of a graph.
    Info,
    /// Spectral radii or traces over a uniform grid on the character torus (CSV).
    Sweep {
        #[arg(value_enum)]
        what: SweepKind,
    },
    /// Circuit, prime cycle and cycle counts per class (CSV or JSON).
    Counts {
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite; exits with status 1 if any check fails.
    Verify,
    /// Reproduce the K4 tables and identities.
    #[command(name = "example-k4")]
    ExampleK4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Radius,
    Trace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Fourier inversion of the trace distribution.
    Spectral,
    /// Direct enumeration of circuits.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Antisymmetry,
    Determinant,
    Orthogonality,
    Transforms,
    Oracle,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Graph file: {"vertices": n, "edges": [[tail, head], ...]}.
    #[arg(long, global = true, conflicts_with = "gen")]
    pub graph: Option<PathBuf>,

    /// Built-in graph: `k4`, `cycle N` or `theta L0 L1 L2`.
    #[arg(long = "gen", global = true, num_args = 1..=4, value_name = "SPEC")]
    pub gen: Vec<String>,

    /// Character coordinates c1,...,cg in the homology basis.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub omega: Option<Vec<f64>>,

    /// Grid points per torus dimension.
    #[arg(long, global = true, default_value_t = 64)]
    pub grid: usize,

    /// Truncation length.
    #[arg(long = "L", global = true, value_name = "N")]
    pub len: Option<usize>,

    /// Sublattice: `[[...], ...]` generator vectors, `{"scale": t}`, or
    /// `{"kernel_of": [a1, ...], "k": k}`.
    #[arg(long, global = true, value_name = "JSON")]
    pub lattice: Option<String>,

    #[arg(long, global = true, value_enum)]
    pub suite: Option<Suite>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Output file (a directory for `example-k4`); stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Work budget; defaults to $IHARA_BUDGET or 1e7.
    #[arg(long, global = true)]
    pub budget: Option<f64>,

    /// Override the suite tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}
