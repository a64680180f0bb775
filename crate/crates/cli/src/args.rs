use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use signed_spectra::{EmbeddingMode, ExactBudget, Operator, PartitionStrategy};

#[derive(Debug, Parser)]
#[command(
    name = "signed-spectra",
    version,
    about = "Spectral analysis of signed graphs"
)]
pub struct Cli {
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "SIGNED_SPECTRA_THREADS")]
    pub threads: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of the signed normalized Laplacian or Kirchhoff matrix.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OperatorArg::Normalized)]
        operator: OperatorArg,
        /// Also emit the eigenfunctions (`eigenfunctions[i][v]`).
        #[arg(long)]
        vectors: bool,
    },
    /// k-way signed Cheeger constant, exact or as a sweep upper bound.
    Cheeger {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MeasureArg::Degree)]
        measure: MeasureArg,
        #[arg(long, value_enum, default_value_t = CheegerMode::Exact)]
        mode: CheegerMode,
        /// Partition strategy for multi-way sweeps.
        #[arg(long, value_enum, default_value_t = StrategyArg::RandomPadded)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// k almost-balanced (or almost-antibalanced) sub-bipartitions.
    Cluster {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Balanced)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::RandomPadded)]
        strategy: StrategyArg,
        /// Localization radius; defaults to 1/(2 k^2.5) clipped to [0.05, 1.9].
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate every eigenvalue bound on one graph.
    Bounds {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Check every bound on a file, or on a seeded random suite when no
    /// file is given; exits with status 3 on any violation.
    Verify {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs in the suite.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Largest vertex count of a random graph.
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Frustration index of the subgraph induced by a vertex set.
    Frustration {
        file: PathBuf,
        /// Comma-separated vertex labels; defaults to all vertices.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = FrustrationArg::Exact)]
        method: FrustrationArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArg {
    /// Vertex cap for exact enumeration (single-way and multi-way);
    /// defaults to 12 for k = 1 and 9 for k >= 2.
    #[arg(long)]
    pub budget: Option<usize>,
}

impl BudgetArg {
    pub fn get(self) -> ExactBudget {
        self.budget
            .map_or_else(ExactBudget::default, ExactBudget::uniform)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    Normalized,
    Kirchhoff,
}

impl From<OperatorArg> for Operator {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::Normalized => Operator::Normalized,
            OperatorArg::Kirchhoff => Operator::Kirchhoff,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Degree,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheegerMode {
    Exact,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Balanced,
    Antibalanced,
}

impl From<ModeArg> for EmbeddingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Balanced => EmbeddingMode::Balanced,
            ModeArg::Antibalanced => EmbeddingMode::Antibalanced,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    RandomPadded,
    ProjectiveKmeans,
}

impl From<StrategyArg> for PartitionStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::RandomPadded => PartitionStrategy::RandomPadded,
            StrategyArg::ProjectiveKmeans => PartitionStrategy::ProjectiveKmeans,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrustrationArg {
    Exact,
    LocalSearch,
}
