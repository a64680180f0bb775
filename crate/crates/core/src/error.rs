use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Location of an edge record, used to name the offending input line.
fn at(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!(" (line {l})"),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate edge {u}-{v}{}", at(.line))]
    DuplicateEdge {
        u: String,
        v: String,
        line: Option<usize>,
    },
    #[error("self-loop at vertex {label}{}", at(.line))]
    SelfLoop { label: String, line: Option<usize> },
    #[error("zero weight on edge {u}-{v}{}", at(.line))]
    ZeroWeight {
        u: String,
        v: String,
        line: Option<usize>,
    },
    #[error("non-finite weight on edge {u}-{v}{}", at(.line))]
    NonFiniteWeight {
        u: String,
        v: String,
        line: Option<usize>,
    },
    #[error("vertex index {index} out of range for graph with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("switching function covers {got} vertices, graph has {expected}")]
    MissingVertex { expected: usize, got: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: String, v: String },
    #[error("vertex {label} is isolated (zero degree)")]
    IsolatedVertex { label: String },
    #[error("measure must be strictly positive (vertex {index} has {value})")]
    NonPositiveMeasure { index: usize, value: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    ConvergenceFailure { sweeps: usize, residual: f64 },
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("sub-bipartition has an empty union")]
    EmptyUnion,
    #[error("sub-bipartition sides overlap at vertex {index}")]
    OverlappingSides { index: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("set of {size} vertices exceeds the exact frustration cap of {cap}")]
    TooLargeForExact { size: usize, cap: usize },
    #[error(
        "exact {k}-way Cheeger enumeration on {n} vertices exceeds the budget of {cap} vertices; use sweep mode"
    )]
    BudgetExceeded { n: usize, k: usize, cap: usize },
    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },
    #[error("projective partition failed: {reason}")]
    PartitionFailure { reason: String, best_min_mass: f64 },
    #[error("epsilon {0} outside (0, 2)")]
    BadEpsilon(f64),
    #[error("map is identically zero")]
    ZeroMap,
    #[error("epsilon {epsilon} exceeds half the achieved cluster separation {separation}")]
    DisjointnessViolation { epsilon: f64, separation: f64 },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
