use thiserror::Error;

/// Everything that can go wrong while building graphs or computing invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected; resistance-based invariants are undefined")]
    Disconnected,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dimension {dim} exceeds the configured limit of {limit}")]
    TooLarge { dim: usize, limit: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("invalid partition spec: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero diagonal entry at position {0}")]
    ZeroDiagonal(usize),

    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("expected exactly one zero eigenvalue, found {0}")]
    ZeroEigenvalueCount(usize),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("cross-check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
