use thiserror::Error;

/// Errors produced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{label} is not a canonical simple type: {reason}")]
    RankOutOfBounds { label: String, reason: String },

    #[error("simple root index {index} is out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("duplicate simple root index {0}")]
    DuplicateIndex(usize),

    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("roots {0:?} and {1:?} are opposite; their bracket lies in the Cartan subalgebra")]
    OppositeRoots(Vec<i32>, Vec<i32>),

    #[error("a product needs at least one simple component")]
    EmptyProduct,

    #[error("max rank must be at least 2, got {0}")]
    MaxRankTooSmall(usize),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
