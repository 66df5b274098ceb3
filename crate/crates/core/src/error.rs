use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("partition parts must be weakly decreasing: {0}")]
    NotWeaklyDecreasing(String),
    #[error("partition parts must be nonnegative: {0}")]
    NegativePart(String),
    #[error("scale factor must be a positive integer")]
    NonpositiveScale,
    #[error("partition height {height} exceeds rank {rank}")]
    HeightExceedsRank { height: usize, rank: usize },
    #[error("point has {found} coordinates but the system has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("value too large for enumeration: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
