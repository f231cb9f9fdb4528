use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative entry at sequence position {position}")]
    NegativeEntry { position: usize },
    #[error("sequence period must be nonempty")]
    EmptyPeriod,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("operator is not tridiagonal")]
    NotTridiagonal,
    #[error("cannot extract weighted permutation: {0}")]
    ExtractionFailure(String),
    #[error("verification failed: column {column} has a nonzero entry in row {row} of the zero set")]
    VerificationFailed { column: usize, row: usize },
    #[error("matrix of size {size} exceeds the exhaustive-enumeration limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("beta sequence is not strictly positive at index {index}")]
    BetaZero { index: usize },
    #[error("beta sequence must start with the value 1")]
    BetaNotNormalized,
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
