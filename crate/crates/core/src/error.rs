use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("factor index {index} out of range for rank {rank}")]
    FactorOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("socle level of the zero element is undefined")]
    ZeroElement,
    #[error("truncation window is empty: size {size} must exceed {required}")]
    EmptyWindow { size: usize, required: usize },
    #[error("filtration index {requested} exceeds the budget of {limit}")]
    BudgetExceeded { requested: usize, limit: usize },
    #[error("generators must be nonzero rank-1 elements")]
    BadGenerator,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
