use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),

    #[error("word content {0:?} is not a partition")]
    ContentNotPartition(Vec<usize>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("word {0:?} is not a generalized descent word for these parameters")]
    NotInDescentSet(Vec<u32>),

    #[error("internal verification failed: {0}")]
    Verification(String),

    #[error("resource budget exceeded: {what} = {requested} > {limit}")]
    Budget {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
