use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("embedding error: {0}")]
    Embedding(String),

    #[error("trip from boundary {start} did not terminate within {bound} steps")]
    NonTermination { start: usize, bound: usize },

    #[error("trip permutation is not a bijection: {0}")]
    NotBijective(String),

    #[error("face labelling error: {0}")]
    Labelling(String),

    #[error("invalid path: {0}")]
    Path(String),

    #[error("separation check failed: {0}")]
    Separation(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("not strongly minimal: {0}")]
    NotStronglyMinimal(String),

    #[error("unbounded: {0}")]
    Unbounded(String),

    #[error("dimension {dim} exceeds the hull guard of {max}")]
    DimensionGuard { dim: usize, max: usize },

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
