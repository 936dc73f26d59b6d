use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no integral solution: {0}")]
    NoSolution(String),
    #[error("unsupported coefficient ring: {0}")]
    UnsupportedRing(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("truncation conflict: {0}")]
    Truncation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
