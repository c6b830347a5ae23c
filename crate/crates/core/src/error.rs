use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("normal form computation exceeded the length horizon {max_len}; unresolved word {witness}")]
    HorizonExceeded { max_len: usize, witness: String },
    #[error("radical candidate is not nilpotent")]
    NotNilpotent,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
