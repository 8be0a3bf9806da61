use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("size budget exceeded: {what} needs more than {limit}")]
    Budget { what: String, limit: usize },

    #[error("no filler: {0}")]
    NoFiller(String),

    #[error("well-definedness check failed: {0}")]
    Inconsistent(String),

    #[error("malformed file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
