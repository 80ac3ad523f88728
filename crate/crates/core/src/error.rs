use thiserror::Error;

/// Errors produced by group constructions and sweeps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{guard} guard exceeded: {detail}")]
    GuardExceeded { guard: &'static str, detail: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn guard(guard: &'static str, detail: impl Into<String>) -> Self {
        Error::GuardExceeded {
            guard,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
