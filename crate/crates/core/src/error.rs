use thiserror::Error;

use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("invalid signature: {0}")]
    Signature(String),
    #[error("grade error: {0}")]
    Grade(String),
    #[error("isomorphism error: {0}")]
    Iso(String),
    #[error("ring error: {0}")]
    Ring(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("dimension error: {0}")]
    Dim(String),
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: {message}")]
    Validation {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("evaluation error: {0}")]
    Eval(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Parse and validation failures, as opposed to math errors.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::Validation { .. })
    }
}
