use thiserror::Error;

/// Errors raised by the library.
///
/// Failures that are the answer to a question (a block list that is not a
/// design, an inadmissible parameter set, an exhausted search) are reported
/// as values, never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the supported range or mutually inconsistent.
    #[error("parameter error: {0}")]
    Param(String),
    /// Input data that does not describe what it claims to (e.g. a triple
    /// whose vectors are linearly dependent).
    #[error("data integrity error: {0}")]
    DataIntegrity(String),
    /// A computation would exceed a hard size bound.
    #[error("resource error: {0}")]
    Resource(String),
    /// An internal identity that must hold did not.
    #[error("consistency error: {0}")]
    Consistency(String),
    /// Malformed text input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Param(msg.into()))
}
