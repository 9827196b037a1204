use thiserror::Error;

/// Errors produced by the torsion library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(i64),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    /// Malformed or inconsistent user input, as opposed to a failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidGraph(_)
                | Error::InvalidComplex(_)
                | Error::UnknownVertex(_)
                | Error::InvalidParameter(_)
                | Error::Parse { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
