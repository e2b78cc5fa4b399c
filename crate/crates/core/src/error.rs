use thiserror::Error;

/// Errors raised by the reliability laboratory.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph text; `offset` is the byte offset of the first bad byte.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Input that is well-formed but not allowed by the named format.
    #[error("format violation: {0}")]
    FormatViolation(String),

    /// A precondition on the arguments does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is valid but not supported by this operation.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("integrity failure: {0}")]
    Integrity(String),

    /// The root solver did not converge; carries whatever it had.
    #[error("root solver did not converge after {iterations} iterations")]
    NonConvergence {
        iterations: usize,
        partial: Vec<num_complex::Complex64>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }

    /// True for failures that indicate a defect in the engine rather than bad input.
    pub fn is_integrity(&self) -> bool {
        matches!(self, Error::Integrity(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
