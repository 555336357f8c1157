use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A text input (graph file or colouring file) failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A bounded search gave up after exhausting its node budget.
    /// This is a distinct outcome, never a wrong answer.
    #[error("resource exhausted after {nodes} search nodes")]
    ResourceExhausted { nodes: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
