use thiserror::Error;

use crate::brace::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: ragged tables, out-of-range indices, bad specs.
    #[error("input error: {0}")]
    Input(String),

    #[error("order {order} exceeds the configured cap of {cap}")]
    SizeCap { order: usize, cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    /// Well-formed tables that are not a skew brace.
    #[error("tables are not a skew brace: {0}")]
    Axioms(Box<ValidationReport>),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
