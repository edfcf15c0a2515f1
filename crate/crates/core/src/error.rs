use thiserror::Error;

use crate::lie::{Family, GroupId};

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family {family} is not supported by {op}")]
    UnsupportedFamily { family: Family, op: &'static str },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A product formula did not reduce to an integer. This can only happen
    /// through an implementation bug and callers are expected to abort.
    #[error("integrality fault in {context}: {numerator}/{denominator} is not an integer")]
    IntegralityFault { context: String, numerator: String, denominator: String },

    #[error("rank cutoff unsound: {group} has {count} representation(s) of dimension <= {bound} past the cutoff")]
    CutoffUnsound { group: GroupId, count: usize, bound: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
