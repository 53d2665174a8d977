//! Error type shared by every fallible operation in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building rings, combining sequences,
/// parsing files, or talking to the search endpoint.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("{value} is not a unit in {ring}")]
    NotAUnit { value: String, ring: String },

    #[error("{n}! is not invertible in this ring")]
    FactorialNotInvertible { n: usize },

    #[error("sequence too short: need at least {needed} terms, got {got}")]
    LengthTooShort { needed: usize, got: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("leading term must be zero")]
    NotZeroOfOrderOne,

    #[error("not invertible for composition: need a zero leading term and a unit second term")]
    NotInvertibleForComposition,

    #[error("leading term must be one")]
    NotUnitHeaded,

    #[error("polynomial at index {index} has a nonzero constant term")]
    NonzeroConstantTerm { index: usize },

    #[error("sequence is not of binomial type: first failure at index {index}")]
    NotBinomialType { index: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("cannot retract {value} to the integers")]
    RetractFailed { value: String },

    #[error("invalid ring: {message}")]
    InvalidRing { message: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("network access is disabled (pass --online to enable it)")]
    NetworkDisabled,

    #[error("search request failed with HTTP status {status}")]
    Http { status: u16 },

    #[error("prefix too short: need at least 4 terms, got {got}")]
    PrefixTooShort { got: usize },

    #[error("{message}")]
    Usage { message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for usage and parse problems,
    /// 1 for every other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Usage { .. } | Error::PrefixTooShort { .. } => 2,
            _ => 1,
        }
    }
}
