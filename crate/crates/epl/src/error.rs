//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Mismatched lengths, e.g. a split vector that does not fit its text.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Malformed input file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid or infeasible configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A request exceeded an enumeration cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Conditional probability with an empty or zero denominator.
    #[error("undefined conditional: {0}")]
    UndefinedConditional(String),

    /// Ratio against a zero grammar probability.
    #[error("undefined ratio: {0}")]
    UndefinedRatio(String),

    /// The decoder could not cover the input.
    #[error("no derivation: input not coverable from word {position}")]
    NoDerivation { position: usize },

    /// A token pair was looked up outside the grammar support.
    #[error("token pair outside grammar support: {0}")]
    OutsideSupport(String),

    /// Argument outside the mathematical domain of an expression.
    #[error("domain error: {0}")]
    Domain(String),

    /// A verification suite found a violated identity.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 verification failure, 2 usage or
    /// config error, 3 data error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Capacity(_) => 2,
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) => 3,
            _ => 1,
        }
    }
}
