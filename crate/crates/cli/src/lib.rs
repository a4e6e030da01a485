//! Command implementations behind the `gentle-hh1` binary.

pub mod commands;
pub mod input;
pub mod verify;

use gentle_core::QuiverError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read or write {0}")]
    Io(String),
    #[error("malformed input document: {0}")]
    Schema(String),
    #[error("{} ({})", .0, .0.kind())]
    Invalid(QuiverError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// 1 usage, 2 validation failure, 3 internal invariant failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Schema(_) | CliError::Invalid(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}
