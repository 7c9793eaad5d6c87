use std::path::Path;

use thiserror::Error;

/// Process exit statuses. Part of the command-line contract.
pub mod exit {
    pub const OK: i32 = 0;
    /// A replay check failed.
    pub const CHECK_FAILED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const GUARD: i32 = 3;
    pub const PRECONDITION: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, unknown keys, failed validation.
    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Guard(String),

    /// A mathematical precondition failed; `witness` explains why.
    #[error("{message}")]
    Precondition { message: String, witness: Vec<String> },
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => exit::INPUT,
            CliError::Guard(_) => exit::GUARD,
            CliError::Precondition { .. } => exit::PRECONDITION,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        CliError::Precondition {
            message: msg.into(),
            witness: Vec::new(),
        }
    }

    pub(crate) fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Input(format!("{}: {e}", path.display()))
    }
}

impl From<qhom_core::Error> for CliError {
    fn from(e: qhom_core::Error) -> Self {
        match e {
            qhom_core::Error::Precondition(_) => CliError::precondition(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
