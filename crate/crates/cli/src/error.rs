use std::path::PathBuf;

use expcommute_core::Error as CoreError;
use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitStatus {
    Consistent = 0,
    Usage = 2,
    Numerical = 3,
    HypothesisViolated = 4,
    Violation = 5,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => ExitStatus::Usage,
            CliError::Core(e) => match e {
                CoreError::DimensionMismatch { .. }
                | CoreError::EmptyMatrix
                | CoreError::EntryCount { .. }
                | CoreError::NonFinite { .. }
                | CoreError::InvalidTolerance { .. }
                | CoreError::InvalidArgument(_) => ExitStatus::Usage,
                _ => ExitStatus::Numerical,
            },
        }
    }
}
