use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 1 for parse and validation errors, 2 for I/O, 3 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Validation(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<rectimax_core::Error> for CliError {
    fn from(e: rectimax_core::Error) -> Self {
        match e {
            rectimax_core::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Validation(other.to_string()),
        }
    }
}
