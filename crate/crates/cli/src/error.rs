use std::path::{Path, PathBuf};

use cs_codes::CodeError;
use cs_surgery::{Stage, SurgeryError};
use thiserror::Error;

/// Everything that ends a run, with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {msg}")]
    Parse { path: PathBuf, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
    #[error("expansion certification failed: {0}")]
    Certification(String),
    #[error("invariant check failed: {}", .0.join("; "))]
    Invariant(Vec<String>),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn parse(path: &Path, msg: impl ToString) -> Self {
        CliError::Parse {
            path: path.to_path_buf(),
            msg: msg.to_string(),
        }
    }

    /// `1` unreadable or invalid input, `2` the operator is not a logical
    /// (or is a stabilizer), `3` the measurement graph could not be
    /// certified, `4` a checked invariant failed, `5` an internal error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 1,
            CliError::Certification(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::Internal(_) => 5,
            CliError::Surgery(e) => match e {
                SurgeryError::Input(_) => 1,
                SurgeryError::NotALogical(_) | SurgeryError::IsStabilizer => 2,
                SurgeryError::Code {
                    source: CodeError::NotALogical(_),
                    ..
                } => 2,
                SurgeryError::Code {
                    stage: Stage::Input,
                    ..
                } => 1,
                SurgeryError::Graph {
                    stage: Stage::Augmentation,
                    ..
                } => 3,
                SurgeryError::Strict(_) => 4,
                _ => 5,
            },
        }
    }
}
