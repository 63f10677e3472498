use std::io;
use std::path::PathBuf;

use consensus_faces::exactnum::NumError;
use consensus_faces::facegraph::CustomPolyhedronError;
use consensus_faces::faces::FaceError;
use consensus_faces::oracle::OracleError;
use consensus_faces::ValidationError;
use thiserror::Error;

/// Everything that stops a command, with its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("invalid system: {0}")]
    Validation(#[from] ValidationError),
    #[error("invalid custom polyhedron: {0}")]
    Custom(#[from] CustomPolyhedronError),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("oracle and face graph disagree on {0}")]
    Disagreement(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Disagreement(_) => 3,
            _ => 2,
        }
    }
}

impl From<NumError> for CliError {
    fn from(e: NumError) -> Self {
        CliError::Argument(e.to_string())
    }
}

impl From<FaceError> for CliError {
    fn from(e: FaceError) -> Self {
        match e {
            FaceError::Capacity { .. } => CliError::Capacity(e.to_string()),
            other => CliError::Argument(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Budget { .. } | OracleError::Dimension { .. } => CliError::Capacity(e.to_string()),
            OracleError::Face(FaceError::Capacity { .. }) => CliError::Capacity(e.to_string()),
            OracleError::NotContracting { .. } => CliError::Internal(e.to_string()),
            other => CliError::Argument(other.to_string()),
        }
    }
}
