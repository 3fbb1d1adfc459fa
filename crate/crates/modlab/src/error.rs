use std::path::PathBuf;

use modlab_core::error::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown ring id `{0}` (known: Z4, Z8, F3, Z6, F2xZ4, T2F2)")]
    UnknownRing(String),
    #[error("unknown suite id `{0}`")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        HarnessError::Io {
            path: path.into(),
            source,
        }
    }

    /// Configuration problems exit with status 2, everything else with 1.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            HarnessError::UnknownRing(_)
                | HarnessError::UnknownSuite(_)
                | HarnessError::InvalidConfig(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
