use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    NoSignChange(catcorr_core::Error),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Io { .. } => 3,
            CliError::NoSignChange(_) => 4,
        }
    }
}

impl From<catcorr_core::Error> for CliError {
    fn from(err: catcorr_core::Error) -> Self {
        match err {
            catcorr_core::Error::NoSignChange { .. } => CliError::NoSignChange(err),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<&CliError> for ExitCode {
    fn from(err: &CliError) -> Self {
        ExitCode::from(err.exit_code())
    }
}
