use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A property or prediction check came out false.
    #[error("{0}")]
    Failed(String),

    /// Unreadable, malformed or ill-shaped input.
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Failed(_) => ExitCode::from(1),
            CliError::Input(_) => ExitCode::from(2),
        }
    }
}

impl From<daa_core::Error> for CliError {
    fn from(e: daa_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
