use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments, unparsable input, guard exceeded.
    #[error("{0}")]
    Usage(String),
    /// Internal consistency failure or oracle divergence.
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Inconsistent(_) => ExitCode::from(3),
        }
    }
}

impl From<palrich::Error> for CliError {
    fn from(e: palrich::Error) -> Self {
        match e {
            palrich::Error::Inconsistent(_) => CliError::Inconsistent(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
