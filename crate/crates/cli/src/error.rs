use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or invalid input document.
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid parameter `{name}`: {reason}")]
    Param { name: String, reason: String },
    /// A search ran out of budget; any partial output was already written.
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("cannot write `{path}`: {source}")]
    Output {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn param(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Param {
            name: name.into(),
            reason: reason.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Output { .. } => 1,
            CliError::Param { .. } => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<ordrep::Error> for CliError {
    fn from(e: ordrep::Error) -> Self {
        match e {
            ordrep::Error::InvalidParameter { name, reason } => CliError::param(name, reason),
            ordrep::Error::SizeOverflow { .. } => CliError::param("element-cap", e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
