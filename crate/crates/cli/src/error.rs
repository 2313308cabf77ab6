use thiserror::Error;

/// Failures surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Numeric(String),
    #[error(transparent)]
    Core(#[from] bwspinor::Error),
}

impl CliError {
    /// `1` for numeric failures, `2` for usage and input errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Numeric(_) | Self::Core(_) => 1,
            Self::Usage(_) | Self::Schema { .. } | Self::Io { .. } => 2,
        }
    }

    pub(crate) fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Schema {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
