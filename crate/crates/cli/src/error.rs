use thiserror::Error;

/// Failures of a CLI invocation. Mathematical failures exit with 1,
/// everything about reading and understanding the input exits with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Math(#[from] whk_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => crate::EXIT_FAIL,
            _ => crate::EXIT_INPUT,
        }
    }
}
