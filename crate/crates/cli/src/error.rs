use thiserror::Error;

/// Failure of a CLI invocation, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Physics(wvsim_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Physics(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<wvsim_core::Error> for CliError {
    fn from(e: wvsim_core::Error) -> Self {
        if e.is_physics_domain() {
            CliError::Physics(e)
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
