use std::fmt;

use bnb_core::Error;

/// A failure carrying the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Exit 1: the broadcast is malformed for its host tree.
    InvalidBroadcast(String),
    /// Exit 2: unreadable input, bad flags, unmet preconditions.
    Usage(String),
    /// Exit 3: computed values contradict a proven statement.
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::InvalidBroadcast(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Inconsistent(_) => 3,
        }
    }

    /// Errors raised while building or checking a broadcast.
    pub fn broadcast(e: Error) -> CliError {
        match e {
            Error::Inconsistent(m) => CliError::Inconsistent(m),
            Error::Parse { .. } => CliError::Usage(format!("broadcast: {e}")),
            other => CliError::InvalidBroadcast(other.to_string()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::Inconsistent(m) => CliError::Inconsistent(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::InvalidBroadcast(m) => write!(f, "invalid broadcast: {m}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Inconsistent(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
