//! Library side of the `indpoly` command-line tool. Each subcommand is a
//! plain function returning its stdout text so it can be tested without
//! spawning a process.

use std::fmt;

pub mod bench;
pub mod commands;
pub mod input;
pub mod verify;

/// Failure of a subcommand, mapped onto the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad input or arguments. Exit code 1.
    Input(String),
    /// An engine invariant failed at run time. Exit code 2.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn input_err(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}
