//! Document formats, text export and command implementations behind the
//! `coverideal` binary.

pub mod commands;
pub mod document;
pub mod export;

use coverideal::Error;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const CONTRACT: i32 = 3;
    pub const CAPACITY: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Contract(String),
    #[error("{0}")]
    Capacity(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Contract(_) => exit::CONTRACT,
            CliError::Capacity(_) => exit::CAPACITY,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } | Error::Overflow => CliError::Capacity(e.to_string()),
            _ => CliError::Contract(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
