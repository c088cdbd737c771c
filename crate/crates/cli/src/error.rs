use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    DataFormat {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dims describe {expected} values but the file holds {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("usage: {0}")]
    Usage(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] rangemode_core::Error),
}

impl CliError {
    /// Every error is a usage/format failure; verification mismatches are
    /// reported separately with exit code 1.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
