//! Command-line front end for `signed-spectra`: reads edge-list files, runs
//! one analysis and writes a JSON report.

pub mod args;
pub mod commands;
pub mod input;
pub mod json;

use thiserror::Error;

pub use args::{Cli, Command};
pub use commands::{run, Report};

/// Version of the JSON layout written by every command.
pub const SCHEMA_VERSION: u32 = 1;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const NUMERIC: i32 = 2;
    pub const VIOLATION: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] signed_spectra::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use signed_spectra::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => exit::USAGE,
            CliError::Library(e) => match e {
                E::ConvergenceFailure { .. }
                | E::ZeroFunction
                | E::ZeroMap
                | E::NotUnit { .. }
                | E::PartitionFailure { .. }
                | E::DisjointnessViolation { .. } => exit::NUMERIC,
                _ => exit::USAGE,
            },
        }
    }
}
