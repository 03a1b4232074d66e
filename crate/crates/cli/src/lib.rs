//! Front end for the `steinfill` binary: argument parsing, dispatch to the
//! core library, and report rendering.

mod command;
pub mod report;
mod run;

use thiserror::Error;

pub use command::{parse, CarlitzArgs, Command, ManifoldArgs, Query};
pub use report::{render, CheckRow, Format, Report, Summary};
pub use run::run;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Marker printed on stderr when an internal identity trips.
pub const INTERNAL_MARKER: &str = "INTERNAL ASSERTION FAILED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(clap::Error),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{INTERNAL_MARKER}: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Clap(e) => e.exit_code(),
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_FAILED,
        }
    }
}

impl From<steinfill_core::Error> for CliError {
    fn from(e: steinfill_core::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}
