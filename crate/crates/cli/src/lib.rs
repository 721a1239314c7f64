//! Command-line front end: argument handling, the subcommands, and the
//! formats they write.

pub mod args;
pub mod report;
mod run;

use thiserror::Error;

pub use args::{Cli, Command, Degrees, Format, RunArgs};
pub use run::{run, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Enumeration(#[from] monodromy_core::EnumError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
