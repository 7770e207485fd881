//! Command implementations behind the `qcsd` binary.

pub mod analyze;
pub mod known;
pub mod search;
pub mod table;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qcsd_core::Error),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    #[error("output: {0}")]
    Output(String),
}
