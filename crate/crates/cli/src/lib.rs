//! Library side of the `bwspinor` command-line tool.

pub mod commands;
pub mod error;
pub mod files;
pub mod verify;

pub use error::{CliError, CliResult};
