//! Command-line front end for `catcorr-core`: single-point reports, grid
//! sweeps as CSV or JSON, violation-boundary search and the oracle
//! verification suite.

pub mod cli;
pub mod config;
pub mod error;
pub mod format;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};
