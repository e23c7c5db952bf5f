//! Command-line front end, sweep files and parallel verification on top of
//! `ntg-core`.

pub mod cli;
mod error;
pub mod output;
pub mod parallel;
pub mod sweep;

pub use error::CliError;
