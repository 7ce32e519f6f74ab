//! Command-line surface for `mss-core`: argument parsing, the text share
//! file format, and the mapping from errors to exit codes.

pub mod args;
pub mod commands;
pub mod error;
pub mod share_file;

pub use error::{code, CliError};
