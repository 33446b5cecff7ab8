//! Argument definitions, command handlers and output records for the
//! `jetframe` binary.

pub mod args;
pub mod commands;
pub mod output;

pub use args::Cli;
pub use commands::{run, ExitStatus};
pub use output::{parse_json_line, OutputRecord};
