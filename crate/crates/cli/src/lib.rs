//! Command line front end: edge lists, index sweeps as CSV, SVG charts and
//! verification reports.

pub mod args;
pub mod commands;
pub mod edgelist;
pub mod plot;
pub mod sweep;

pub use args::Cli;
pub use commands::{run, CliError, Outcome, ERROR_EXIT};
