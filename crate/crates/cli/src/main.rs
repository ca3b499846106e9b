use std::process::ExitCode;

use clap::Parser;
use topoindex_cli::{run, Cli, ERROR_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => outcome.into(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}
