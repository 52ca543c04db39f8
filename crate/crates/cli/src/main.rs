use std::process::ExitCode;

use clap::Parser;
use trilie_cli::{render_error, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(e @ CliError::Validation(_)) => {
            println!("{}", render_error(&e, cli.format));
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{}", render_error(&e, cli.format));
            ExitCode::from(1)
        }
    }
}
