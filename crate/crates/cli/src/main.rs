use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wvsim_cli::args::Cli;
use wvsim_cli::{execute, CliError};

fn emit(cli: &Cli) -> Result<(), CliError> {
    let rendered = execute(cli)?;
    match rendered.destination {
        Some(path) => std::fs::write(path, rendered.text)?,
        None => std::io::stdout()
            .lock()
            .write_all(rendered.text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match emit(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wvsim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
