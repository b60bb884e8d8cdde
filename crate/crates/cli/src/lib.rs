//! Library side of the `wvsim` command-line tool.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod spec;

use std::path::PathBuf;

use args::{Cli, Command};
use config::RunConfig;
pub use error::CliError;

/// Rendered output and where it should go (`None` = stdout).
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub destination: Option<PathBuf>,
}

type Runner = fn(&RunConfig) -> Result<String, CliError>;

pub fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    let (flags, run): (_, Runner) = match &cli.command {
        Command::WeakValue(f) => (f, commands::weak_value_cmd),
        Command::Compare(f) => (f, commands::compare_cmd),
        Command::Amplify(f) => (f, commands::amplify_cmd),
    };
    let cfg = RunConfig::resolve(flags)?;
    Ok(Rendered {
        text: run(&cfg)?,
        destination: cfg.out,
    })
}
