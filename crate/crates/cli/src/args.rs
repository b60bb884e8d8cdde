use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "wvsim",
    version,
    about = "Weak measurements with Gaussian pointers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the weak value <post|A|pre> / <post|pre>.
    WeakValue(Flags),
    /// Eigenvalue / weak-value / expectation-value pointer distances over an epsilon sweep.
    Compare(Flags),
    /// Post-selected pointer shift of the spin-1/2 setup for several tan(alpha/2).
    Amplify(Flags),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Coupling strength g
    #[arg(long = "g", allow_negative_numbers = true)]
    pub g: Option<f64>,
    /// Single interaction time epsilon
    #[arg(long, conflicts_with = "eps_grid", allow_negative_numbers = true)]
    pub eps: Option<f64>,
    /// Epsilon sweep as lo:hi:n:log|lin
    #[arg(long = "eps-grid")]
    pub eps_grid: Option<String>,
    /// Pointer width Delta
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    /// Comma-separated tan(alpha/2) values
    #[arg(long = "alpha-tan", allow_hyphen_values = true)]
    pub alpha_tan: Option<String>,
    /// Pre-selected state, e.g. "-1:1,0:1"
    #[arg(long, allow_hyphen_values = true)]
    pub pre: Option<String>,
    /// Post-selected state, e.g. "-1:1,0:-2"
    #[arg(long, allow_hyphen_values = true)]
    pub post: Option<String>,
    /// Observable: diag, proj:j or sigmaz
    #[arg(long)]
    pub obs: Option<String>,
    /// Output file, or - for stdout
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSON file with the same keys as the flags; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}
