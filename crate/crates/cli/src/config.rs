//! Merging command-line flags with an optional JSON config file.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use wvsim_core::scenarios::EpsilonGrid;

use crate::args::{Flags, Format};
use crate::error::{usage, CliError};
use crate::spec::{parse_eps_grid, parse_tan_list};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub g: Option<f64>,
    pub eps: Option<f64>,
    pub eps_grid: Option<String>,
    pub delta: Option<f64>,
    pub alpha_tan: Option<TanList>,
    pub pre: Option<String>,
    pub post: Option<String>,
    pub obs: Option<String>,
    pub out: Option<String>,
    pub format: Option<Format>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum TanList {
    Values(Vec<f64>),
    Single(f64),
    Text(String),
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| usage(format!("invalid config {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EpsSpec {
    Single(f64),
    Grid(String),
}

/// Fully resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub g: f64,
    pub delta: f64,
    pub eps: Option<EpsSpec>,
    pub alpha_tan: Option<Vec<f64>>,
    pub pre: Option<String>,
    pub post: Option<String>,
    pub obs: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn resolve(flags: &Flags) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        Self::merge(flags, file)
    }

    pub fn merge(flags: &Flags, file: FileConfig) -> Result<Self, CliError> {
        let eps = if flags.eps.is_some() || flags.eps_grid.is_some() {
            eps_spec(flags.eps, flags.eps_grid.clone())?
        } else {
            eps_spec(file.eps, file.eps_grid)?
        };
        let alpha_tan = match (&flags.alpha_tan, file.alpha_tan) {
            (Some(text), _) => Some(parse_tan_list(text)?),
            (None, Some(TanList::Values(v))) => Some(v),
            (None, Some(TanList::Single(v))) => Some(vec![v]),
            (None, Some(TanList::Text(t))) => Some(parse_tan_list(&t)?),
            (None, None) => None,
        };
        let out = flags
            .out
            .clone()
            .or(file.out)
            .filter(|o| o != "-")
            .map(PathBuf::from);
        let cfg = Self {
            g: flags.g.or(file.g).unwrap_or(1.0),
            delta: flags.delta.or(file.delta).unwrap_or(1.0),
            eps,
            alpha_tan,
            pre: flags.pre.clone().or(file.pre),
            post: flags.post.clone().or(file.post),
            obs: flags.obs.clone().or(file.obs),
            out,
            format: flags.format.or(file.format).unwrap_or(Format::Csv),
        };
        for (name, v) in [("g", cfg.g), ("delta", cfg.delta)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(usage(format!("--{name} must be positive, got {v}")));
            }
        }
        Ok(cfg)
    }

    /// The epsilon values to sweep, or `default` when none were given.
    pub fn epsilon_grid(&self, default: EpsilonGrid<f64>) -> Result<EpsilonGrid<f64>, CliError> {
        match &self.eps {
            None => Ok(default),
            Some(EpsSpec::Single(e)) => EpsilonGrid::single(*e).map_err(|e| usage(e.to_string())),
            Some(EpsSpec::Grid(text)) => parse_eps_grid(text),
        }
    }

    pub fn describe_eps(&self) -> String {
        match &self.eps {
            None => "default".into(),
            Some(EpsSpec::Single(e)) => format!("{e:e}"),
            Some(EpsSpec::Grid(g)) => g.clone(),
        }
    }
}

fn eps_spec(eps: Option<f64>, grid: Option<String>) -> Result<Option<EpsSpec>, CliError> {
    match (eps, grid) {
        (Some(_), Some(_)) => Err(usage("--eps and --eps-grid are mutually exclusive")),
        (Some(e), None) => {
            if !(e > 0.0 && e.is_finite()) {
                return Err(usage(format!("--eps must be positive, got {e}")));
            }
            Ok(Some(EpsSpec::Single(e)))
        }
        (None, Some(g)) => Ok(Some(EpsSpec::Grid(g))),
        (None, None) => Ok(None),
    }
}
