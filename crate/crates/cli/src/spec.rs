//! Text grammars for states, observables, epsilon grids and `tan(α/2)` lists.
//!
//! States are comma-separated `label:amplitude` pairs, the amplitude being
//! `a`, `a+bi`, `a-bi` or `bi`. Observables are `diag` (`Σ j|j⟩⟨j|` on the
//! labels present), `proj:j`, or `sigmaz` (labels `-1` and `1` only).

use num_complex::Complex64;
use wvsim_core::scenarios::EpsilonGrid;
use wvsim_core::{Observable64, SystemState64};

use crate::error::{usage, CliError};

pub fn parse_amplitude(text: &str) -> Result<Complex64, CliError> {
    let s: String = text
        .trim()
        .replace('−', "-")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let bad = || usage(format!("invalid amplitude '{text}'"));
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // Split before the last sign that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64, CliError> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => t.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, imag(&body[k..])?))
        }
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

pub fn parse_pairs(text: &str) -> Result<Vec<(i64, Complex64)>, CliError> {
    let text = text.replace('−', "-");
    text.split(',')
        .map(|item| {
            let (label, amp) = item
                .split_once(':')
                .ok_or_else(|| usage(format!("expected label:amplitude, got '{item}'")))?;
            let label = label
                .trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("invalid basis label '{label}'")))?;
            Ok((label, parse_amplitude(amp)?))
        })
        .collect()
}

/// Parses pre- and post-selection specs onto the union of their labels.
pub fn parse_selection(pre: &str, post: &str) -> Result<(SystemState64, SystemState64), CliError> {
    let pre = parse_pairs(pre)?;
    let post = parse_pairs(post)?;
    let mut labels: Vec<i64> = pre.iter().chain(&post).map(|p| p.0).collect();
    labels.sort_unstable();
    labels.dedup();
    let build = |pairs: &[(i64, Complex64)]| -> Result<SystemState64, CliError> {
        let mut full = pairs.to_vec();
        for &l in &labels {
            if !pairs.iter().any(|p| p.0 == l) {
                full.push((l, Complex64::new(0.0, 0.0)));
            }
        }
        SystemState64::new(full).map_err(CliError::from)
    };
    Ok((build(&pre)?, build(&post)?))
}

pub fn parse_observable(text: &str, labels: &[i64]) -> Result<Observable64, CliError> {
    let text = text.trim().replace('−', "-");
    match text.as_str() {
        "diag" => Ok(Observable64::integer_spin(labels.to_vec())?),
        "sigmaz" => {
            if labels.iter().any(|l| *l != -1 && *l != 1) {
                return Err(usage("sigmaz needs states on labels -1 and 1 only"));
            }
            Ok(Observable64::integer_spin(labels.to_vec())?)
        }
        other => {
            let j = other
                .strip_prefix("proj:")
                .and_then(|j| j.trim().parse::<i64>().ok())
                .ok_or_else(|| {
                    usage(format!(
                        "unknown observable '{other}' (diag, proj:j, sigmaz)"
                    ))
                })?;
            Observable64::projector(labels.to_vec(), j).map_err(|_| {
                usage(format!(
                    "proj:{j} refers to a label outside the states' basis"
                ))
            })
        }
    }
}

/// `lo:hi:n:log` or `lo:hi:n:lin`.
pub fn parse_eps_grid(text: &str) -> Result<EpsilonGrid<f64>, CliError> {
    let bad = || {
        usage(format!(
            "invalid epsilon grid '{text}' (expected lo:hi:n:log|lin)"
        ))
    };
    let parts: Vec<&str> = text.trim().split(':').collect();
    let [lo, hi, n, kind] = parts[..] else {
        return Err(bad());
    };
    let lo: f64 = lo.parse().map_err(|_| bad())?;
    let hi: f64 = hi.parse().map_err(|_| bad())?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let grid = match kind {
        "log" => EpsilonGrid::log(lo, hi, n),
        "lin" => EpsilonGrid::linear(lo, hi, n),
        _ => return Err(bad()),
    };
    grid.map_err(|e| usage(e.to_string()))
}

/// Comma-separated `tan(α/2)` values.
pub fn parse_tan_list(text: &str) -> Result<Vec<f64>, CliError> {
    if text.trim().is_empty() {
        return Err(usage("empty --alpha-tan list"));
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("invalid tan(alpha/2) value '{t}'")))
        })
        .collect()
}
