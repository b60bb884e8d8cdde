use std::fmt::Write;

use num_complex::Complex64;
use wvsim_core::scenarios::{
    amplification_sweep_tan, fit_comparison, run_comparison, AmplificationRow, ComparisonSet,
    EpsilonGrid, PowerLawFit, MIN_FIT_POINTS,
};
use wvsim_core::{weak_value, ComparisonRow64, CouplingConfig64, WEAKNESS_THRESHOLD};

use crate::args::Format;
use crate::config::RunConfig;
use crate::error::{usage, CliError};
use crate::spec::{parse_observable, parse_selection};

pub const COMPARE_HEADER: &str =
    "epsilon,d_eigen,d_weak_vs_eigen,d_expect_vs_eigen,p_postselect,weakness";
pub const AMPLIFY_HEADER: &str = "tan_half_alpha,mean_shift_over_g_eps,p_postselect,weak_flag";

const AMPLIFY_DEFAULT_EPS: f64 = 1e-4;

/// 12 significant digits, exponent form, no negative zero.
pub fn num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn fixed12(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

pub fn format_complex(z: Complex64) -> String {
    let (re, im) = (fixed12(z.re), fixed12(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:.12} {sign} {:.12}i", im.abs())
}

pub fn weak_value_cmd(cfg: &RunConfig) -> Result<String, CliError> {
    let pre = cfg
        .pre
        .as_deref()
        .ok_or_else(|| usage("weak-value needs --pre"))?;
    let post = cfg
        .post
        .as_deref()
        .ok_or_else(|| usage("weak-value needs --post"))?;
    let obs = cfg.obs.as_deref().unwrap_or("diag");
    let (pre, post) = parse_selection(pre, post)?;
    let a = parse_observable(obs, pre.labels())?;
    let aw = weak_value(&pre, &post, &a)?;
    Ok(format!("{}\n", format_complex(aw)))
}

pub fn compare_cmd(cfg: &RunConfig) -> Result<String, CliError> {
    let grid = cfg.epsilon_grid(EpsilonGrid::default_sweep())?;
    let set = ComparisonSet::standard(cfg.g, cfg.delta)?;
    let rows = run_comparison(&set, &grid)?;
    let fits = if rows.len() >= MIN_FIT_POINTS {
        Some(fit_comparison(&rows)?)
    } else {
        None
    };

    let mut out = String::new();
    writeln!(out, "# wvsim compare").unwrap();
    writeln!(
        out,
        "# g={} delta={} eps={}",
        num(cfg.g),
        num(cfg.delta),
        cfg.describe_eps()
    )
    .unwrap();
    writeln!(
        out,
        "# weakness threshold={} (chosen convention; rows above it are not in the weak regime)",
        num(WEAKNESS_THRESHOLD)
    )
    .unwrap();
    match cfg.format {
        Format::Csv => {
            writeln!(out, "{COMPARE_HEADER}").unwrap();
            for r in &rows {
                writeln!(out, "{}", compare_csv_row(r)).unwrap();
            }
        }
        Format::Pretty => {
            writeln!(
                out,
                "{:>14} {:>14} {:>16} {:>18} {:>14} {:>14}",
                "epsilon",
                "d_eigen",
                "d_weak_vs_eigen",
                "d_expect_vs_eigen",
                "p_postselect",
                "weakness"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{:>14.6e} {:>14.6e} {:>16.6e} {:>18.6e} {:>14.6e} {:>14.6e}",
                    r.epsilon,
                    r.d_eigen,
                    r.d_weak_vs_eigen,
                    r.d_expect_vs_eigen,
                    r.postselect_probability,
                    r.weakness
                )
                .unwrap();
            }
        }
    }
    if let Some(f) = fits {
        for (name, fit) in [
            ("d_eigen", f.eigen),
            ("d_weak_vs_eigen", f.weak_vs_eigen),
            ("d_expect_vs_eigen", f.expect_vs_eigen),
        ] {
            writeln!(out, "{}", fit_line(name, &fit)).unwrap();
        }
    }
    Ok(out)
}

fn compare_csv_row(r: &ComparisonRow64) -> String {
    [
        r.epsilon,
        r.d_eigen,
        r.d_weak_vs_eigen,
        r.d_expect_vs_eigen,
        r.postselect_probability,
        r.weakness,
    ]
    .map(num)
    .join(",")
}

fn fit_line(name: &str, fit: &PowerLawFit<f64>) -> String {
    format!(
        "# fit {name} exponent={} coefficient={} residual={}",
        num(fit.exponent),
        num(fit.coefficient),
        num(fit.residual)
    )
}

pub fn amplify_cmd(cfg: &RunConfig) -> Result<String, CliError> {
    let tans = match &cfg.alpha_tan {
        Some(t) if !t.is_empty() => t.clone(),
        _ => return Err(usage("amplify needs a non-empty --alpha-tan list")),
    };
    if let Some(t) = tans.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
        return Err(usage(format!(
            "tan(alpha/2) must be positive and finite, got {t}"
        )));
    }
    let grid = cfg.epsilon_grid(EpsilonGrid::single(AMPLIFY_DEFAULT_EPS).expect("positive"))?;
    let [eps] = grid.values()[..] else {
        return Err(usage("amplify takes a single --eps"));
    };
    let coupling = CouplingConfig64::new(cfg.g, eps, cfg.delta)?;
    let rows = amplification_sweep_tan(&tans, coupling)?;

    let mut out = String::new();
    writeln!(out, "# wvsim amplify").unwrap();
    writeln!(
        out,
        "# g={} delta={} eps={}",
        num(cfg.g),
        num(cfg.delta),
        num(eps)
    )
    .unwrap();
    writeln!(
        out,
        "# weak_flag is true when weakness <= {} (chosen convention)",
        num(WEAKNESS_THRESHOLD)
    )
    .unwrap();
    match cfg.format {
        Format::Csv => {
            writeln!(out, "{AMPLIFY_HEADER}").unwrap();
            for r in &rows {
                writeln!(out, "{}", amplify_csv_row(r)).unwrap();
            }
        }
        Format::Pretty => {
            writeln!(
                out,
                "{:>14} {:>22} {:>14} {:>10}",
                "tan_half_alpha", "mean_shift_over_g_eps", "p_postselect", "weak_flag"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{:>14.6e} {:>22.6e} {:>14.6e} {:>10}",
                    r.tan_half_alpha, r.mean_shift_over_kick, r.postselect_probability, r.weak
                )
                .unwrap();
            }
        }
    }
    for r in &rows {
        writeln!(
            out,
            "# weakness tan_half_alpha={} value={}",
            num(r.tan_half_alpha),
            num(r.weakness)
        )
        .unwrap();
    }
    Ok(out)
}

fn amplify_csv_row(r: &AmplificationRow<f64>) -> String {
    format!(
        "{},{},{},{}",
        num(r.tan_half_alpha),
        num(r.mean_shift_over_kick),
        num(r.postselect_probability),
        r.weak
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(0.005), "5.00000000000e-3");
        assert_eq!(num(-0.0), "0.00000000000e0");
        assert_eq!(num(1.0 / 3.0), "3.33333333333e-1");
    }

    #[test]
    fn complex_format() {
        assert_eq!(
            format_complex(Complex64::new(1.0, 0.0)),
            "1.000000000000 + 0.000000000000i"
        );
        assert_eq!(
            format_complex(Complex64::new(0.5, -0.5)),
            "0.500000000000 - 0.500000000000i"
        );
        assert_eq!(
            format_complex(Complex64::new(-1e-17, -1e-17)),
            "0.000000000000 + 0.000000000000i"
        );
    }
}
