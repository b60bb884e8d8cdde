//! Uniform-grid evaluation of pointer states and trapezoidal quadrature.
//!
//! Used only to cross-check the closed-form Gram matrix; nothing here calls
//! back into the analytic overlap code.

use num_complex::Complex;

use super::PointerState;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_POINTS: usize = 4096;
pub const MIN_POINTS: usize = 16;
/// Half-widths of margin required beyond the outermost shift.
pub const MARGIN_WIDTHS: f64 = 8.0;

/// Wavefunction samples on `n` equally spaced points spanning `[q_min, q_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T> {
    pub q_min: T,
    pub q_max: T,
    pub values: Vec<Complex<T>>,
}

impl<T: Scalar> GridFunction<T> {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn step(&self) -> T {
        (self.q_max - self.q_min) / T::from_usize(self.n() - 1).expect("grid size")
    }

    pub fn point(&self, i: usize) -> T {
        self.q_min + self.step() * T::from_usize(i).expect("grid index")
    }

    fn same_grid(&self, other: &Self) -> Result<()> {
        if self.q_min == other.q_min && self.q_max == other.q_max && self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::InvalidGrid(
                "functions sampled on different grids".into(),
            ))
        }
    }

    /// Trapezoidal `∫ conj(self) other dq`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        self.same_grid(other)?;
        Ok(trapezoid(
            self.step(),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.conj() * b),
        ))
    }

    /// Trapezoidal `∫ |f|² dq`.
    pub fn norm_sqr(&self) -> T {
        trapezoid(
            self.step(),
            self.values
                .iter()
                .map(|v| Complex::new(v.norm_sqr(), T::zero())),
        )
        .re
    }

    /// Trapezoidal `∫ q |f|² dq / ∫ |f|² dq`.
    pub fn mean_position(&self) -> T {
        let num = trapezoid(
            self.step(),
            self.values
                .iter()
                .enumerate()
                .map(|(i, v)| Complex::new(self.point(i) * v.norm_sqr(), T::zero())),
        )
        .re;
        num / self.norm_sqr()
    }
}

fn trapezoid<T: Scalar>(h: T, samples: impl Iterator<Item = Complex<T>>) -> Complex<T> {
    let samples: Vec<_> = samples.collect();
    let half = T::lit(0.5);
    let n = samples.len();
    let inner = samples[1..n - 1]
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |acc, v| acc + v);
    (inner + (samples[0] + samples[n - 1]) * half) * h
}

/// Samples `s` on `[q_min, q_max]` with `n` points. The range must cover every
/// shift by `8Δ` on both sides.
pub fn to_grid<T: Scalar>(
    s: &PointerState<T>,
    q_min: T,
    q_max: T,
    n: usize,
) -> Result<GridFunction<T>> {
    if n < MIN_POINTS {
        return Err(Error::InvalidGrid(format!(
            "need at least {MIN_POINTS} points, got {n}"
        )));
    }
    if !(q_max > q_min) {
        return Err(Error::InvalidGrid("empty range".into()));
    }
    let margin = T::lit(MARGIN_WIDTHS) * s.width();
    let (lo, hi) = s.support();
    let (need_min, need_max) = (lo - margin, hi + margin);
    if need_min < q_min || need_max > q_max {
        return Err(Error::RangeTooNarrow {
            q_min: q_min.to_f64().unwrap_or(f64::NAN),
            q_max: q_max.to_f64().unwrap_or(f64::NAN),
            need_min: need_min.to_f64().unwrap_or(f64::NAN),
            need_max: need_max.to_f64().unwrap_or(f64::NAN),
        });
    }
    let h = (q_max - q_min) / T::from_usize(n - 1).expect("grid size");
    let values = (0..n)
        .map(|i| s.eval(q_min + h * T::from_usize(i).expect("grid index")))
        .collect();
    Ok(GridFunction {
        q_min,
        q_max,
        values,
    })
}

/// Smallest default range covering all given states: `[min shift - 8Δ, max shift + 8Δ]`.
pub fn covering_range<T: Scalar>(states: &[&PointerState<T>]) -> (T, T) {
    let margin = T::lit(MARGIN_WIDTHS);
    states
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), s| {
            let (a, b) = s.support();
            (
                lo.min(a - margin * s.width()),
                hi.max(b + margin * s.width()),
            )
        })
}

/// Trapezoidal `⟨a|b⟩` on the common default range.
pub fn grid_overlap<T: Scalar>(
    a: &PointerState<T>,
    b: &PointerState<T>,
    n: usize,
) -> Result<Complex<T>> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch);
    }
    let (lo, hi) = covering_range(&[a, b]);
    to_grid(a, lo, hi, n)?.inner(&to_grid(b, lo, hi, n)?)
}
