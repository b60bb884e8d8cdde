use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MIN_FIT_POINTS: usize = 4;

/// `d ≈ coefficient · ε^exponent`, fitted by least squares in log-log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit<T> {
    pub exponent: T,
    pub coefficient: T,
    /// Largest absolute deviation of `ln d` from the fitted line.
    pub residual: T,
}

pub fn fit_power_law<T: Scalar>(points: &[(T, T)]) -> Result<PowerLawFit<T>> {
    if points.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData {
            needed: MIN_FIT_POINTS,
            got: points.len(),
        });
    }
    if let Some(&(x, y)) = points
        .iter()
        .find(|&&(x, y)| !(x > T::zero() && y > T::zero() && x.is_finite() && y.is_finite()))
    {
        return Err(Error::InvalidData(format!(
            "power-law fit needs positive finite data, got ({x}, {y})"
        )));
    }
    let logs: Vec<(T, T)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = T::from_usize(logs.len()).expect("point count");
    let mean_x = logs.iter().fold(T::zero(), |acc, p| acc + p.0) / n;
    let mean_y = logs.iter().fold(T::zero(), |acc, p| acc + p.1) / n;
    let (sxx, sxy) = logs
        .iter()
        .fold((T::zero(), T::zero()), |(sxx, sxy), &(x, y)| {
            let dx = x - mean_x;
            (sxx + dx * dx, sxy + dx * (y - mean_y))
        });
    if !(sxx > T::zero()) {
        return Err(Error::InvalidData("abscissae are all equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual = logs.iter().fold(T::zero(), |acc, &(x, y)| {
        acc.max((y - (intercept + slope * x)).abs())
    });
    Ok(PowerLawFit {
        exponent: slope,
        coefficient: intercept.exp(),
        residual,
    })
}
