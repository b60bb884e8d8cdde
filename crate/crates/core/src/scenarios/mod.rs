//! Named measurement setups and the sweeps built on them.
//!
//! Three setups share one integer-spin observable and one `(g, Δ)`:
//! an eigenstate `|1⟩`, a pre/post-selected pair with weak value 1 that never
//! populates `|1⟩`, and the pre-selected `(|0⟩+|2⟩)/√2` whose expectation is 1.
//! [`run_comparison`] measures how far the latter two leave the pointer from
//! the eigenstate case; [`amplification_sweep`] covers the spin-1/2 setup whose
//! weak value is `tan(α/2)`.

mod fit;

use num_complex::Complex;

pub use fit::{fit_power_law, PowerLawFit, MIN_FIT_POINTS};

use crate::error::{Error, Result};
use crate::measurement::{
    couple, no_postselect_mixture, post_select, weak_value, weakness_metric, CouplingConfig,
    WEAKNESS_THRESHOLD,
};
use crate::pointer::{bures_mixed, bures_pure, mean_position, PointerMixture, PointerState};
use crate::qstate::{Observable, SystemState};
use crate::scalar::Scalar;

/// Strictly increasing list of positive interaction times.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonGrid<T>(Vec<T>);

impl<T: Scalar> EpsilonGrid<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidConfig("epsilon grid is empty".into()));
        }
        if values.iter().any(|&e| !(e > T::zero() && e.is_finite())) {
            return Err(Error::InvalidConfig(
                "epsilon values must be positive and finite".into(),
            ));
        }
        if values.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidConfig(
                "epsilon grid must be strictly increasing".into(),
            ));
        }
        Ok(Self(values))
    }

    pub fn single(epsilon: T) -> Result<Self> {
        Self::new(vec![epsilon])
    }

    /// `n` points from `lo` to `hi` inclusive, equally spaced in `ln ε`.
    pub fn log(lo: T, hi: T, n: usize) -> Result<Self> {
        if !(lo > T::zero()) {
            return Err(Error::InvalidConfig("logarithmic grid needs lo > 0".into()));
        }
        Self::spaced(lo, hi, n, |t| lo * (hi / lo).powf(t))
    }

    /// `n` points from `lo` to `hi` inclusive, equally spaced.
    pub fn linear(lo: T, hi: T, n: usize) -> Result<Self> {
        Self::spaced(lo, hi, n, |t| lo + (hi - lo) * t)
    }

    fn spaced(lo: T, hi: T, n: usize, at: impl Fn(T) -> T) -> Result<Self> {
        match n {
            0 => Err(Error::InvalidConfig("grid needs at least one point".into())),
            1 if lo == hi => Self::single(lo),
            1 => Err(Error::InvalidConfig(
                "a one-point grid needs lo == hi".into(),
            )),
            _ => {
                let last = T::from_usize(n - 1).expect("grid size");
                let mut v: Vec<T> = (0..n)
                    .map(|i| at(T::from_usize(i).expect("grid index") / last))
                    .collect();
                v[0] = lo;
                v[n - 1] = hi;
                Self::new(v)
            }
        }
    }

    /// Eight log-spaced points on `[1e-3, 1e-2]`.
    pub fn default_sweep() -> Self {
        Self::log(T::lit(1e-3), T::lit(1e-2), 8).expect("valid default grid")
    }

    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A named system preparation, optional post-selection, and coupling.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec<T> {
    pub name: String,
    pub pre: SystemState<T>,
    pub post: Option<SystemState<T>>,
    pub observable: Observable<T>,
    pub cfg: CouplingConfig<T>,
    pub epsilon_grid: EpsilonGrid<T>,
}

impl<T: Scalar> ScenarioSpec<T> {
    pub fn labels(&self) -> &[i64] {
        self.pre.labels()
    }

    pub fn dim(&self) -> usize {
        self.pre.dim()
    }

    pub fn with_grid(mut self, grid: EpsilonGrid<T>) -> Self {
        self.epsilon_grid = grid;
        self
    }

    fn require_post(&self) -> Result<&SystemState<T>> {
        self.post.as_ref().ok_or_else(|| {
            Error::InvalidConfig(format!("scenario '{}' has no post-selection", self.name))
        })
    }

    pub fn weak_value(&self) -> Result<Complex<T>> {
        weak_value(&self.pre, self.require_post()?, &self.observable)
    }

    pub fn expectation(&self) -> Result<T> {
        self.observable.expectation(&self.pre)
    }

    /// `|⟨post|pre⟩|²`, the post-selection probability without coupling.
    pub fn bare_probability(&self) -> Result<T> {
        Ok(self.require_post()?.inner(&self.pre)?.norm_sqr())
    }

    fn cfg_at(&self, epsilon: T) -> Result<CouplingConfig<T>> {
        self.cfg.with_epsilon(epsilon)
    }

    /// Pointer state after post-selection at interaction time `epsilon`, with its probability.
    pub fn postselected_pointer(&self, epsilon: T) -> Result<(PointerState<T>, T)> {
        let cfg = self.cfg_at(epsilon)?;
        let joint = couple(&self.pre, &self.observable, &cfg, &cfg.initial_pointer())?;
        let r = post_select(&joint, self.require_post()?)?;
        Ok((r.pointer, r.probability))
    }

    /// Pointer state at `epsilon` when the outcome of the system is ignored.
    pub fn unselected_pointer(&self, epsilon: T) -> Result<PointerMixture<T>> {
        let cfg = self.cfg_at(epsilon)?;
        let joint = couple(&self.pre, &self.observable, &cfg, &cfg.initial_pointer())?;
        no_postselect_mixture(&joint)
    }

    pub fn weakness(&self, epsilon: T) -> Result<T> {
        weakness_metric(
            &self.pre,
            self.require_post()?,
            &self.observable,
            &self.cfg_at(epsilon)?,
        )
    }
}

fn real<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// Spin-1/2 with `|ψ⟩ = cos(α/2)|↑x⟩ + sin(α/2)|↓x⟩`, post-selected on `|↑x⟩`,
/// measuring `σ_z`. Basis labels `{-1, +1}` are the `σ_z` eigenvalues, so
/// `|↑x⟩ = (|+1⟩+|−1⟩)/√2` and `|↓x⟩ = (|+1⟩−|−1⟩)/√2`. The weak value is `tan(α/2)`.
pub fn aav_spin_scenario<T: Scalar>(alpha: T, cfg: CouplingConfig<T>) -> Result<ScenarioSpec<T>> {
    if !(alpha > T::zero() && alpha < T::PI()) {
        return Err(Error::InvalidAngle(alpha.to_f64().unwrap_or(f64::NAN)));
    }
    let half = alpha / T::lit(2.0);
    let (s, c) = half.sin_cos();
    let r = T::FRAC_1_SQRT_2();
    let pre = SystemState::new([(1, real((c + s) * r)), (-1, real((c - s) * r))])?;
    let post = SystemState::new([(1, real(r)), (-1, real(r))])?;
    Ok(ScenarioSpec {
        name: "aav-spin".into(),
        pre,
        post: Some(post),
        observable: Observable::sigma_z(),
        cfg,
        epsilon_grid: EpsilonGrid::single(cfg.epsilon())?,
    })
}

/// [`aav_spin_scenario`] parameterized by the target weak value `tan(α/2) > 0`.
pub fn aav_spin_scenario_tan<T: Scalar>(
    tan_half_alpha: T,
    cfg: CouplingConfig<T>,
) -> Result<ScenarioSpec<T>> {
    if !(tan_half_alpha > T::zero()) || !tan_half_alpha.is_finite() {
        return Err(Error::InvalidAngle(
            (T::lit(2.0) * tan_half_alpha.atan())
                .to_f64()
                .unwrap_or(f64::NAN),
        ));
    }
    aav_spin_scenario(T::lit(2.0) * tan_half_alpha.atan(), cfg)
}

fn spin_observable<T: Scalar>(labels: Vec<i64>) -> Observable<T> {
    Observable::integer_spin(labels).expect("sorted distinct labels")
}

/// Pre-selected in the eigenstate `|1⟩` of `A = Σ j|j⟩⟨j|`; no post-selection needed.
pub fn eigenvalue_scenario<T: Scalar>(cfg: CouplingConfig<T>) -> Result<ScenarioSpec<T>> {
    let labels = vec![-1, 0, 1];
    Ok(ScenarioSpec {
        name: "eigenvalue".into(),
        pre: SystemState::basis(&labels, 1)?,
        post: None,
        observable: spin_observable(labels),
        cfg,
        epsilon_grid: EpsilonGrid::default_sweep(),
    })
}

/// `⟨φ| = (⟨−1| − 2⟨0|)/√5`, `|ψ⟩ = (|−1⟩ + |0⟩)/√2`: weak value 1 with no
/// weight on `|1⟩` in either state.
pub fn eq6_weak_scenario<T: Scalar>(cfg: CouplingConfig<T>) -> Result<ScenarioSpec<T>> {
    let one = T::one();
    let pre = SystemState::from_real([(-1, one), (0, one), (1, T::zero())])?;
    let post = SystemState::from_real([(-1, one), (0, -T::lit(2.0)), (1, T::zero())])?;
    Ok(ScenarioSpec {
        name: "weak-value".into(),
        observable: spin_observable(pre.labels().to_vec()),
        pre,
        post: Some(post),
        cfg,
        epsilon_grid: EpsilonGrid::default_sweep(),
    })
}

/// `|ψ⟩ = (|0⟩ + |2⟩)/√2`, only pre-selected: `⟨A⟩ = 1` without weight on `|1⟩`.
pub fn expectation_scenario<T: Scalar>(cfg: CouplingConfig<T>) -> Result<ScenarioSpec<T>> {
    let pre = SystemState::from_real([(0, T::one()), (1, T::zero()), (2, T::one())])?;
    Ok(ScenarioSpec {
        name: "expectation".into(),
        observable: spin_observable(pre.labels().to_vec()),
        pre,
        post: None,
        cfg,
        epsilon_grid: EpsilonGrid::default_sweep(),
    })
}

/// The three setups compared side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonSet<T> {
    pub eigen: ScenarioSpec<T>,
    pub weak: ScenarioSpec<T>,
    pub expectation: ScenarioSpec<T>,
}

impl<T: Scalar> ComparisonSet<T> {
    /// Standard setups for coupling `g` and pointer width `delta`.
    pub fn standard(g: T, delta: T) -> Result<Self> {
        let cfg = CouplingConfig::new(g, T::lit(1e-2), delta)?;
        Ok(Self {
            eigen: eigenvalue_scenario(cfg)?,
            weak: eq6_weak_scenario(cfg)?,
            expectation: expectation_scenario(cfg)?,
        })
    }

    fn validate(&self) -> Result<()> {
        let (g, d) = (self.eigen.cfg.g(), self.eigen.cfg.delta());
        for s in [&self.weak, &self.expectation] {
            if s.cfg.g() != g || s.cfg.delta() != d {
                return Err(Error::InvalidConfig(format!(
                    "scenario '{}' does not share g and delta with '{}'",
                    s.name, self.eigen.name
                )));
            }
        }
        for s in [&self.eigen, &self.weak, &self.expectation] {
            let integer_spin = s.observable.is_diagonal()
                && s.labels()
                    .iter()
                    .enumerate()
                    .all(|(i, &j)| s.observable.entry(i, i) == real(T::lit(j as f64)));
            if !integer_spin {
                return Err(Error::InvalidConfig(format!(
                    "scenario '{}' does not use the integer spin observable",
                    s.name
                )));
            }
        }
        self.weak.require_post()?;
        Ok(())
    }
}

/// Distances of the weak-value and expectation-value pointers from the
/// eigenvalue pointer at one interaction time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow<T> {
    pub epsilon: T,
    /// `D(Φ0, Φe)`
    pub d_eigen: T,
    /// `D(Φe, Φw)`
    pub d_weak_vs_eigen: T,
    /// `D(Φe, ρ_ex)`
    pub d_expect_vs_eigen: T,
    pub postselect_probability: T,
    pub weakness: T,
}

impl<T: Scalar> ComparisonRow<T> {
    pub fn is_weak(&self) -> bool {
        self.weakness <= T::lit(WEAKNESS_THRESHOLD)
    }
}

/// One [`ComparisonRow`] per `ε`, in grid order.
pub fn run_comparison<T: Scalar>(
    set: &ComparisonSet<T>,
    grid: &EpsilonGrid<T>,
) -> Result<Vec<ComparisonRow<T>>> {
    set.validate()?;
    grid.values()
        .iter()
        .map(|&epsilon| {
            let phi0 = set.eigen.cfg_at(epsilon)?.initial_pointer();
            let eigen_mix = set.eigen.unselected_pointer(epsilon)?;
            let phi_e = match eigen_mix.components() {
                [(_, s)] => s.clone(),
                _ => {
                    return Err(Error::InvalidConfig(format!(
                        "scenario '{}' is not prepared in an eigenstate",
                        set.eigen.name
                    )))
                }
            };
            let (phi_w, probability) = set.weak.postselected_pointer(epsilon)?;
            let rho_ex = set.expectation.unselected_pointer(epsilon)?;
            Ok(ComparisonRow {
                epsilon,
                d_eigen: bures_pure(&phi0, &phi_e)?,
                d_weak_vs_eigen: bures_pure(&phi_e, &phi_w)?,
                d_expect_vs_eigen: bures_mixed(&phi_e, &rho_ex)?,
                postselect_probability: probability,
                weakness: set.weak.weakness(epsilon)?,
            })
        })
        .collect()
}

/// Power-law fits of the three distance columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonFits<T> {
    pub eigen: PowerLawFit<T>,
    pub weak_vs_eigen: PowerLawFit<T>,
    pub expect_vs_eigen: PowerLawFit<T>,
}

pub fn fit_comparison<T: Scalar>(rows: &[ComparisonRow<T>]) -> Result<ComparisonFits<T>> {
    let column = |f: fn(&ComparisonRow<T>) -> T| -> Vec<(T, T)> {
        rows.iter().map(|r| (r.epsilon, f(r))).collect()
    };
    Ok(ComparisonFits {
        eigen: fit_power_law(&column(|r| r.d_eigen))?,
        weak_vs_eigen: fit_power_law(&column(|r| r.d_weak_vs_eigen))?,
        expect_vs_eigen: fit_power_law(&column(|r| r.d_expect_vs_eigen))?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplificationRow<T> {
    pub tan_half_alpha: T,
    /// `⟨Q⟩ / (g ε)` of the post-selected pointer.
    pub mean_shift_over_kick: T,
    pub postselect_probability: T,
    pub weakness: T,
    pub weak: bool,
}

/// Post-selected pointer displacement of the spin-1/2 setup for each `α`.
///
/// Rows outside the weak regime are kept and marked `weak = false`.
pub fn amplification_sweep<T: Scalar>(
    alphas: &[T],
    cfg: CouplingConfig<T>,
) -> Result<Vec<AmplificationRow<T>>> {
    alphas
        .iter()
        .map(|&alpha| {
            amplification_row(aav_spin_scenario(alpha, cfg)?, (alpha / T::lit(2.0)).tan())
        })
        .collect()
}

/// [`amplification_sweep`] taking `tan(α/2)` values directly.
pub fn amplification_sweep_tan<T: Scalar>(
    tans: &[T],
    cfg: CouplingConfig<T>,
) -> Result<Vec<AmplificationRow<T>>> {
    tans.iter()
        .map(|&t| amplification_row(aav_spin_scenario_tan(t, cfg)?, t))
        .collect()
}

fn amplification_row<T: Scalar>(
    spec: ScenarioSpec<T>,
    tan_half_alpha: T,
) -> Result<AmplificationRow<T>> {
    let eps = spec.cfg.epsilon();
    let (pointer, probability) = spec.postselected_pointer(eps)?;
    let weakness = spec.weakness(eps)?;
    Ok(AmplificationRow {
        tan_half_alpha,
        mean_shift_over_kick: mean_position(&pointer) / spec.cfg.kick(),
        postselect_probability: probability,
        weakness,
        weak: weakness <= T::lit(WEAKNESS_THRESHOLD),
    })
}
