//! Impulsive von Neumann coupling `H_int = g A P`, post-selection, and weak values.
//!
//! Over the interaction time `ε` the free Hamiltonians are dropped, so
//! `U = exp(-i g ε A ⊗ P)` translates the pointer by `g ε a` on the eigenspace
//! of eigenvalue `a`. Joint states are therefore finite lists of branches
//! (eigenspace component, pointer shift) and every quantity below is exact.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::pointer::{bures_pure, PointerMixture, PointerState};
use crate::qstate::{inner_raw, norm_sqr, Observable, SystemState};
use crate::scalar::Scalar;

/// Runs whose [`weakness_metric`] exceeds this are reported as not weak.
pub const WEAKNESS_THRESHOLD: f64 = 1e-2;

/// Coupling strength `g`, interaction time `ε` and pointer width `Δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingConfig<T> {
    g: T,
    epsilon: T,
    delta: T,
}

impl<T: Scalar> CouplingConfig<T> {
    pub fn new(g: T, epsilon: T, delta: T) -> Result<Self> {
        for (name, v) in [("g", g), ("epsilon", epsilon), ("delta", delta)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self { g, epsilon, delta })
    }

    pub fn with_epsilon(&self, epsilon: T) -> Result<Self> {
        Self::new(self.g, epsilon, self.delta)
    }

    pub fn g(&self) -> T {
        self.g
    }

    pub fn epsilon(&self) -> T {
        self.epsilon
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    /// Pointer displacement per unit eigenvalue, `g ε`.
    pub fn kick(&self) -> T {
        self.g * self.epsilon
    }

    /// The initial pointer `Φ0`, a Gaussian of width `Δ` at the origin.
    pub fn initial_pointer(&self) -> PointerState<T> {
        PointerState::gaussian(T::zero(), self.delta).expect("validated width")
    }
}

/// One eigenspace branch of the system-pointer state after coupling.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch<T> {
    /// Basis label when the branch is a single basis vector of a diagonal observable.
    pub label: Option<i64>,
    pub eigenvalue: T,
    pub amplitude: Complex<T>,
    /// Normalized system vector of the branch, on the pre-selected state's basis.
    pub system: Vec<Complex<T>>,
    /// Pointer displacement `g ε a`.
    pub shift: T,
}

/// `Σ_b amplitude_b |system_b⟩ ⊗ Φ0(Q - shift_b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState<T> {
    labels: Vec<i64>,
    pointer0: PointerState<T>,
    branches: Vec<Branch<T>>,
}

impl<T: Scalar> JointState<T> {
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn branches(&self) -> &[Branch<T>] {
        &self.branches
    }

    pub fn initial_pointer(&self) -> &PointerState<T> {
        &self.pointer0
    }

    /// `Σ_b |amplitude_b|²`
    pub fn norm_sqr(&self) -> T {
        self.branches
            .iter()
            .fold(T::zero(), |acc, b| acc + b.amplitude.norm_sqr())
    }

    /// Unnormalized pointer state `(⟨post| ⊗ 1) |joint⟩`.
    fn project(&self, post: &SystemState<T>) -> Result<PointerState<T>> {
        if post.labels() != self.labels.as_slice() {
            return Err(Error::BasisMismatch);
        }
        let mut terms = Vec::new();
        for b in &self.branches {
            let weight = inner_raw(post.amplitudes(), &b.system) * b.amplitude;
            for t in self.pointer0.terms() {
                terms.push((t.shift + b.shift, weight * t.coeff));
            }
        }
        PointerState::from_terms(self.pointer0.width(), terms).map_err(|e| match e {
            Error::ZeroVector => Error::PostSelectionImpossible,
            other => other,
        })
    }
}

/// Conditional pointer state after a successful post-selection.
#[derive(Debug, Clone, PartialEq)]
pub struct PostSelectionResult<T> {
    pub pointer: PointerState<T>,
    pub probability: T,
}

/// `A_w = ⟨post|A|pre⟩ / ⟨post|pre⟩`.
pub fn weak_value<T: Scalar>(
    pre: &SystemState<T>,
    post: &SystemState<T>,
    a: &Observable<T>,
) -> Result<Complex<T>> {
    weak_value_with_floor(pre, post, a, T::state_tolerance())
}

/// [`weak_value`] with an explicit lower bound on `|⟨post|pre⟩|`.
pub fn weak_value_with_floor<T: Scalar>(
    pre: &SystemState<T>,
    post: &SystemState<T>,
    a: &Observable<T>,
    floor: T,
) -> Result<Complex<T>> {
    let denom = post.inner(pre)?;
    let num = post.inner_vec(&a.apply(pre)?)?;
    if denom.norm() <= floor {
        return Err(Error::OrthogonalSelection);
    }
    Ok(num / denom)
}

/// Applies `exp(-i g ε A ⊗ P)` to `|pre⟩ ⊗ pointer0`.
///
/// Branches are eigenspaces of `a`; degenerate eigenvalues share a branch
/// because their pointer shifts coincide. Branches the pre-selected state
/// does not populate are dropped.
pub fn couple<T: Scalar>(
    pre: &SystemState<T>,
    a: &Observable<T>,
    cfg: &CouplingConfig<T>,
    pointer0: &PointerState<T>,
) -> Result<JointState<T>> {
    if pre.labels() != a.labels() {
        return Err(Error::BasisMismatch);
    }
    if pointer0.width() != cfg.delta() {
        return Err(Error::WidthMismatch);
    }
    let pointer0 = if pointer0.is_normalized() {
        pointer0.clone()
    } else {
        pointer0.normalize()?
    };
    let eig = a.eigen();
    let dim = pre.dim();
    let zero = Complex::new(T::zero(), T::zero());
    let mut branches = Vec::new();
    for (value, members) in eig.degenerate_groups(T::state_tolerance()) {
        let shift = cfg.kick() * value;
        let (label, amplitude, system) = if let [k] = members[..] {
            let v = &eig.vectors[k];
            let label = a.is_diagonal().then(|| a.labels()[k]);
            (label, inner_raw(v, pre.amplitudes()), v.clone())
        } else {
            let mut component = vec![zero; dim];
            for &k in &members {
                let v = &eig.vectors[k];
                let c = inner_raw(v, pre.amplitudes());
                for (x, vi) in component.iter_mut().zip(v) {
                    *x = *x + *vi * c;
                }
            }
            let norm = norm_sqr(&component).sqrt();
            if norm > T::zero() {
                for x in &mut component {
                    *x = *x / norm;
                }
            }
            (None, Complex::new(norm, T::zero()), component)
        };
        if amplitude.norm_sqr() <= T::zero_norm_floor() {
            continue;
        }
        branches.push(Branch {
            label,
            eigenvalue: value,
            amplitude,
            system,
            shift,
        });
    }
    Ok(JointState {
        labels: pre.labels().to_vec(),
        pointer0,
        branches,
    })
}

/// Projects the system onto `post` and returns the renormalized pointer with
/// the exact success probability.
pub fn post_select<T: Scalar>(
    joint: &JointState<T>,
    post: &SystemState<T>,
) -> Result<PostSelectionResult<T>> {
    let raw = joint.project(post)?;
    let probability = raw.norm_sqr();
    if probability <= T::zero_norm_floor() {
        return Err(Error::PostSelectionImpossible);
    }
    let pointer = raw
        .normalize()
        .map_err(|_| Error::PostSelectionImpossible)?;
    Ok(PostSelectionResult {
        pointer,
        probability: probability.min(T::one()),
    })
}

/// Reduced pointer state when no post-selection is made: the Born-weighted
/// mixture of the shifted pointers, one component per distinct shift.
///
/// Exact because different branches carry orthogonal system vectors.
pub fn no_postselect_mixture<T: Scalar>(joint: &JointState<T>) -> Result<PointerMixture<T>> {
    let total = joint.norm_sqr();
    let mut merged: Vec<(T, T)> = Vec::new();
    for b in &joint.branches {
        let w = b.amplitude.norm_sqr() / total;
        match merged
            .iter_mut()
            .find(|(shift, _)| (*shift - b.shift).abs() <= T::merge_tolerance())
        {
            Some((_, weight)) => *weight = *weight + w,
            None => merged.push((b.shift, w)),
        }
    }
    merged.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite shifts"));
    PointerMixture::new(
        merged
            .into_iter()
            .map(|(shift, w)| (w.min(T::one()), joint.pointer0.shifted(shift)))
            .collect(),
    )
}

/// Relative change of the selection amplitude caused by the coupling.
///
/// Compares `‖(⟨post| ⊗ 1) U |pre⟩|Φ0⟩‖`, the magnitude of the scalar product
/// with the pointer left unobserved, against `|⟨post|pre⟩|`. Zero without
/// coupling, second order in `ε` for a bounded weak value, and of order one
/// once the pointer shifts become comparable to `Δ / |A_w|`.
pub fn weakness_metric<T: Scalar>(
    pre: &SystemState<T>,
    post: &SystemState<T>,
    a: &Observable<T>,
    cfg: &CouplingConfig<T>,
) -> Result<T> {
    let bare = post.inner(pre)?.norm();
    if bare <= T::state_tolerance() {
        return Err(Error::OrthogonalSelection);
    }
    let joint = couple(pre, a, cfg, &cfg.initial_pointer())?;
    let coupled = match joint.project(post) {
        Ok(raw) => raw.norm_sqr().sqrt(),
        Err(Error::PostSelectionImpossible) => T::zero(),
        Err(e) => return Err(e),
    };
    Ok((coupled - bare).abs() / bare)
}

/// Post-selected pointer next to the Gaussian shifted by `g ε Re(A_w)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftCheck<T> {
    pub weak_value: Complex<T>,
    pub actual: PointerState<T>,
    pub ideal: PointerState<T>,
    /// Bures angle between `actual` and `ideal`.
    pub distance: T,
    /// Bures angle between `Φ0` and `actual`.
    pub displacement: T,
}

/// Measures how well the operator `A` can be replaced by the number `A_w`.
pub fn effective_shift_check<T: Scalar>(
    pre: &SystemState<T>,
    post: &SystemState<T>,
    a: &Observable<T>,
    cfg: &CouplingConfig<T>,
) -> Result<ShiftCheck<T>> {
    let aw = weak_value(pre, post, a)?;
    if !aw.re.is_finite() {
        return Err(Error::OrthogonalSelection);
    }
    let pointer0 = cfg.initial_pointer();
    let joint = couple(pre, a, cfg, &pointer0)?;
    let actual = post_select(&joint, post)?.pointer;
    let ideal = PointerState::gaussian(cfg.kick() * aw.re, cfg.delta())?;
    let distance = bures_pure(&actual, &ideal)?;
    let displacement = bures_pure(&pointer0, &actual)?;
    Ok(ShiftCheck {
        weak_value: aw,
        actual,
        ideal,
        distance,
        displacement,
    })
}
