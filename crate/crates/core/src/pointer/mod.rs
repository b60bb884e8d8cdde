//! Pointer wavefunctions as superpositions of equal-width shifted Gaussians.
//!
//! Every basis function is the normalized Gaussian
//! `G_μ(Q) = (2πΔ²)^(-1/4) exp(-(Q-μ)²/4Δ²)`, so the Gram matrix is known in
//! closed form: `⟨G_a|G_b⟩ = exp(-(a-b)²/8Δ²)` and
//! `⟨G_a|Q|G_b⟩ = (a+b)/2 · exp(-(a-b)²/8Δ²)`.
//! The impulsive coupling `exp(-igεA⊗P)` only translates these functions, so
//! the family is closed under measurement and no discretization is needed.
//! [`grid`] evaluates the same states on a uniform grid as an independent check.

pub mod grid;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use grid::GridFunction;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term<T> {
    pub shift: T,
    pub coeff: Complex<T>,
}

/// `Σ_k c_k G_{μ_k}` with a single width `Δ`, shifts sorted and distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct PointerState<T> {
    width: T,
    terms: Vec<Term<T>>,
    normalized: bool,
}

impl<T: Scalar> PointerState<T> {
    /// Normalized Gaussian of width `width` centred at `center`.
    pub fn gaussian(center: T, width: T) -> Result<Self> {
        check_width(width)?;
        Ok(Self {
            width,
            terms: vec![Term {
                shift: center,
                coeff: Complex::new(T::one(), T::zero()),
            }],
            normalized: true,
        })
    }

    /// Raw superposition, not normalized. Terms with shifts within the merge
    /// tolerance are combined and zero coefficients dropped.
    pub fn from_terms<I>(width: T, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (T, Complex<T>)>,
    {
        check_width(width)?;
        let mut terms: Vec<Term<T>> = terms
            .into_iter()
            .map(|(shift, coeff)| Term { shift, coeff })
            .collect();
        if terms
            .iter()
            .any(|t| !t.shift.is_finite() || !t.coeff.re.is_finite() || !t.coeff.im.is_finite())
        {
            return Err(Error::InvalidData("non-finite pointer term".into()));
        }
        terms.sort_by(|a, b| a.shift.partial_cmp(&b.shift).expect("finite shifts"));
        let mut merged: Vec<Term<T>> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if (t.shift - last.shift).abs() <= T::merge_tolerance() => {
                    last.coeff = last.coeff + t.coeff;
                }
                _ => merged.push(t),
            }
        }
        let zero = Complex::new(T::zero(), T::zero());
        merged.retain(|t| t.coeff != zero);
        if merged.is_empty() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            width,
            terms: merged,
            normalized: false,
        })
    }

    /// Normalized linear combination `Σ_i w_i Φ_i` of equal-width states.
    pub fn superpose(parts: &[(Complex<T>, &PointerState<T>)]) -> Result<Self> {
        let width = match parts.first() {
            Some((_, s)) => s.width,
            None => return Err(Error::ZeroVector),
        };
        if parts.iter().any(|(_, s)| s.width != width) {
            return Err(Error::WidthMismatch);
        }
        let raw = Self::from_terms(
            width,
            parts
                .iter()
                .flat_map(|(w, s)| s.terms.iter().map(move |t| (t.shift, *w * t.coeff))),
        )?;
        raw.normalize()
    }

    pub fn width(&self) -> T {
        self.width
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Smallest and largest shift.
    pub fn support(&self) -> (T, T) {
        (
            self.terms.first().expect("non-empty").shift,
            self.terms.last().expect("non-empty").shift,
        )
    }

    /// `⟨Φ|Φ⟩` from the closed-form Gram matrix.
    ///
    /// Evaluated either directly or as `|Σc|² - Σ conj(c_j) c_k (1 - K_jk)`,
    /// whichever has the smaller roundoff bound; the second form keeps closely
    /// spaced, nearly cancelling superpositions accurate.
    pub fn norm_sqr(&self) -> T {
        let w = self.width;
        let mut direct_bound = T::zero();
        let mut defect_bound = T::zero();
        for a in &self.terms {
            for b in &self.terms {
                let m = a.coeff.norm() * b.coeff.norm();
                direct_bound = direct_bound + m * kernel(a.shift - b.shift, w);
                defect_bound = defect_bound + m * kernel_defect(a.shift - b.shift, w);
            }
        }
        let sum = coeff_sum(self).norm_sqr();
        let value = if sum + defect_bound < direct_bound {
            sum - gram_form(self, self, |d| kernel_defect(d, w)).re
        } else {
            gram_form(self, self, |d| kernel(d, w)).re
        };
        value.max(T::zero())
    }

    /// Rescales to unit norm. Fails when the norm is zero up to roundoff
    /// relative to the coefficient magnitudes.
    pub fn normalize(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        let scale = self
            .terms
            .iter()
            .fold(T::zero(), |acc, t| acc + t.coeff.norm_sqr());
        if !(n2 > T::zero_norm_floor() * scale) {
            return Err(Error::ZeroVector);
        }
        let norm = n2.sqrt();
        Ok(Self {
            width: self.width,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    shift: t.shift,
                    coeff: t.coeff / norm,
                })
                .collect(),
            normalized: true,
        })
    }

    /// The state translated by `by` in position.
    pub fn shifted(&self, by: T) -> Self {
        Self {
            width: self.width,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    shift: t.shift + by,
                    coeff: t.coeff,
                })
                .collect(),
            normalized: self.normalized,
        }
    }

    /// Wavefunction value `Φ(q)`.
    pub fn eval(&self, q: T) -> Complex<T> {
        let two = T::lit(2.0);
        let four = T::lit(4.0);
        let prefactor = (two * T::PI() * self.width * self.width).powf(-T::lit(0.25));
        self.terms
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |acc, t| {
                let d = q - t.shift;
                acc + t.coeff * (prefactor * (-(d * d) / (four * self.width * self.width)).exp())
            })
    }
}

fn check_width<T: Scalar>(width: T) -> Result<()> {
    if width > T::zero() && width.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidWidth(width.to_f64().unwrap_or(f64::NAN)))
    }
}

fn same_width<T: Scalar>(a: &PointerState<T>, b: &PointerState<T>) -> Result<()> {
    if a.width == b.width {
        Ok(())
    } else {
        Err(Error::WidthMismatch)
    }
}

/// `exp(-d²/8Δ²)`
fn kernel<T: Scalar>(d: T, width: T) -> T {
    (-(d * d) / (T::lit(8.0) * width * width)).exp()
}

/// `1 - exp(-d²/8Δ²)`, accurate when `d` is small.
fn kernel_defect<T: Scalar>(d: T, width: T) -> T {
    -(-(d * d) / (T::lit(8.0) * width * width)).exp_m1()
}

/// `Σ_jk conj(a_j) b_k f(μ_j - ν_k)`
fn gram_form<T: Scalar>(
    a: &PointerState<T>,
    b: &PointerState<T>,
    f: impl Fn(T) -> T,
) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for ta in &a.terms {
        for tb in &b.terms {
            acc = acc + ta.coeff.conj() * tb.coeff * f(ta.shift - tb.shift);
        }
    }
    acc
}

fn coeff_sum<T: Scalar>(s: &PointerState<T>) -> Complex<T> {
    s.terms
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |acc, t| acc + t.coeff)
}

/// `⟨a|b⟩ = Σ_jk conj(c_j) d_k exp(-(μ_j-ν_k)²/8Δ²)`.
pub fn overlap<T: Scalar>(a: &PointerState<T>, b: &PointerState<T>) -> Result<Complex<T>> {
    same_width(a, b)?;
    Ok(gram_form(a, b, |d| kernel(d, a.width)))
}

/// `sin²` and `cos²` of the angle between `a` and `b`, unnormalized inputs allowed.
///
/// The Gram determinant `‖a‖²‖b‖² - |⟨a|b⟩|²` is evaluated with the kernel
/// written as `1 - M`, so the leading `|Σa|²|Σb|²` parts cancel symbolically
/// and nearly parallel states keep full relative precision.
fn angle_parts<T: Scalar>(a: &PointerState<T>, b: &PointerState<T>) -> (T, T) {
    let w = a.width;
    let sa = coeff_sum(a);
    let sb = coeff_sum(b);
    let alpha = gram_form(a, a, |d| kernel_defect(d, w)).re;
    let beta = gram_form(b, b, |d| kernel_defect(d, w)).re;
    let x = gram_form(a, b, |d| kernel_defect(d, w));
    let two = T::lit(2.0);
    let det = -alpha * sb.norm_sqr() - beta * sa.norm_sqr()
        + alpha * beta
        + two * (sa * sb.conj() * x).re
        - x.norm_sqr();
    let det = det.max(T::zero());
    let cos2 = gram_form(a, b, |d| kernel(d, w)).norm_sqr();
    let total = det + cos2;
    (det / total, cos2 / total)
}

/// Bures angle `arccos|⟨a|b⟩|` between pure pointer states, in `[0, π/2]`.
///
/// Invariant under rescaling either argument, so unnormalized superpositions
/// are accepted.
pub fn bures_pure<T: Scalar>(a: &PointerState<T>, b: &PointerState<T>) -> Result<T> {
    same_width(a, b)?;
    let (sin2, cos2) = angle_parts(a, b);
    Ok(sin2.sqrt().atan2(cos2.sqrt()))
}

/// `arccos √⟨Φ|ρ|Φ⟩` for a pure state against a mixture, in `[0, π/2]`.
pub fn bures_mixed<T: Scalar>(pure: &PointerState<T>, mix: &PointerMixture<T>) -> Result<T> {
    let mut sin2 = T::zero();
    let mut cos2 = T::zero();
    for (p, component) in &mix.components {
        same_width(pure, component)?;
        let (s, c) = angle_parts(pure, component);
        sin2 = sin2 + *p * s;
        cos2 = cos2 + *p * c;
    }
    Ok(sin2.sqrt().atan2(cos2.sqrt()))
}

/// `⟨Φ|Q|Φ⟩ / ⟨Φ|Φ⟩`.
pub fn mean_position<T: Scalar>(s: &PointerState<T>) -> T {
    let two = T::lit(2.0);
    let w = s.width;
    let mut num = Complex::new(T::zero(), T::zero());
    for ta in &s.terms {
        for tb in &s.terms {
            let m = (ta.shift + tb.shift) / two;
            num = num + ta.coeff.conj() * tb.coeff * (m * kernel(ta.shift - tb.shift, w));
        }
    }
    num.re / s.norm_sqr()
}

/// Convex combination `Σ p_i |Φ_i⟩⟨Φ_i|` of normalized pointer states.
#[derive(Debug, Clone, PartialEq)]
pub struct PointerMixture<T> {
    components: Vec<(T, PointerState<T>)>,
}

impl<T: Scalar> PointerMixture<T> {
    /// Weights must lie in `(0, 1]` and sum to one; states are normalized here.
    pub fn new(components: Vec<(T, PointerState<T>)>) -> Result<Self> {
        let width = match components.first() {
            Some((_, s)) => s.width,
            None => return Err(Error::InvalidWeights("empty mixture".into())),
        };
        let mut total = T::zero();
        let mut out = Vec::with_capacity(components.len());
        for (p, s) in components {
            if !(p > T::zero() && p <= T::one()) {
                return Err(Error::InvalidWeights(format!("weight {p} outside (0, 1]")));
            }
            if s.width != width {
                return Err(Error::WidthMismatch);
            }
            total = total + p;
            let s = if s.normalized { s } else { s.normalize()? };
            out.push((p, s));
        }
        if (total - T::one()).abs() > T::state_tolerance() {
            return Err(Error::InvalidWeights(format!("weights sum to {total}")));
        }
        Ok(Self { components: out })
    }

    pub fn pure(state: PointerState<T>) -> Result<Self> {
        Self::new(vec![(T::one(), state)])
    }

    pub fn components(&self) -> &[(T, PointerState<T>)] {
        &self.components
    }

    pub fn width(&self) -> T {
        self.components[0].1.width
    }

    /// `Σ p_i ⟨Q⟩_i`.
    pub fn mean_position(&self) -> T {
        self.components
            .iter()
            .fold(T::zero(), |acc, (p, s)| acc + *p * mean_position(s))
    }
}
