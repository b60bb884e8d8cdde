//! Finite-dimensional system states and observables on an integer-labelled basis.

mod eigen;

use num_complex::Complex;

pub use eigen::Eigen;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Normalized amplitude vector over a sorted set of distinct integer labels.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemState<T> {
    labels: Vec<i64>,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> SystemState<T> {
    /// Builds a state from `(label, amplitude)` pairs and normalizes it.
    ///
    /// Pairs may come in any order; they are sorted by label. Repeating a
    /// label is an error rather than a merge.
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Complex<T>)>,
    {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_by_key(|&(label, _)| label);
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateLabel(w[0].0));
        }
        let (labels, amplitudes) = pairs.into_iter().unzip();
        Self::from_parts(labels, amplitudes)
    }

    /// Real-amplitude convenience constructor.
    pub fn from_real<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, T)>,
    {
        Self::new(
            pairs
                .into_iter()
                .map(|(j, a)| (j, Complex::new(a, T::zero()))),
        )
    }

    /// The basis vector `|label⟩` on the given basis.
    pub fn basis(labels: &[i64], label: i64) -> Result<Self> {
        if !labels.contains(&label) {
            return Err(Error::BasisMismatch);
        }
        Self::new(labels.iter().map(|&j| {
            let a = if j == label { T::one() } else { T::zero() };
            (j, Complex::new(a, T::zero()))
        }))
    }

    fn from_parts(labels: Vec<i64>, mut amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let norm = norm_sqr(&amplitudes).sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        for a in &mut amplitudes {
            *a = *a / norm;
        }
        Ok(Self { labels, amplitudes })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Amplitude on `label`, `None` when the label is outside the basis.
    pub fn amplitude(&self, label: i64) -> Option<Complex<T>> {
        self.labels
            .binary_search(&label)
            .ok()
            .map(|i| self.amplitudes[i])
    }

    pub fn same_basis(&self, other: &Self) -> bool {
        self.labels == other.labels
    }

    /// `⟨self|ket⟩ = Σ conj(self_j) ket_j`.
    pub fn inner(&self, ket: &Self) -> Result<Complex<T>> {
        if !self.same_basis(ket) {
            return Err(Error::BasisMismatch);
        }
        Ok(inner_raw(&self.amplitudes, &ket.amplitudes))
    }

    /// `⟨self|v⟩` against an unnormalized vector on the same basis.
    pub fn inner_vec(&self, v: &[Complex<T>]) -> Result<Complex<T>> {
        if v.len() != self.dim() {
            return Err(Error::BasisMismatch);
        }
        Ok(inner_raw(&self.amplitudes, v))
    }
}

/// Hermitian operator on an integer-labelled basis, stored densely (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct Observable<T> {
    labels: Vec<i64>,
    matrix: Vec<Complex<T>>,
    diagonal: bool,
}

impl<T: Scalar> Observable<T> {
    /// General Hermitian matrix; rows and columns follow `labels` (sorted, distinct).
    pub fn from_matrix(labels: Vec<i64>, rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        check_labels(&labels)?;
        let dim = labels.len();
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::ShapeMismatch {
                rows: rows.len(),
                cols: rows.first().map_or(0, Vec::len),
                dim,
            });
        }
        let matrix: Vec<_> = rows.into_iter().flatten().collect();
        let mut deviation = T::zero();
        let mut diagonal = true;
        for i in 0..dim {
            for j in 0..dim {
                let d = (matrix[i * dim + j] - matrix[j * dim + i].conj()).norm();
                deviation = deviation.max(d);
                if i != j && matrix[i * dim + j] != Complex::new(T::zero(), T::zero()) {
                    diagonal = false;
                }
            }
        }
        if !(deviation <= T::state_tolerance()) {
            return Err(Error::NotHermitian(deviation.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self {
            labels,
            matrix,
            diagonal,
        })
    }

    /// `Σ_j values[j] |label_j⟩⟨label_j|`; off-diagonals are exactly zero.
    pub fn diagonal(labels: Vec<i64>, values: &[T]) -> Result<Self> {
        check_labels(&labels)?;
        let dim = labels.len();
        if values.len() != dim {
            return Err(Error::ShapeMismatch {
                rows: values.len(),
                cols: values.len(),
                dim,
            });
        }
        let mut matrix = vec![Complex::new(T::zero(), T::zero()); dim * dim];
        for (i, &v) in values.iter().enumerate() {
            matrix[i * dim + i] = Complex::new(v, T::zero());
        }
        Ok(Self {
            labels,
            matrix,
            diagonal: true,
        })
    }

    /// The integer spin observable `A = Σ_j j |j⟩⟨j|`.
    pub fn integer_spin(labels: Vec<i64>) -> Result<Self> {
        let values: Vec<T> = labels.iter().map(|&j| T::lit(j as f64)).collect();
        Self::diagonal(labels, &values)
    }

    /// `σ_z` on the two-level basis `{-1, +1}`.
    pub fn sigma_z() -> Self {
        Self::integer_spin(vec![-1, 1]).expect("valid basis")
    }

    /// `|label⟩⟨label|`.
    pub fn projector(labels: Vec<i64>, label: i64) -> Result<Self> {
        if !labels.contains(&label) {
            return Err(Error::BasisMismatch);
        }
        let values: Vec<T> = labels
            .iter()
            .map(|&j| if j == label { T::one() } else { T::zero() })
            .collect();
        Self::diagonal(labels, &values)
    }

    pub fn identity(labels: Vec<i64>) -> Result<Self> {
        let values = vec![T::one(); labels.len()];
        Self::diagonal(labels, &values)
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex<T> {
        self.matrix[row * self.dim() + col]
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    /// Matrix-vector product `A|ψ⟩`. Not renormalized.
    pub fn apply(&self, state: &SystemState<T>) -> Result<Vec<Complex<T>>> {
        if self.labels != state.labels {
            return Err(Error::BasisMismatch);
        }
        Ok(self.apply_raw(&state.amplitudes))
    }

    pub(crate) fn apply_raw(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let dim = self.dim();
        (0..dim)
            .map(|i| {
                self.matrix[i * dim..(i + 1) * dim]
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (&m, &x)| {
                        acc + m * x
                    })
            })
            .collect()
    }

    /// `⟨ψ|A|ψ⟩`, real for a Hermitian `A`.
    pub fn expectation(&self, state: &SystemState<T>) -> Result<T> {
        let av = self.apply(state)?;
        let value = inner_raw(&state.amplitudes, &av);
        debug_assert!(value.im.abs() <= T::state_tolerance() * (T::one() + value.re.abs()));
        Ok(value.re)
    }

    /// Eigenvalues in ascending order with orthonormal eigenvectors.
    pub fn eigen(&self) -> Eigen<T> {
        if self.diagonal {
            Eigen::of_diagonal(self)
        } else {
            Eigen::jacobi(self)
        }
    }
}

fn check_labels(labels: &[i64]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::ZeroVector);
    }
    for w in labels.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateLabel(w[0]));
        }
        if w[0] > w[1] {
            return Err(Error::BasisMismatch);
        }
    }
    Ok(())
}

pub(crate) fn inner_raw<T: Scalar>(bra: &[Complex<T>], ket: &[Complex<T>]) -> Complex<T> {
    bra.iter()
        .zip(ket)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (b, k)| {
            acc + b.conj() * k
        })
}

pub(crate) fn norm_sqr<T: Scalar>(v: &[Complex<T>]) -> T {
    v.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
}
