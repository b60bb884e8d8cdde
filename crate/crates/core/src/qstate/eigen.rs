use num_complex::Complex;

use super::Observable;
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 64;

/// Spectral decomposition of an [`Observable`]: ascending eigenvalues and
/// orthonormal eigenvectors expressed on the observable's basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<Complex<T>>>,
}

impl<T: Scalar> Eigen<T> {
    pub(super) fn of_diagonal(a: &Observable<T>) -> Self {
        let dim = a.dim();
        let pairs = (0..dim).map(|i| {
            let mut v = vec![Complex::new(T::zero(), T::zero()); dim];
            v[i] = Complex::new(T::one(), T::zero());
            (a.entry(i, i).re, v)
        });
        Self::sorted(pairs.collect())
    }

    /// Cyclic complex Jacobi rotations.
    pub(super) fn jacobi(a: &Observable<T>) -> Self {
        let n = a.dim();
        let zero = Complex::new(T::zero(), T::zero());
        let mut m: Vec<Complex<T>> = (0..n * n).map(|k| a.entry(k / n, k % n)).collect();
        let mut v = vec![zero; n * n];
        for i in 0..n {
            v[i * n + i] = Complex::new(T::one(), T::zero());
        }

        let scale = m.iter().fold(T::zero(), |acc, x| acc + x.norm_sqr()).sqrt();
        let threshold = T::epsilon() * T::epsilon() * scale * scale;

        for _ in 0..MAX_SWEEPS {
            let off: T = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .fold(T::zero(), |acc, (i, j)| acc + m[i * n + j].norm_sqr());
            if off <= threshold {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = m[p * n + q];
                    let r = apq.norm();
                    if r == T::zero() {
                        continue;
                    }
                    // Phase-rotate so the (p, q) element is real, then apply
                    // the real symmetric rotation that annihilates it.
                    let phase = apq / r;
                    let two = T::one() + T::one();
                    let tau = (m[q * n + q].re - m[p * n + p].re) / (two * r);
                    let t = tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt());
                    let t = if tau == T::zero() { T::one() } else { t };
                    let c = T::one() / (T::one() + t * t).sqrt();
                    let s = t * c;

                    // J = D R with D = diag(1, conj(phase)) on (p, q).
                    let jpp = Complex::new(c, T::zero());
                    let jpq = Complex::new(s, T::zero());
                    let jqp = phase.conj() * (-s);
                    let jqq = phase.conj() * c;

                    for k in 0..n {
                        let mkp = m[k * n + p];
                        let mkq = m[k * n + q];
                        m[k * n + p] = mkp * jpp + mkq * jqp;
                        m[k * n + q] = mkp * jpq + mkq * jqq;
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp * jpp + vkq * jqp;
                        v[k * n + q] = vkp * jpq + vkq * jqq;
                    }
                    for k in 0..n {
                        let mpk = m[p * n + k];
                        let mqk = m[q * n + k];
                        m[p * n + k] = jpp.conj() * mpk + jqp.conj() * mqk;
                        m[q * n + k] = jpq.conj() * mpk + jqq.conj() * mqk;
                    }
                    m[p * n + q] = zero;
                    m[q * n + p] = zero;
                }
            }
        }

        let pairs = (0..n)
            .map(|k| (m[k * n + k].re, (0..n).map(|i| v[i * n + k]).collect()))
            .collect();
        Self::sorted(pairs)
    }

    fn sorted(mut pairs: Vec<(T, Vec<Complex<T>>)>) -> Self {
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite eigenvalues"));
        let (values, vectors) = pairs.into_iter().unzip();
        Self { values, vectors }
    }

    /// Indices grouped by eigenvalue; values within `tol` share a group.
    pub fn degenerate_groups(&self, tol: T) -> Vec<(T, Vec<usize>)> {
        let mut groups: Vec<(T, Vec<usize>)> = Vec::new();
        for (k, &value) in self.values.iter().enumerate() {
            match groups.last_mut() {
                Some((head, members)) if (value - *head).abs() <= tol => members.push(k),
                _ => groups.push((value, vec![k])),
            }
        }
        groups
    }
}
