//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `A(p,q)` with a
//! diagonal unitary, then applies the classical real Jacobi rotation to the
//! resulting real 2×2 block. Rotations are accumulated into the eigenvector
//! matrix. Sweeps stop once the off-diagonal Frobenius norm drops below
//! `1e-14` of the full norm.

use num_complex::Complex;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    /// `vectors[k]` is the eigenvector of `values[k]`.
    pub vectors: Vec<Vec<Complex<T>>>,
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a Hermitian matrix. Non-Hermitian input is rejected.
pub fn diagonalize_hermitian<T: Real>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    if !m.is_hermitian() {
        return Err(Error::NonHermitian {
            asymmetry: m.hermitian_defect().to_f64().unwrap_or(f64::NAN),
        });
    }
    let n = m.dim();
    let zero = Complex::new(T::zero(), T::zero());
    let mut a = m.clone();
    let mut v = ComplexMatrix::<T>::identity(n);

    let threshold = T::tolerance(1e-14) * m.frobenius_norm();
    let mut converged = off_diagonal_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let g = apq.norm();
                if g == T::zero() {
                    continue;
                }
                // phase e^{-iφ} with A(p,q) = g·e^{iφ}
                let phase = apq.conj().unscale(g);
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (g + g);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                // A ← A·U, U = [[c, s], [−s·phase, c·phase]] on columns (p, q)
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)] * phase;
                    a[(k, p)] = akp.scale(c) - akq.scale(s);
                    a[(k, q)] = akp.scale(s) + akq.scale(c);

                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)] * phase;
                    v[(k, p)] = vkp.scale(c) - vkq.scale(s);
                    v[(k, q)] = vkp.scale(s) + vkq.scale(c);
                }
                // A ← U†·A on rows (p, q)
                let phase_c = phase.conj();
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)] * phase_c;
                    a[(p, k)] = apk.scale(c) - aqk.scale(s);
                    a[(q, k)] = apk.scale(s) + aqk.scale(c);
                }
                a[(p, q)] = zero;
                a[(q, p)] = zero;
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
            }
        }
        converged = off_diagonal_norm(&a) <= threshold;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[(row, col)]).collect())
        .collect();
    Ok(HermitianEigen { values, vectors })
}
