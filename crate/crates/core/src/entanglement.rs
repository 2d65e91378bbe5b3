//! Bloch-tensor correlation measure of a bipartite state.
//!
//! The state is expanded as `ρ ∝ Σ_ij R_ij C_i ⊗ C_j` in an operator basis
//! `{C_0 = I, C_1..}` of generalized Gell-Mann matrices. The measure
//!
//! ```text
//! m_SM = sqrt( 1/(D−1) · Σ_ij (R_i0 R_0j − R_ij)² )
//! ```
//!
//! vanishes on product states. Each element is rescaled by its norm
//! `n_i = sqrt(tr(C_i²)/d)`, so that `R_00 = 1` and a product state
//! factorizes exactly as `R_ij = R_i0 R_0j`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spin_algebra::{ComplexMatrix, SpinKind};

/// Hermitian operator basis of a `d`-level system.
#[derive(Debug, Clone)]
pub struct OperatorBasis<T> {
    pub elements: Vec<ComplexMatrix<T>>,
    pub norms: Vec<T>,
}

impl<T: Real> OperatorBasis<T> {
    /// Single-particle dimension `d`.
    pub fn local_dim(&self) -> usize {
        self.elements[0].dim()
    }

    /// Number of elements `D = d²`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Identity followed by the `d² − 1` generalized Gell-Mann matrices:
/// symmetric, antisymmetric, then diagonal, each with `tr(C²) = 2`.
pub fn gell_mann_basis<T: Real>(d: usize) -> OperatorBasis<T> {
    let one = Complex::new(T::one(), T::zero());
    let i_unit = Complex::new(T::zero(), T::one());
    let mut elements = vec![ComplexMatrix::identity(d)];

    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d);
            m[(j, k)] = one;
            m[(k, j)] = one;
            elements.push(m);
        }
    }
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d);
            m[(j, k)] = -i_unit;
            m[(k, j)] = i_unit;
            elements.push(m);
        }
    }
    for l in 1..d {
        let lf = T::from_count(l);
        let c = (T::lit(2.0) / (lf * (lf + T::one()))).sqrt();
        let diag: Vec<T> = (0..d)
            .map(|k| match k.cmp(&l) {
                std::cmp::Ordering::Less => c,
                std::cmp::Ordering::Equal => -lf * c,
                std::cmp::Ordering::Greater => T::zero(),
            })
            .collect();
        elements.push(ComplexMatrix::from_real_diagonal(&diag));
    }

    let df = T::from_count(d);
    let norms = elements
        .iter()
        .map(|c| ((c * c).trace().re / df).sqrt())
        .collect();
    OperatorBasis { elements, norms }
}

/// Identity plus the fifteen generalized Gell-Mann matrices of dimension 4.
pub fn su4_basis<T: Real>() -> OperatorBasis<T> {
    gell_mann_basis(4)
}

/// Basis matching the particle kind (Pauli for spin-1/2, su(4) for spin-3/2).
pub fn basis_for<T: Real>(kind: SpinKind) -> OperatorBasis<T> {
    gell_mann_basis(kind.dim())
}

/// Normalized Bloch tensor `R_ij` of a bipartite state.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochDecomposition<T> {
    /// Row-major `D × D`.
    r: Vec<T>,
    size: usize,
}

impl<T: Real> BlochDecomposition<T> {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.r[i * self.size + j]
    }

    /// Basis size `D`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Rebuilds the operator `Σ_ij R_ij C_i⊗C_j / (d² n_i n_j)`.
    pub fn reassemble(&self, basis: &OperatorBasis<T>) -> ComplexMatrix<T> {
        let d = basis.local_dim();
        let mut out = ComplexMatrix::zeros(d * d);
        let d2 = T::from_count(d * d);
        for i in 0..self.size {
            for j in 0..self.size {
                let coeff = self.get(i, j) / (d2 * basis.norms[i] * basis.norms[j]);
                if coeff == T::zero() {
                    continue;
                }
                let (a, b) = (&basis.elements[i], &basis.elements[j]);
                for ar in 0..d {
                    for ac in 0..d {
                        let x = a[(ar, ac)];
                        if x.norm_sqr() == T::zero() {
                            continue;
                        }
                        for br in 0..d {
                            for bc in 0..d {
                                let idx = (ar * d + br, ac * d + bc);
                                out[idx] = out[idx] + (x * b[(br, bc)]).scale(coeff);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Sparse nonzero entries of a basis element.
fn nonzeros<T: Real>(m: &ComplexMatrix<T>) -> Vec<(usize, usize, Complex<T>)> {
    let d = m.dim();
    let mut out = Vec::new();
    for r in 0..d {
        for c in 0..d {
            let z = m[(r, c)];
            if z.norm_sqr() > T::zero() {
                out.push((r, c, z));
            }
        }
    }
    out
}

/// `R_ij = tr(ρ · C_i⊗C_j) / (n_i n_j)`.
pub fn bloch_decompose<T: Real>(
    rho: &ComplexMatrix<T>,
    basis: &OperatorBasis<T>,
) -> Result<BlochDecomposition<T>> {
    let d = basis.local_dim();
    if rho.dim() != d * d {
        return Err(Error::DimensionMismatch {
            expected: d * d,
            actual: rho.dim(),
        });
    }
    let size = basis.len();
    let sparse: Vec<_> = basis.elements.iter().map(nonzeros).collect();
    let mut r = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            // tr(ρ (A⊗B)) = Σ ρ[(a,b),(a',b')] A(a',a) B(b',b)
            let mut acc = Complex::new(T::zero(), T::zero());
            for &(ar, ac, x) in &sparse[i] {
                for &(br, bc, y) in &sparse[j] {
                    acc = acc + rho[(ac * d + bc, ar * d + br)] * x * y;
                }
            }
            r.push(acc.re / (basis.norms[i] * basis.norms[j]));
        }
    }
    Ok(BlochDecomposition { r, size })
}

/// `m_SM = sqrt(Σ_ij (R_i0 R_0j − R_ij)² / (D − 1))`.
pub fn m_sm<T: Real>(r: &BlochDecomposition<T>) -> T {
    let size = r.size();
    let mut total = T::zero();
    for i in 0..size {
        for j in 0..size {
            let dev = r.get(i, 0) * r.get(0, j) - r.get(i, j);
            total = total + dev * dev;
        }
    }
    (total / T::from_count(size - 1)).sqrt()
}

/// `m_SM` of the Gibbs state of the pair at `(h, J, β)`.
pub fn gibbs_m_sm<T: Real>(kind: SpinKind, h: T, j: T, beta: T) -> Result<T> {
    let rho = crate::gibbs::gibbs_density_matrix(kind, h, j, beta)?;
    let basis = basis_for::<T>(kind);
    Ok(m_sm(&bloch_decompose(&rho, &basis)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin_algebra::kron;

    #[test]
    fn su4_basis_structure() {
        let b = su4_basis::<f64>();
        assert_eq!(b.len(), 16);
        assert_eq!(b.elements[0], ComplexMatrix::identity(4));
        assert_eq!(b.norms[0], 1.0);
        for i in 1..16 {
            let c = &b.elements[i];
            assert!(c.is_hermitian());
            assert!(c.trace().norm() < 1e-15);
            assert!(((c * c).trace().re - 2.0).abs() < 1e-14);
            assert!((b.norms[i] - 0.5f64.sqrt()).abs() < 1e-15);
        }
        for i in 0..16 {
            for j in (i + 1)..16 {
                let t = (&b.elements[i] * &b.elements[j]).trace();
                assert!(t.norm() < 1e-14, "({i},{j})");
            }
        }
    }

    #[test]
    fn diagonal_elements() {
        let b = su4_basis::<f64>();
        let diag: Vec<Vec<f64>> = b.elements[13..].iter().map(|m| m.diagonal_real()).collect();
        let s3 = 1.0 / 3f64.sqrt();
        let s6 = 1.0 / 6f64.sqrt();
        let expected = [
            vec![1.0, -1.0, 0.0, 0.0],
            vec![s3, s3, -2.0 * s3, 0.0],
            vec![s6, s6, s6, -3.0 * s6],
        ];
        for (a, e) in diag.iter().zip(expected.iter()) {
            for (x, y) in a.iter().zip(e) {
                assert!((x - y).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn maximally_mixed_state() {
        let b = su4_basis::<f64>();
        let rho = ComplexMatrix::identity(16).scale(1.0 / 16.0);
        let r = bloch_decompose(&rho, &b).unwrap();
        assert!((r.get(0, 0) - 1.0).abs() < 1e-15);
        for i in 0..16 {
            for j in 0..16 {
                if (i, j) != (0, 0) {
                    assert!(r.get(i, j).abs() < 1e-15);
                }
            }
        }
        assert_eq!(m_sm(&r), 0.0);
    }

    #[test]
    fn product_state_factorizes() {
        let b = su4_basis::<f64>();
        let mut ra = ComplexMatrix::from_real_diagonal(&[0.4, 0.3, 0.2, 0.1]);
        ra[(0, 2)] = Complex::new(0.05, 0.02);
        ra[(2, 0)] = Complex::new(0.05, -0.02);
        let rb = ComplexMatrix::from_real_diagonal(&[0.1, 0.6, 0.2, 0.1]);
        let r = bloch_decompose(&kron(&ra, &rb), &b).unwrap();
        for i in 0..16 {
            for j in 0..16 {
                assert!((r.get(i, j) - r.get(i, 0) * r.get(0, j)).abs() < 1e-12);
            }
        }
        assert!(m_sm(&r) < 1e-12);
    }

    #[test]
    fn reassembly_round_trip() {
        let b = su4_basis::<f64>();
        let rho = crate::gibbs::gibbs_density_matrix(SpinKind::ThreeHalves, 1.0, 0.3, 1.0).unwrap();
        let r = bloch_decompose(&rho, &b).unwrap();
        assert!((&r.reassemble(&b) - &rho).max_abs() < 1e-12);
    }

    #[test]
    fn singlet_like_ground_state_is_correlated() {
        let v = &crate::spectrum::biquartit_eigenvectors::<f64>()[7];
        let rho = ComplexMatrix::outer(v);
        let m = m_sm(&bloch_decompose(&rho, &su4_basis()).unwrap());
        assert!(m > 0.1, "{m}");
    }

    #[test]
    fn qubit_basis_is_pauli() {
        let b = gell_mann_basis::<f64>(2);
        assert_eq!(b.len(), 4);
        assert_eq!(b.elements[1][(0, 1)].re, 1.0);
        assert_eq!(b.elements[2][(1, 0)].im, 1.0);
        assert_eq!(b.elements[3].diagonal_real(), vec![1.0, -1.0]);
    }

    #[test]
    fn dimension_checked() {
        let b = su4_basis::<f64>();
        assert!(bloch_decompose(&ComplexMatrix::identity(4), &b).is_err());
    }
}
