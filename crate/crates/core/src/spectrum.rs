//! Closed-form spectrum of the exchange-coupled pair.
//!
//! Levels keep a fixed 1-based index (the analytic branch), never the
//! ascending-energy rank. Eigenvectors do not depend on `(h, J)`, which is
//! what lets the adiabatic strokes of the Otto cycle carry occupations from
//! one field to the other by index.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spin_algebra::{ComplexMatrix, SpinKind};

/// Biquartit energies `e_1 … e_16` in branch order.
pub fn biquartit_levels<T: Real>(h: T, j: T) -> [T; 16] {
    let l = T::lit;
    [
        -h - l(11.0) * j,
        h - l(11.0) * j,
        -l(2.0) * h - l(3.0) * j,
        -h - l(3.0) * j,
        -l(3.0) * h + l(9.0) * j,
        h - l(3.0) * j,
        l(2.0) * h - l(3.0) * j,
        -l(15.0) * j,
        -l(11.0) * j,
        -l(3.0) * j,
        l(9.0) * j,
        l(3.0) * h + l(9.0) * j,
        -l(2.0) * h + l(9.0) * j,
        -h + l(9.0) * j,
        h + l(9.0) * j,
        l(2.0) * h + l(9.0) * j,
    ]
}

/// Biqubit energies `(−3J, J, −h+J, h+J)`.
pub fn biqubit_levels<T: Real>(h: T, j: T) -> [T; 4] {
    let three = T::lit(3.0);
    [-three * j, j, -h + j, h + j]
}

/// Energies of `kind` in branch order.
pub fn levels<T: Real>(kind: SpinKind, h: T, j: T) -> Vec<T> {
    match kind {
        SpinKind::Half => biqubit_levels(h, j).to_vec(),
        SpinKind::ThreeHalves => biquartit_levels(h, j).to_vec(),
    }
}

/// Sparse description of a constant eigenvector: `(position, coefficient)`
/// pairs before the overall normalization.
fn sparse<T: Real>(entries: &[(usize, f64)], prefactor: f64, dim: usize) -> Vec<Complex<T>> {
    let mut v = vec![Complex::new(T::zero(), T::zero()); dim];
    for &(pos, c) in entries {
        v[pos] = Complex::new(T::lit(prefactor * c), T::zero());
    }
    v
}

/// The sixteen constant eigenvectors in branch order.
///
/// Basis index `4a + b` is |m_a⟩⊗|m_b⟩ with `m = 3/2, 1/2, −1/2, −3/2`.
pub fn biquartit_eigenvectors<T: Real>() -> Vec<Vec<Complex<T>>> {
    let r2 = 0.5f64.sqrt();
    let r3 = 3f64.sqrt();
    let r5 = 0.2f64.sqrt();
    // (1, −2/√3, 1) has norm √(10/3)
    let r310 = 0.3f64.sqrt();
    let r20 = 1.0 / 20f64.sqrt();
    let specs: [(&[(usize, f64)], f64); 16] = [
        (&[(7, 1.0), (10, -2.0 / r3), (13, 1.0)], r310),
        (&[(2, 1.0), (5, -2.0 / r3), (8, 1.0)], r310),
        (&[(11, -1.0), (14, 1.0)], r2),
        (&[(7, -1.0), (13, 1.0)], r2),
        (&[(15, 1.0)], 1.0),
        (&[(2, -1.0), (8, 1.0)], r2),
        (&[(1, -1.0), (4, 1.0)], r2),
        (&[(3, -1.0), (6, 1.0), (9, -1.0), (12, 1.0)], 0.5),
        (
            &[(3, 1.0), (6, -1.0 / 3.0), (9, -1.0 / 3.0), (12, 1.0)],
            3.0 * r20,
        ),
        (&[(3, -1.0), (6, -1.0), (9, 1.0), (12, 1.0)], 0.5),
        (&[(3, 1.0), (6, 3.0), (9, 3.0), (12, 1.0)], r20),
        (&[(0, 1.0)], 1.0),
        (&[(11, 1.0), (14, 1.0)], r2),
        (&[(7, 1.0), (10, r3), (13, 1.0)], r5),
        (&[(2, 1.0), (5, r3), (8, 1.0)], r5),
        (&[(1, 1.0), (4, 1.0)], r2),
    ];
    specs
        .iter()
        .map(|(entries, pre)| sparse(entries, *pre, 16))
        .collect()
}

/// The four constant biqubit eigenvectors, matching [`biqubit_levels`]:
/// singlet, triplet m = 0, |↓↓⟩, |↑↑⟩.
pub fn biqubit_eigenvectors<T: Real>() -> Vec<Vec<Complex<T>>> {
    let r2 = 0.5f64.sqrt();
    vec![
        sparse(&[(1, 1.0), (2, -1.0)], r2, 4),
        sparse(&[(1, 1.0), (2, 1.0)], r2, 4),
        sparse(&[(3, 1.0)], 1.0, 4),
        sparse(&[(0, 1.0)], 1.0, 4),
    ]
}

pub fn eigenvectors<T: Real>(kind: SpinKind) -> Vec<Vec<Complex<T>>> {
    match kind {
        SpinKind::Half => biqubit_eigenvectors(),
        SpinKind::ThreeHalves => biquartit_eigenvectors(),
    }
}

/// Projector `P_i = |e_i⟩⟨e_i|` for the 1-based branch index.
pub fn projector<T: Real>(kind: SpinKind, index: usize) -> Result<ComplexMatrix<T>> {
    let count = kind.pair_dim();
    if index == 0 || index > count {
        return Err(Error::IndexOutOfRange { index, count });
    }
    Ok(ComplexMatrix::outer(&eigenvectors::<T>(kind)[index - 1]))
}

/// One level of a [`Spectrum`].
#[derive(Debug, Clone)]
pub struct Level<T> {
    /// 1-based branch index.
    pub index: usize,
    pub energy: T,
    pub eigenvector: Vec<Complex<T>>,
}

/// Energies and eigenvectors of the pair at fixed `(h, J)`, in branch order.
#[derive(Debug, Clone)]
pub struct Spectrum<T> {
    pub kind: SpinKind,
    pub levels: Vec<Level<T>>,
}

impl<T: Real> Spectrum<T> {
    pub fn new(kind: SpinKind, h: T, j: T) -> Self {
        let levels = levels(kind, h, j)
            .into_iter()
            .zip(eigenvectors::<T>(kind))
            .enumerate()
            .map(|(i, (energy, eigenvector))| Level {
                index: i + 1,
                energy,
                eigenvector,
            })
            .collect();
        Self { kind, levels }
    }

    pub fn energies(&self) -> Vec<T> {
        self.levels.iter().map(|l| l.energy).collect()
    }

    /// `Σ_i w_i P_i` for per-level weights in branch order.
    pub fn weighted_projector_sum(&self, weights: &[T]) -> Result<ComplexMatrix<T>> {
        if weights.len() != self.levels.len() {
            return Err(Error::DimensionMismatch {
                expected: self.levels.len(),
                actual: weights.len(),
            });
        }
        let dim = self.kind.pair_dim();
        let mut out = ComplexMatrix::zeros(dim);
        for (level, &w) in self.levels.iter().zip(weights) {
            let v = &level.eigenvector;
            for a in 0..dim {
                if v[a].norm_sqr() == T::zero() {
                    continue;
                }
                for b in 0..dim {
                    out[(a, b)] = out[(a, b)] + (v[a] * v[b].conj()).scale(w);
                }
            }
        }
        Ok(out)
    }
}
