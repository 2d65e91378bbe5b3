//! Reduced single-quartit state of the biquartit Gibbs state, with local
//! entropy, local energy and two notions of local inverse temperature.
//!
//! For the exchange Hamiltonian the reduced matrix is diagonal in the
//! `S3` basis, so the four populations carry all the local information.
//! [`LocalState::from_populations`] uses closed-form linear combinations
//! of the sixteen level populations; [`partial_trace`] is the matrix
//! ground truth they are checked against.

use crate::error::{Error, Result};
use crate::gibbs::ThermalState;
use crate::scalar::Real;
use crate::spin_algebra::{ComplexMatrix, SpinKind};

/// Which tensor factor a partial trace keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

/// Populations `π_1..π_4` of the reduced quartit in the `S3` basis
/// (m = 3/2, 1/2, −1/2, −3/2) with local energies `h/2 (3, 1, −1, −3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalState<T> {
    pub populations: [T; 4],
    pub local_energies: [T; 4],
}

/// Coefficients of `20 π_k` as `(constant, [c_1..c_16])`; levels 8 and 10
/// enter only through `Σ p = 1`.
const PI_COEFFICIENTS: [(f64, [f64; 16]); 4] = [
    (
        5.0,
        [
            -5.0, 1.0, -5.0, -5.0, -5.0, 5.0, 5.0, 0.0, 4.0, 0.0, -4.0, 15.0, -5.0, -5.0, -1.0, 5.0,
        ],
    ),
    (
        5.0,
        [
            1.0, 3.0, -5.0, 5.0, -5.0, -5.0, 5.0, 0.0, -4.0, 0.0, 4.0, -5.0, -5.0, -1.0, 7.0, 5.0,
        ],
    ),
    (
        5.0,
        [
            3.0, 1.0, 5.0, -5.0, -5.0, 5.0, -5.0, 0.0, -4.0, 0.0, 4.0, -5.0, 5.0, 7.0, -1.0, -5.0,
        ],
    ),
    (
        5.0,
        [
            1.0, -5.0, 5.0, 5.0, 15.0, -5.0, -5.0, 0.0, 4.0, 0.0, -4.0, -5.0, 5.0, -1.0, -5.0, -5.0,
        ],
    ),
];

impl<T: Real> LocalState<T> {
    /// Local energies `h/2 (3, 1, −1, −3)`.
    pub fn energies_for_field(h: T) -> [T; 4] {
        let half = h * T::lit(0.5);
        [half * T::lit(3.0), half, -half, -half * T::lit(3.0)]
    }

    /// Closed-form reduction of the sixteen biquartit level populations
    /// (branch order, normalized). Rounding negatives are clamped to zero
    /// and the result renormalized.
    pub fn from_populations(p: &[T], h: T) -> Result<Self> {
        if p.len() != 16 {
            return Err(Error::DimensionMismatch {
                expected: 16,
                actual: p.len(),
            });
        }
        let twentieth = T::lit(0.05);
        let mut pi = [T::zero(); 4];
        for (slot, (constant, coeffs)) in pi.iter_mut().zip(PI_COEFFICIENTS.iter()) {
            let linear: T = coeffs.iter().zip(p).map(|(&c, &x)| T::lit(c) * x).sum();
            *slot = (T::lit(*constant) + linear) * twentieth;
        }
        Ok(Self::from_raw(pi, h))
    }

    /// Reduced state of the biquartit Gibbs state at `(h, J, β)`.
    pub fn of_gibbs(h: T, j: T, beta: T) -> Result<Self> {
        let state = ThermalState::of_pair(SpinKind::ThreeHalves, h, j, beta)?;
        Self::from_populations(&state.populations, h)
    }

    /// Local state from raw populations in `S3` order.
    pub fn from_raw(mut pi: [T; 4], h: T) -> Self {
        for x in pi.iter_mut() {
            if *x < T::zero() {
                *x = T::zero();
            }
        }
        let total: T = pi.iter().copied().sum();
        for x in pi.iter_mut() {
            *x = *x / total;
        }
        Self {
            populations: pi,
            local_energies: Self::energies_for_field(h),
        }
    }

    /// `s = −Σ π ln π` with `0 ln 0 = 0`.
    pub fn entropy(&self) -> T {
        -self
            .populations
            .iter()
            .filter(|&&p| p > T::zero())
            .map(|&p| p * p.ln())
            .sum::<T>()
    }

    /// `u = Σ ε π`.
    pub fn internal_energy(&self) -> T {
        self.local_energies
            .iter()
            .zip(&self.populations)
            .map(|(&e, &p)| e * p)
            .sum()
    }

    /// Level-ratio ("spectroscopic") inverse temperature: a weighted mean of
    /// `−Δ ln π / Δε` over neighbouring levels in ascending energy, with
    /// weights `(π_i + π_{i−1})/2` normalized by `1 − (π_1 + π_M)/2`.
    pub fn spectroscopic_beta(&self) -> Result<T> {
        if self.local_energies[0] == self.local_energies[1] {
            return Err(Error::ZeroGap);
        }
        if self.populations.iter().any(|&p| p <= T::zero()) {
            return Err(Error::ZeroPopulation);
        }
        let mut order = [0usize, 1, 2, 3];
        order.sort_by(|&a, &b| {
            self.local_energies[a]
                .partial_cmp(&self.local_energies[b])
                .unwrap()
        });
        let pi: Vec<T> = order.iter().map(|&k| self.populations[k]).collect();
        let eps: Vec<T> = order.iter().map(|&k| self.local_energies[k]).collect();
        let half = T::lit(0.5);
        let sum: T = (1..4)
            .map(|i| {
                (pi[i] + pi[i - 1]) * half * (pi[i].ln() - pi[i - 1].ln()) / (eps[i] - eps[i - 1])
            })
            .sum();
        let norm = T::one() - (pi[0] + pi[3]) * half;
        Ok(-sum / norm)
    }
}

/// Partial trace of a bipartite operator on `dim_a ⊗ dim_b`, keeping `keep`.
pub fn partial_trace<T: Real>(
    rho: &ComplexMatrix<T>,
    dim_a: usize,
    dim_b: usize,
    keep: Factor,
) -> Result<ComplexMatrix<T>> {
    if rho.dim() != dim_a * dim_b {
        return Err(Error::DimensionMismatch {
            expected: dim_a * dim_b,
            actual: rho.dim(),
        });
    }
    let out = match keep {
        Factor::First => ComplexMatrix::from_fn(dim_a, |i, j| {
            (0..dim_b)
                .map(|k| rho[(i * dim_b + k, j * dim_b + k)])
                .sum()
        }),
        Factor::Second => ComplexMatrix::from_fn(dim_b, |i, j| {
            (0..dim_a)
                .map(|k| rho[(k * dim_b + i, k * dim_b + j)])
                .sum()
        }),
    };
    Ok(out)
}

/// Reduced matrix of the first quartit of a 16×16 biquartit operator.
pub fn partial_trace_oracle<T: Real>(rho: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    partial_trace(rho, 4, 4, Factor::First)
}

/// Default finite-difference step `1e-5 · max(1, |β|)`.
pub fn default_step<T: Real>(beta: T) -> T {
    T::lit(1e-5) * beta.abs().max(T::one())
}

/// Derivative inverse temperature `∂s/∂u = (∂s/∂β)/(∂u/∂β)` by central
/// differences of the reduced Gibbs state in β.
pub fn local_beta<T: Real>(h: T, j: T, beta: T, step: Option<T>) -> Result<T> {
    let step = step.unwrap_or_else(|| default_step(beta));
    let plus = LocalState::of_gibbs(h, j, beta + step)?;
    let minus = LocalState::of_gibbs(h, j, beta - step)?;
    let two_step = step + step;
    let ds = (plus.entropy() - minus.entropy()) / two_step;
    let du = (plus.internal_energy() - minus.internal_energy()) / two_step;
    if du.abs() < T::lit(1e-12) {
        return Err(Error::SingularDerivative(du.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(ds / du)
}
