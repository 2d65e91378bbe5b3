//! Gibbs states at any finite inverse temperature, including β < 0, and
//! the thermodynamic potentials derived from them.
//!
//! Derivatives with respect to β are evaluated as moments of the Gibbs
//! distribution: `U = ⟨E⟩`, `S = −Σ p ln p`, `C = β²(⟨E²⟩ − ⟨E⟩²)`.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectrum::Spectrum;
use crate::spin_algebra::{ComplexMatrix, SpinKind};

/// Canonical equilibrium state over a discrete set of levels.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalState<T> {
    pub beta: T,
    pub energies: Vec<T>,
    pub populations: Vec<T>,
    pub log_z: T,
}

impl<T: Real> ThermalState<T> {
    /// Populations `p_i = exp(−β e_i − ln Z)`, evaluated with the largest
    /// exponent shifted to zero so that |β| in the hundreds stays finite.
    pub fn new(energies: &[T], beta: T) -> Result<Self> {
        if energies.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        if !beta.is_finite() {
            return Err(Error::NonFinite("beta"));
        }
        if energies.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite("energies"));
        }
        let exponents: Vec<T> = energies.iter().map(|&e| -beta * e).collect();
        let shift = exponents.iter().copied().fold(T::neg_infinity(), T::max);
        let weights: Vec<T> = exponents.iter().map(|&x| (x - shift).exp()).collect();
        let total: T = weights.iter().copied().sum();
        let populations = weights.iter().map(|&w| w / total).collect();
        Ok(Self {
            beta,
            energies: energies.to_vec(),
            populations,
            log_z: shift + total.ln(),
        })
    }

    /// Gibbs state of the coupled pair at `(h, J, β)`.
    pub fn of_pair(kind: SpinKind, h: T, j: T, beta: T) -> Result<Self> {
        if !h.is_finite() || !j.is_finite() {
            return Err(Error::NonFinite("field or coupling"));
        }
        Self::new(&crate::spectrum::levels(kind, h, j), beta)
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    /// `F = −ln Z / β`; undefined at β = 0.
    pub fn free_energy(&self) -> Result<T> {
        if self.beta == T::zero() {
            return Err(Error::InfiniteTemperature);
        }
        Ok(-self.log_z / self.beta)
    }

    pub fn internal_energy(&self) -> T {
        self.energies
            .iter()
            .zip(&self.populations)
            .map(|(&e, &p)| e * p)
            .sum()
    }

    /// Shannon entropy of the populations, with `0 ln 0 = 0`.
    pub fn entropy(&self) -> T {
        -self
            .populations
            .iter()
            .filter(|&&p| p > T::zero())
            .map(|&p| p * p.ln())
            .sum::<T>()
    }

    /// Energy variance (centered, to avoid cancellation).
    pub fn energy_variance(&self) -> T {
        let u = self.internal_energy();
        self.energies
            .iter()
            .zip(&self.populations)
            .map(|(&e, &p)| p * (e - u) * (e - u))
            .sum()
    }

    pub fn heat_capacity(&self) -> T {
        self.beta * self.beta * self.energy_variance()
    }
}

/// `ρ = Σ_i p_i P_i` built from the constant eigenprojectors; exactly
/// `I / d` at β = 0.
pub fn gibbs_density_matrix<T: Real>(
    kind: SpinKind,
    h: T,
    j: T,
    beta: T,
) -> Result<ComplexMatrix<T>> {
    let state = ThermalState::of_pair(kind, h, j, beta)?;
    if beta == T::zero() {
        let d = kind.pair_dim();
        return Ok(ComplexMatrix::identity(d).scale(T::one() / T::from_count(d)));
    }
    Spectrum::new(kind, h, j).weighted_projector_sum(&state.populations)
}

/// Inverse temperature from a temperature, rejecting T = 0.
pub fn beta_from_temperature<T: Real>(t: T) -> Result<T> {
    if !t.is_finite() {
        return Err(Error::NonFinite("temperature"));
    }
    if t == T::zero() {
        return Err(Error::ZeroTemperature);
    }
    Ok(T::one() / t)
}
