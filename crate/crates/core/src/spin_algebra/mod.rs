//! Spin operators, the two-particle exchange Hamiltonian, and a brute-force
//! Hermitian eigensolver used to cross-check the analytic spectrum.
//!
//! Two-particle operators use the [`kron`] convention: the first factor acts
//! on the left particle, with row-major blocks.

mod jacobi;
mod matrix;

pub use jacobi::{diagonalize_hermitian, HermitianEigen};
pub use matrix::{kron, ComplexMatrix};

use num_complex::Complex;

use crate::scalar::Real;

/// Spin of each particle of the working pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinKind {
    /// Spin-1/2: qubit, pair = biqubit.
    Half,
    /// Spin-3/2: quartit, pair = biquartit.
    ThreeHalves,
}

impl SpinKind {
    /// Single-particle dimension 2s + 1.
    pub fn dim(self) -> usize {
        match self {
            SpinKind::Half => 2,
            SpinKind::ThreeHalves => 4,
        }
    }

    pub fn spin<T: Real>(self) -> T {
        match self {
            SpinKind::Half => T::lit(0.5),
            SpinKind::ThreeHalves => T::lit(1.5),
        }
    }

    /// Number of levels of the coupled pair.
    pub fn pair_dim(self) -> usize {
        self.dim() * self.dim()
    }
}

/// Spin component matrices `(S1, S2, S3)` in the basis of descending
/// magnetic quantum number, `S3 = diag(s, s−1, …, −s)`.
pub fn spin_matrices<T: Real>(kind: SpinKind) -> [ComplexMatrix<T>; 3] {
    let d = kind.dim();
    let s = kind.spin::<T>();
    let m = |k: usize| s - T::from_count(k);
    // ⟨m+1|S+|m⟩ = √(s(s+1) − m(m+1)); row k has m_k = s − k, raising maps k+1 → k
    let ladder = |k: usize| {
        let mk1 = m(k + 1);
        (s * (s + T::one()) - mk1 * (mk1 + T::one())).sqrt()
    };
    let half = T::lit(0.5);
    let zero = Complex::new(T::zero(), T::zero());

    let mut s1 = ComplexMatrix::zeros(d);
    let mut s2 = ComplexMatrix::zeros(d);
    for k in 0..d - 1 {
        let a = ladder(k) * half;
        s1[(k, k + 1)] = Complex::new(a, T::zero());
        s1[(k + 1, k)] = Complex::new(a, T::zero());
        s2[(k, k + 1)] = Complex::new(T::zero(), -a);
        s2[(k + 1, k)] = Complex::new(T::zero(), a);
    }
    let s3 = ComplexMatrix::from_fn(d, |i, j| {
        if i == j {
            Complex::new(m(i), T::zero())
        } else {
            zero
        }
    });
    [s1, s2, s3]
}

/// Zeeman part `h (E⊗S3 + S3⊗E)`.
pub fn zeeman_term<T: Real>(kind: SpinKind, h: T) -> ComplexMatrix<T> {
    let [_, _, s3] = spin_matrices::<T>(kind);
    let e = ComplexMatrix::identity(kind.dim());
    (&kron(&e, &s3) + &kron(&s3, &e)).scale(h)
}

/// Isotropic exchange part `4J (S1⊗S1 + S2⊗S2 + S3⊗S3)`.
pub fn exchange_term<T: Real>(kind: SpinKind, j: T) -> ComplexMatrix<T> {
    let spins = spin_matrices::<T>(kind);
    let mut out = ComplexMatrix::zeros(kind.pair_dim());
    for s in &spins {
        out = &out + &kron(s, s);
    }
    out.scale(T::lit(4.0) * j)
}

/// Full pair Hamiltonian `h (E⊗S3 + S3⊗E) + 4J S⃗⊗S⃗` (unit magnetic moment).
pub fn build_hamiltonian<T: Real>(kind: SpinKind, h: T, j: T) -> ComplexMatrix<T> {
    &zeeman_term(kind, h) + &exchange_term(kind, j)
}
