//! Thermodynamics and quasi-static Otto cycles of two exchange-coupled
//! spins in a static field: spin-3/2 pairs (biquartit) with spin-1/2 pairs
//! (biqubit) for comparison.
//!
//! The numeric core is generic over [`Real`] (`f32` or `f64`); the `*64` and
//! `*32` aliases below fix the scalar. Parameter sweeps, CSV output and the
//! invariant runner work in `f64`.
//!
//! ```
//! use qudit_otto::{run_cycle, CycleParams64, Regime};
//!
//! let report = run_cycle(&CycleParams64::biquartit(1.0, 0.5, 1.0, 0.7, 0.0)).unwrap();
//! assert_eq!(report.regime, Regime::HeatEngine);
//! assert!((report.eta.unwrap() - 0.3).abs() < 1e-12);
//! ```

pub mod entanglement;
pub mod error;
pub mod gibbs;
pub mod local;
pub mod otto;
pub mod scalar;
pub mod spectrum;
pub mod spin_algebra;
pub mod sweep;
pub mod verify;

pub use entanglement::{
    bloch_decompose, gibbs_m_sm, m_sm, su4_basis, BlochDecomposition, OperatorBasis,
};
pub use error::{Error, Result};
pub use gibbs::{gibbs_density_matrix, ThermalState};
pub use local::{local_beta, partial_trace_oracle, LocalState};
pub use otto::{
    carnot_point, classify_regime, efficiency, heat_decomposition, local_split, run_cycle,
    CycleParams, CycleReport, LocalSplit, Regime,
};
pub use scalar::Real;
pub use spectrum::{biquartit_levels, biqubit_levels, projector, Spectrum};
pub use spin_algebra::{
    build_hamiltonian, diagonalize_hermitian, kron, spin_matrices, ComplexMatrix, SpinKind,
};

pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type Spectrum64 = Spectrum<f64>;
pub type ThermalState64 = ThermalState<f64>;
pub type LocalState64 = LocalState<f64>;
pub type OperatorBasis64 = OperatorBasis<f64>;
pub type BlochDecomposition64 = BlochDecomposition<f64>;
pub type CycleParams64 = CycleParams<f64>;
pub type CycleReport64 = CycleReport<f64>;

pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type ThermalState32 = ThermalState<f32>;
pub type CycleParams32 = CycleParams<f32>;
pub type CycleReport32 = CycleReport<f32>;
