use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {asymmetry:e})")]
    NonHermitian { asymmetry: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("level index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("free energy is undefined at infinite temperature (beta = 0)")]
    InfiniteTemperature,

    #[error("zero temperature is not admitted")]
    ZeroTemperature,

    #[error("derivative du/dbeta vanishes ({0:e}); local temperature is singular")]
    SingularDerivative(f64),

    #[error("zero population in logarithm")]
    ZeroPopulation,

    #[error("zero energy gap between local levels (h = 0)")]
    ZeroGap,

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("operation requires the biquartit working substance")]
    RequiresBiquartit,

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),

    #[error("csv output failed: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;
