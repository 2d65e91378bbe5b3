//! Quasi-static quantum Otto cycle on the coupled pair.
//!
//! Stage 1 thermalizes at field `h` with the bath at `T_hot`, stage 2 moves
//! the field to `h'` with occupations frozen per level, stage 3
//! thermalizes at `h'` with the bath at `T_cold`, stage 4 returns the field
//! to `h`. Levels are paired across fields by branch index.
//!
//! Sign convention: `Q > 0` is heat absorbed by the working substance,
//! `W > 0` is work done on it. The work delivered per cycle is therefore
//! `−(W2 + W4)`.

use crate::error::{Error, Result};
use crate::gibbs::{beta_from_temperature, ThermalState};
use crate::scalar::Real;
use crate::spectrum::levels;
use crate::spin_algebra::SpinKind;

/// Control parameters of one cycle. `t_hot` is the stage-1 bath and
/// `t_cold` the stage-3 bath; either may be negative, neither zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleParams<T> {
    pub kind: SpinKind,
    pub t_hot: T,
    pub t_cold: T,
    pub h: T,
    pub h_prime: T,
    pub j: T,
}

impl<T: Real> CycleParams<T> {
    pub fn biquartit(t_hot: T, t_cold: T, h: T, h_prime: T, j: T) -> Self {
        Self {
            kind: SpinKind::ThreeHalves,
            t_hot,
            t_cold,
            h,
            h_prime,
            j,
        }
    }

    pub fn biqubit(t_hot: T, t_cold: T, h: T, h_prime: T, j: T) -> Self {
        Self {
            kind: SpinKind::Half,
            t_hot,
            t_cold,
            h,
            h_prime,
            j,
        }
    }

    pub fn with_kind(self, kind: SpinKind) -> Self {
        Self { kind, ..self }
    }

    pub fn with_coupling(self, j: T) -> Self {
        Self { j, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.t_hot, self.t_cold, self.h, self.h_prime, self.j]
            .iter()
            .all(|x| x.is_finite());
        if !finite {
            return Err(Error::NonFinite("cycle parameters"));
        }
        if self.t_hot == T::zero() || self.t_cold == T::zero() {
            return Err(Error::ZeroTemperature);
        }
        Ok(())
    }
}

/// Operating mode, from the signs of `(Q1, W2 + W4, Q3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Q1 > 0, Q3 < 0, W < 0.
    HeatEngine,
    /// W > 0, Q3 > 0: heat drawn from the stage-3 bath.
    Refrigerator,
    /// W > 0, Q1 > 0, Q3 < 0: work pushes heat into the stage-3 bath.
    Heater,
    /// Q1 < 0, Q3 < 0, W > 0: all work dumped as heat.
    WorkToHeat,
    /// W = 0, Q1 > 0, Q3 < 0.
    PureHeatTransfer,
    /// Q1 > 0, Q3 > 0, W < 0: both baths supply heat.
    DoubleHeatInput,
    Other,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::HeatEngine => "HeatEngine",
            Regime::Refrigerator => "Refrigerator",
            Regime::Heater => "Heater",
            Regime::WorkToHeat => "WorkToHeat",
            Regime::PureHeatTransfer => "PureHeatTransfer",
            Regime::DoubleHeatInput => "DoubleHeatInput",
            Regime::Other => "Other",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Heats, works and derived quantities of one cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport<T> {
    pub q1: T,
    pub w2: T,
    pub q3: T,
    pub w4: T,
    /// Coupling coefficient of the heat decomposition (biquartit only).
    pub m: Option<T>,
    /// Field coefficient of the heat decomposition (biquartit only).
    pub n: Option<T>,
    /// Stage-1 populations at `(h, T_hot)`.
    pub p: Vec<T>,
    /// Stage-3 populations at `(h', T_cold)`.
    pub p_prime: Vec<T>,
    pub eta: Option<T>,
    /// Uncoupled efficiency `1 − h'/h` (non-finite when `h = 0`).
    pub eta0: T,
    pub regime: Regime,
}

impl<T: Real> CycleReport<T> {
    /// `W2 + W4`, the net work done on the substance.
    pub fn net_work(&self) -> T {
        self.w2 + self.w4
    }

    /// Work delivered per cycle, `−(W2 + W4)`.
    pub fn extracted_work(&self) -> T {
        -self.net_work()
    }

    /// Largest magnitude among the balance terms, at least 1.
    pub fn scale(&self) -> T {
        [self.q1, self.w2, self.q3, self.w4]
            .iter()
            .fold(T::one(), |m, x| m.max(x.abs()))
    }
}

/// Evaluates the cycle.
pub fn run_cycle<T: Real>(params: &CycleParams<T>) -> Result<CycleReport<T>> {
    params.validate()?;
    let e = levels(params.kind, params.h, params.j);
    let e_prime = levels(params.kind, params.h_prime, params.j);
    let p = ThermalState::new(&e, beta_from_temperature(params.t_hot)?)?.populations;
    let p_prime = ThermalState::new(&e_prime, beta_from_temperature(params.t_cold)?)?.populations;

    let mut q1 = T::zero();
    let mut w2 = T::zero();
    let mut q3 = T::zero();
    let mut w4 = T::zero();
    for i in 0..e.len() {
        let dp = p[i] - p_prime[i];
        let de = e_prime[i] - e[i];
        q1 = q1 + e[i] * dp;
        w2 = w2 + p[i] * de;
        q3 = q3 - e_prime[i] * dp;
        w4 = w4 - p_prime[i] * de;
    }

    let (m, n) = match params.kind {
        SpinKind::ThreeHalves => {
            let (m, n) = heat_decomposition(&p, &p_prime)?;
            (Some(m), Some(n))
        }
        SpinKind::Half => (None, None),
    };

    let mut report = CycleReport {
        q1,
        w2,
        q3,
        w4,
        m,
        n,
        p,
        p_prime,
        eta: None,
        eta0: T::one() - params.h_prime / params.h,
        regime: Regime::Other,
    };
    report.regime = classify_regime(&report, default_eps(&report));
    report.eta = efficiency(&report);
    Ok(report)
}

/// Coefficients `(m, n)` with `Q1 = J m + h n` and `Q3 = −J m − h' n`,
/// from the biquartit populations before and after the cold isochore.
pub fn heat_decomposition<T: Real>(p: &[T], p_prime: &[T]) -> Result<(T, T)> {
    for v in [p, p_prime] {
        if v.len() != 16 {
            return Err(Error::DimensionMismatch {
                expected: 16,
                actual: v.len(),
            });
        }
    }
    // d[i] = p_{i+1} − p'_{i+1}
    let d: Vec<T> = p.iter().zip(p_prime).map(|(&a, &b)| a - b).collect();
    let l = T::lit;
    let m = -l(11.0) * (d[0] + d[1] + d[8])
        + l(9.0) * (d[4] + d[10] + d[11] + d[12] + d[13] + d[14] + d[15])
        - l(3.0) * (d[2] + d[3] + d[5] + d[6] + d[9])
        - l(15.0) * d[7];
    let n = -d[0] + d[1] - d[3] + d[5] - d[13]
        + d[14]
        + l(2.0) * (-d[2] + d[6] - d[12] + d[15])
        + l(3.0) * (-d[4] + d[11]);
    Ok((m, n))
}

/// Default sign threshold `1e-12 · max(|Q1|, |Q3|, |W2+W4|, 1)`.
pub fn default_eps<T: Real>(report: &CycleReport<T>) -> T {
    let scale = [report.q1, report.q3, report.net_work()]
        .iter()
        .fold(T::one(), |m, x| m.max(x.abs()));
    T::tolerance(1e-12) * scale
}

/// Sign-pattern classification with threshold `eps`.
pub fn classify_regime<T: Real>(report: &CycleReport<T>, eps: T) -> Regime {
    let pos = |x: T| x > eps;
    let neg = |x: T| x < -eps;
    let (q1, w, q3) = (report.q1, report.net_work(), report.q3);
    if pos(q1) && pos(q3) && neg(w) {
        Regime::DoubleHeatInput
    } else if neg(q1) && neg(q3) && pos(w) {
        Regime::WorkToHeat
    } else if pos(q1) && neg(q3) && neg(w) {
        Regime::HeatEngine
    } else if !pos(w) && !neg(w) && pos(q1) && neg(q3) {
        Regime::PureHeatTransfer
    } else if pos(w) && pos(q3) {
        Regime::Refrigerator
    } else if pos(w) && pos(q1) && neg(q3) {
        Regime::Heater
    } else {
        Regime::Other
    }
}

/// Conversion efficiency where it is defined:
/// engine `−W/Q1`, double heat input `−W/(Q1+Q3)`, work-to-heat
/// `−(Q1+Q3)/W`; absent otherwise.
pub fn efficiency<T: Real>(report: &CycleReport<T>) -> Option<T> {
    let w = report.net_work();
    match report.regime {
        Regime::HeatEngine => Some(-w / report.q1),
        Regime::DoubleHeatInput => Some(-w / (report.q1 + report.q3)),
        Regime::WorkToHeat => Some(-(report.q1 + report.q3) / w),
        _ => None,
    }
}

/// Engine efficiency in terms of the decomposition,
/// `η0 / (1 + J m / (h n))`; `None` when `h n = 0` or `(m, n)` is missing.
pub fn decomposed_efficiency<T: Real>(
    report: &CycleReport<T>,
    params: &CycleParams<T>,
) -> Option<T> {
    let (m, n) = (report.m?, report.n?);
    let hn = params.h * n;
    if hn == T::zero() {
        return None;
    }
    Some(report.eta0 / (T::one() + params.j * m / hn))
}

/// Field `h' = h T_cold / T_hot` at which the uncoupled device switches
/// between refrigerator and engine.
pub fn carnot_point<T: Real>(h: T, t_hot: T, t_cold: T) -> Result<T> {
    if t_hot == T::zero() {
        return Err(Error::ZeroTemperature);
    }
    Ok(h * (t_cold / t_hot))
}

/// Single-particle view of the biquartit cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalSplit<T> {
    /// Heat exchanged by one quartit with the stage-1 bath, `h n / 2`.
    pub q1: T,
    /// Heat exchanged by one quartit with the stage-3 bath, `−h' n / 2`.
    pub q2: T,
    /// Work per quartit, `q1 + q2`.
    pub w: T,
    /// Total `2w = (h − h') n`.
    pub w_total: T,
}

/// Splits the cycle into per-quartit heats and work. Together with the
/// coupling term, `Q1 = J m + 2 q1` and `Q3 = −J m + 2 q2`.
pub fn local_split<T: Real>(
    report: &CycleReport<T>,
    params: &CycleParams<T>,
) -> Result<LocalSplit<T>> {
    let n = report.n.ok_or(Error::RequiresBiquartit)?;
    let half = T::lit(0.5);
    let q1 = params.h * half * n;
    let q2 = -params.h_prime * half * n;
    let w = q1 + q2;
    Ok(LocalSplit {
        q1,
        q2,
        w,
        w_total: w + w,
    })
}
