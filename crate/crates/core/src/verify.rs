//! Seeded invariant runner.
//!
//! Each suite draws its parameters from a ChaCha8 stream seeded by the
//! caller, evaluates one family of identities and records the worst
//! residual relative to its tolerance. Tolerances sit orders of magnitude
//! away from the residuals a correct build produces, so verdicts do not
//! depend on the seed.

use std::fmt;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entanglement::gibbs_m_sm;
use crate::gibbs::{gibbs_density_matrix, ThermalState};
use crate::local::{local_beta, partial_trace_oracle, LocalState};
use crate::otto::{decomposed_efficiency, local_split, run_cycle, CycleParams, Regime};
use crate::spectrum::{biquartit_levels, biqubit_levels, eigenvectors};
use crate::spin_algebra::{
    build_hamiltonian, diagonalize_hermitian, exchange_term, spin_matrices, zeeman_term,
    ComplexMatrix, SpinKind,
};

/// Source of the sixteen biquartit energies; swapped out for fault injection.
pub type LevelsFn = fn(f64, f64) -> [f64; 16];

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// Residual of the check closest to (or furthest past) its tolerance.
    pub worst: f64,
    /// Tolerance that residual was held to.
    pub tolerance: f64,
    pub note: String,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<28} checks={:<5} worst={:.3e} tol={:.1e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checks,
            self.worst,
            self.tolerance
        )?;
        if !self.note.is_empty() {
            write!(f, "  {}", self.note)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn verdicts(&self) -> Vec<(&'static str, bool)> {
        self.suites.iter().map(|s| (s.name, s.passed())).collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify seed={}", self.seed)?;
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(f, "{} suites, {} failed", self.suites.len(), failed)
    }
}

struct Tally {
    name: &'static str,
    checks: usize,
    failures: usize,
    worst_ratio: f64,
    worst: f64,
    tolerance: f64,
    note: String,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: 0,
            worst_ratio: -1.0,
            worst: 0.0,
            tolerance: 0.0,
            note: String::new(),
        }
    }

    fn record(&mut self, residual: f64, tol: f64) {
        self.checks += 1;
        let ratio = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual / tol
        };
        if residual.is_nan() || residual > tol {
            self.failures += 1;
        }
        if ratio > self.worst_ratio {
            self.worst_ratio = ratio;
            self.worst = residual;
            self.tolerance = tol;
        }
    }

    /// A check that produced an error instead of a residual.
    fn fail(&mut self, why: impl fmt::Display) {
        self.record(f64::INFINITY, 0.0);
        if self.note.is_empty() {
            self.note = why.to_string();
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
            worst: self.worst,
            tolerance: self.tolerance,
            note: self.note,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn vec_norm(v: &[Complex<f64>]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Random nonzero value with magnitude in `[lo, hi)` and random sign.
fn signed(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let x = rng.random_range(lo..hi);
    if rng.random_bool(0.5) {
        x
    } else {
        -x
    }
}

fn kinds() -> [SpinKind; 2] {
    [SpinKind::ThreeHalves, SpinKind::Half]
}

fn random_cycle(rng: &mut ChaCha8Rng, kind: SpinKind) -> CycleParams<f64> {
    CycleParams {
        kind,
        t_hot: signed(rng, 0.2, 5.0),
        t_cold: signed(rng, 0.2, 5.0),
        h: rng.random_range(-5.0..5.0),
        h_prime: rng.random_range(-5.0..5.0),
        j: rng.random_range(-2.0..2.0),
    }
}

pub fn spin_algebra_suite() -> SuiteResult {
    let mut t = Tally::new("spin algebra");
    let i = Complex::new(0.0, 1.0);
    for kind in kinds() {
        let [s1, s2, s3] = spin_matrices::<f64>(kind);
        let s = kind.spin::<f64>();
        for (a, b, c) in [(&s1, &s2, &s3), (&s2, &s3, &s1), (&s3, &s1, &s2)] {
            t.record((&a.commutator(b) - &c.scale_complex(i)).max_abs(), 1e-14);
        }
        let casimir = &(&(&s1 * &s1) + &(&s2 * &s2)) + &(&s3 * &s3);
        let expected = ComplexMatrix::identity(kind.dim()).scale(s * (s + 1.0));
        t.record((&casimir - &expected).max_abs(), 1e-14);
        for m in [&s1, &s2, &s3] {
            t.record(m.hermitian_defect(), 1e-15);
            t.record(m.trace().norm(), 1e-15);
        }
    }
    t.finish()
}

pub fn commutation_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("zeeman/exchange commute");
    for _ in 0..50 {
        let (h, j) = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        for kind in kinds() {
            let a = zeeman_term(kind, h);
            let b = exchange_term(kind, j);
            let scale = 1.0 + a.max_abs() * b.max_abs();
            t.record(a.commutator(&b).max_abs() / scale, 1e-13);
        }
    }
    t.finish()
}

/// Analytic levels against brute-force diagonalization; `levels` supplies
/// the biquartit energies under test.
pub fn spectrum_suite(rng: &mut ChaCha8Rng, levels: LevelsFn) -> SuiteResult {
    let mut t = Tally::new("spectrum vs eigensolver");
    for _ in 0..100 {
        let (h, j) = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        for kind in kinds() {
            let mut analytic = match kind {
                SpinKind::ThreeHalves => levels(h, j).to_vec(),
                SpinKind::Half => biqubit_levels(h, j).to_vec(),
            };
            analytic.sort_by(f64::total_cmp);
            match diagonalize_hermitian(&build_hamiltonian(kind, h, j)) {
                Ok(eig) => {
                    let r = analytic
                        .iter()
                        .zip(&eig.values)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max);
                    t.record(r, 1e-10);
                }
                Err(e) => t.fail(e),
            }
        }
    }
    t.finish()
}

/// `‖H|e_i⟩ − e_i|e_i⟩‖ ≤ 1e-12 (1 + ‖H‖)` for the constant eigenvectors.
pub fn eigen_residual_suite(rng: &mut ChaCha8Rng, levels: LevelsFn) -> SuiteResult {
    let mut t = Tally::new("eigenvector residuals");
    for _ in 0..50 {
        let (h, j) = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        for kind in kinds() {
            let ham = build_hamiltonian(kind, h, j);
            let tol = 1e-12 * (1.0 + ham.frobenius_norm());
            let energies = match kind {
                SpinKind::ThreeHalves => levels(h, j).to_vec(),
                SpinKind::Half => biqubit_levels(h, j).to_vec(),
            };
            for (v, e) in eigenvectors::<f64>(kind).iter().zip(energies) {
                let hv = ham.mul_vec(v);
                let diff: Vec<Complex<f64>> =
                    hv.iter().zip(v).map(|(a, b)| a - b.scale(e)).collect();
                t.record(vec_norm(&diff), tol);
            }
        }
    }
    t.finish()
}

/// Even/odd symmetry at J = 0 and potentials against finite differences of F.
pub fn gibbs_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("gibbs symmetry and moments");
    for k in 1..=20 {
        let beta = 0.25 * k as f64;
        for kind in kinds() {
            let plus = ThermalState::of_pair(kind, 1.0, 0.0, beta);
            let minus = ThermalState::of_pair(kind, 1.0, 0.0, -beta);
            match (plus, minus) {
                (Ok(p), Ok(m)) => {
                    t.record((p.entropy() - m.entropy()).abs(), 1e-12);
                    t.record((p.heat_capacity() - m.heat_capacity()).abs(), 1e-12);
                    t.record((p.internal_energy() + m.internal_energy()).abs(), 1e-12);
                }
                (Err(e), _) | (_, Err(e)) => t.fail(e),
            }
        }
    }
    for _ in 0..10 {
        let kind = if rng.random_bool(0.5) {
            SpinKind::ThreeHalves
        } else {
            SpinKind::Half
        };
        let h = rng.random_range(0.2..3.0);
        let j = rng.random_range(-1.0..1.0);
        let beta = signed(rng, 0.2, 3.0);
        match fd_moments(kind, h, j, beta) {
            Ok(pairs) => {
                for (a, b) in pairs {
                    t.record(rel(a, b), 1e-5);
                }
            }
            Err(e) => t.fail(e),
        }
    }
    t.finish()
}

/// `(population value, finite-difference value)` for U, S and C.
///
/// `U = ∂(βF)/∂β`, `S = β² ∂F/∂β`, `C = −β² ∂²(βF)/∂β²`.
pub fn fd_moments(kind: SpinKind, h: f64, j: f64, beta: f64) -> crate::Result<[(f64, f64); 3]> {
    let f = |b: f64| ThermalState::of_pair(kind, h, j, b).and_then(|s| s.free_energy());
    let d = 1e-4 * beta.abs().max(1.0);
    let (fm, f0, fp) = (f(beta - d)?, f(beta)?, f(beta + d)?);
    let g = |b: f64, fb: f64| b * fb;
    let (gm, g0, gp) = (g(beta - d, fm), g(beta, f0), g(beta + d, fp));
    let s = ThermalState::of_pair(kind, h, j, beta)?;
    Ok([
        (s.internal_energy(), (gp - gm) / (2.0 * d)),
        (s.entropy(), beta * beta * (fp - fm) / (2.0 * d)),
        (
            s.heat_capacity(),
            -beta * beta * (gp - 2.0 * g0 + gm) / (d * d),
        ),
    ])
}

pub fn local_state_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("local closed form vs trace");
    for _ in 0..50 {
        let h: f64 = rng.random_range(-3.0..3.0);
        let j: f64 = rng.random_range(-1.0..1.0);
        let beta: f64 = rng.random_range(-3.0..3.0);
        let closed = LocalState::of_gibbs(h, j, beta);
        let reduced = gibbs_density_matrix(SpinKind::ThreeHalves, h, j, beta)
            .and_then(|r| partial_trace_oracle(&r));
        match (closed, reduced) {
            (Ok(ls), Ok(red)) => {
                for k in 0..4 {
                    t.record((ls.populations[k] - red[(k, k)].re).abs(), 1e-12);
                }
                t.record(red.max_off_diagonal(), 1e-12);
            }
            (Err(e), _) | (_, Err(e)) => t.fail(e),
        }
    }
    t.finish()
}

pub fn local_temperature_suite() -> SuiteResult {
    let mut t = Tally::new("local betas at J = 0");
    for beta in [-2.0f64, -1.0, -0.5, 0.5, 1.0, 2.0] {
        match local_beta(2.0, 0.0, beta, None) {
            Ok(b) => t.record((b - beta).abs(), 1e-6),
            Err(e) => t.fail(e),
        }
        match LocalState::of_gibbs(2.0, 0.0, beta).and_then(|ls| ls.spectroscopic_beta()) {
            Ok(b) => t.record((b - beta).abs(), 1e-6),
            Err(e) => t.fail(e),
        }
    }
    t.finish()
}

pub fn entanglement_suite() -> SuiteResult {
    let mut t = Tally::new("entanglement null");
    for kind in kinds() {
        for h in [-2.0, -0.5, 0.5, 1.0, 3.0] {
            for beta in [-3.0, -1.0, -0.2, 0.2, 1.0, 3.0] {
                match gibbs_m_sm(kind, h, 0.0, beta) {
                    Ok(m) => t.record(m, 1e-10),
                    Err(e) => t.fail(e),
                }
            }
        }
        match gibbs_m_sm(kind, 1.0, 0.7, 0.0) {
            Ok(m) => t.record(m, 0.0),
            Err(e) => t.fail(e),
        }
    }
    t.finish()
}

pub fn energy_balance_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("cycle energy balance");
    for k in 0..200 {
        let kind = if k % 2 == 0 {
            SpinKind::ThreeHalves
        } else {
            SpinKind::Half
        };
        let p = random_cycle(rng, kind);
        match run_cycle(&p) {
            Ok(r) => t.record((r.q1 + r.w2 + r.q3 + r.w4).abs(), 1e-12 * r.scale()),
            Err(e) => t.fail(e),
        }
    }
    t.finish()
}

/// `Q1 = Jm + hn`, `Q3 = −Jm − h'n`, `−(W2+W4) = (h−h')n`, `W = 2w`,
/// `Q1 = Jm + 2q1`, `Q3 = −Jm + 2q2`, and the decomposed engine efficiency.
pub fn decomposition_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("decomposition identities");
    for _ in 0..100 {
        let p = random_cycle(rng, SpinKind::ThreeHalves);
        let r = match run_cycle(&p) {
            Ok(r) => r,
            Err(e) => {
                t.fail(e);
                continue;
            }
        };
        let (m, n) = (r.m.unwrap_or(f64::NAN), r.n.unwrap_or(f64::NAN));
        let tol = 1e-12 * r.scale().max(m.abs()).max(n.abs());
        t.record((r.q1 - p.j * m - p.h * n).abs(), tol);
        t.record((r.q3 + p.j * m + p.h_prime * n).abs(), tol);
        t.record((r.extracted_work() - (p.h - p.h_prime) * n).abs(), tol);
        match local_split(&r, &p) {
            Ok(s) => {
                t.record((s.w_total - 2.0 * s.w).abs(), tol);
                t.record((r.extracted_work() - s.w_total).abs(), tol);
                t.record((r.q1 - p.j * m - 2.0 * s.q1).abs(), tol);
                t.record((r.q3 + p.j * m - 2.0 * s.q2).abs(), tol);
            }
            Err(e) => t.fail(e),
        }
        if r.regime == Regime::HeatEngine {
            if let (Some(eta), Some(closed)) = (r.eta, decomposed_efficiency(&r, &p)) {
                t.record(rel(eta, closed), 1e-10);
            }
        }
    }
    t.finish()
}

/// With J = 0 every draw classified as an engine has `h'/T' > h/T` when
/// the fields are positive. Reversing both fields mirrors the spectrum, so
/// negative-field engines obey `h'/T' < h/T` instead.
pub fn engine_condition_suite(rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("J = 0 engine condition");
    let mut engines = 0;
    let mut positive = 0;
    for _ in 0..400 {
        let kind = if rng.random_bool(0.5) {
            SpinKind::ThreeHalves
        } else {
            SpinKind::Half
        };
        let p = CycleParams {
            j: 0.0,
            ..random_cycle(rng, kind)
        };
        match run_cycle(&p) {
            Ok(r) if r.regime == Regime::HeatEngine => {
                engines += 1;
                if p.h > 0.0 {
                    positive += 1;
                }
                let margin = (p.h / p.t_hot - p.h_prime / p.t_cold) * p.h.signum();
                t.record(margin.max(0.0), 0.0);
            }
            Ok(_) => {}
            Err(e) => t.fail(e),
        }
    }
    t.note = format!("{engines} engine draws, {positive} with h > 0");
    t.finish()
}

/// All suites with the production spectrum.
pub fn verify_all(seed: u64) -> VerifyReport {
    verify_with_levels(seed, biquartit_levels::<f64>)
}

/// All suites, with the biquartit levels taken from `levels`.
pub fn verify_with_levels(seed: u64, levels: LevelsFn) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let suites = vec![
        spin_algebra_suite(),
        commutation_suite(&mut rng),
        spectrum_suite(&mut rng, levels),
        eigen_residual_suite(&mut rng, levels),
        gibbs_suite(&mut rng),
        local_state_suite(&mut rng),
        local_temperature_suite(),
        entanglement_suite(),
        energy_balance_suite(&mut rng),
        decomposition_suite(&mut rng),
        engine_condition_suite(&mut rng),
    ];
    VerifyReport { seed, suites }
}
