//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qudit_otto::local::{local_beta, partial_trace_oracle};
use qudit_otto::otto::local_split;
use qudit_otto::spectrum::{eigenvectors, levels};
use qudit_otto::sweep::{
    argmax, engine_efficiency, figure_preset, regime_transitions, run_sweep, series_points,
    CsvTable,
};
use qudit_otto::verify::fd_moments;
use qudit_otto::{
    build_hamiltonian, diagonalize_hermitian, gibbs_density_matrix, gibbs_m_sm, run_cycle,
    CycleParams, LocalState, Regime, SpinKind, ThermalState,
};

const SEED: u64 = 20_240_611;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

type Criterion = (&'static str, fn() -> Verdict);

const KINDS: [SpinKind; 2] = [SpinKind::ThreeHalves, SpinKind::Half];

fn spectrum_oracle() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut worst_level, mut worst_residual) = (0.0f64, 0.0f64);
    let mut pass = true;
    for _ in 0..100 {
        let h = rng.random_range(-5.0..5.0);
        let j = rng.random_range(-5.0..5.0);
        for kind in KINDS {
            let ham = build_hamiltonian(kind, h, j);
            let energies = levels(kind, h, j);
            let mut sorted = energies.clone();
            sorted.sort_by(f64::total_cmp);
            let eig = diagonalize_hermitian(&ham).expect("Hermitian");
            let dl = sorted
                .iter()
                .zip(&eig.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            let norm = eig.values.iter().fold(0.0f64, |m, e| m.max(e.abs()));
            worst_level = worst_level.max(dl);
            pass &= dl <= 1e-10;
            for (v, e) in eigenvectors::<f64>(kind).iter().zip(&energies) {
                let r = ham
                    .mul_vec(v)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| (a - b.scale(*e)).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                let tol = 1e-12 * (1.0 + norm);
                worst_residual = worst_residual.max(r / tol * 1e-12);
                pass &= r <= tol;
            }
        }
    }
    verdict(
        pass,
        format!("max |level diff| {worst_level:.2e} (tol 1e-10), max residual/(1+|H|) {worst_residual:.2e} (tol 1e-12)"),
    )
}

fn peak(table: &CsvTable, series: &str) -> Option<(f64, f64, f64)> {
    let (j, eta) = argmax(&series_points(table, "J", "eta", series))?;
    let q3 = series_points(table, "J", "Q3", series)
        .into_iter()
        .find(|p| p.0 == j)
        .map(|p| p.1)?;
    Some((j, eta, q3))
}

fn fig7() -> Verdict {
    let table = run_sweep(&figure_preset("fig7").unwrap().spec).unwrap();
    let (Some((jq, eq, q3q)), Some((jb, eb, q3b))) =
        (peak(&table, "biquartit"), peak(&table, "biqubit"))
    else {
        return verdict(false, "no efficiency peak");
    };
    let checks = [
        ("biquartit eta 0.999+-0.001", (eq - 0.999).abs() <= 1e-3),
        ("biquartit J -0.11+-0.02", (jq + 0.11).abs() <= 0.02),
        ("biquartit Q3 -0.0021+-0.0005", (q3q + 0.0021).abs() <= 5e-4),
        ("biqubit J -0.26+-0.02", (jb + 0.26).abs() <= 0.02),
        (
            "biqubit leakage -0.0028+-0.0005",
            (q3b + 0.0028).abs() <= 5e-4,
        ),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    verdict(
        failed.is_empty(),
        format!(
            "biquartit eta {eq:.6} at J {jq:.3} Q3 {q3q:.3e}; biqubit eta {eb:.6} at J {jb:.3} Q3 {q3b:.3e}{}",
            if failed.is_empty() { String::new() } else { format!("; failed: {}", failed.join(", ")) }
        ),
    )
}

fn fig8() -> Verdict {
    let preset = figure_preset("fig8").unwrap();
    let table = run_sweep(&preset.spec).unwrap();
    let r = run_cycle(&CycleParams::biquartit(2.5, 0.25, 16.0, 12.0, 0.0)).unwrap();
    let eta0_exact = r.eta0 == 0.25;
    let quartit = engine_efficiency(&table, "J", "biquartit");
    let best = quartit
        .iter()
        .filter(|p| p.0 > 0.0)
        .copied()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((f64::NAN, f64::NAN));
    let overall = quartit
        .iter()
        .chain(engine_efficiency(&table, "J", "biqubit").iter())
        .map(|p| p.1)
        .fold(f64::MIN, f64::max);
    verdict(
        eta0_exact && best.1 >= 0.75 && overall <= 0.9 + 1e-9,
        format!(
            "eta0 {}, biquartit max engine eta {:.4} at J {:.2}, max engine eta overall {:.4} (limit 0.9)",
            r.eta0, best.1, best.0, overall
        ),
    )
}

/// Consecutive grid points (within one series) that satisfy `pattern`, and
/// the worst `|eta − 1|` among them.
fn unit_efficiency_interval(
    preset: &str,
    pattern: fn(&[f64; 4]) -> bool,
    regime: Regime,
) -> Verdict {
    let table = run_sweep(&figure_preset(preset).unwrap().spec).unwrap();
    let mut detail = Vec::new();
    let mut pass = false;
    for series in ["biquartit", "biqubit"] {
        let col = |c: &str| series_points(&table, "J", c, series);
        let (q1, w2, q3, w4) = (col("Q1"), col("W2"), col("Q3"), col("W4"));
        let eta = table.numeric("eta", Some(series)).unwrap();
        let labels = table.cells("regime", Some(series)).unwrap();
        let mut run = 0usize;
        let mut longest = 0usize;
        let mut worst = 0.0f64;
        let mut interval = (f64::NAN, f64::NAN);
        for k in 0..q1.len() {
            let v = [q1[k].1, w2[k].1, q3[k].1, w4[k].1];
            if pattern(&v) && labels[k] == regime.label() {
                run += 1;
                worst = worst.max((eta[k].unwrap_or(f64::NAN) - 1.0).abs());
                if run > longest {
                    longest = run;
                    interval = (q1[k + 1 - run].0, q1[k].0);
                }
            } else {
                run = 0;
            }
        }
        let ok = longest >= 2 && worst <= 1e-12;
        if series == "biquartit" {
            pass = ok;
        }
        detail.push(format!(
            "{series}: J in [{:.2}, {:.2}] ({longest} pts), max |eta-1| {worst:.1e}",
            interval.0, interval.1
        ));
    }
    verdict(pass, detail.join("; "))
}

fn fig5() -> Verdict {
    unit_efficiency_interval(
        "fig5",
        |v| v[0] > 0.0 && v[2] > 0.0 && v[1] < 0.0 && v[3] < 0.0,
        Regime::DoubleHeatInput,
    )
}

fn fig9() -> Verdict {
    unit_efficiency_interval(
        "fig9",
        |v| v[0] < 0.0 && v[2] < 0.0 && v[1] > 0.0 && v[3] > 0.0,
        Regime::WorkToHeat,
    )
}

fn fig11() -> Verdict {
    let spec = figure_preset("fig11").unwrap().spec;
    let step = (spec.stop - spec.start) / (spec.count - 1) as f64;
    let table = run_sweep(&spec).unwrap();
    let tr = regime_transitions(&table, "h_prime", "J=0");
    let near = |from: &str, to: &str, x: f64| {
        tr.iter()
            .any(|(h, a, b)| a == from && b == to && (h - x).abs() <= step)
    };
    let text: Vec<String> = tr
        .iter()
        .map(|(h, a, b)| format!("{a}->{b} at {h:.4}"))
        .collect();
    verdict(
        spec.count == 1000
            && tr.len() == 2
            && near("Refrigerator", "HeatEngine", 0.5)
            && near("HeatEngine", "Heater", 1.0),
        format!("{} (grid step {step:.2e})", text.join(", ")),
    )
}

fn random_cycle(rng: &mut ChaCha8Rng, kind: SpinKind, positive_beta: bool) -> CycleParams<f64> {
    let sign = |rng: &mut ChaCha8Rng| {
        if positive_beta || rng.random_bool(0.5) {
            1.0
        } else {
            -1.0
        }
    };
    let t_hot = sign(rng) * rng.random_range(0.2..5.0);
    let t_cold = sign(rng) * rng.random_range(0.2..5.0);
    CycleParams {
        kind,
        t_hot,
        t_cold,
        h: rng.random_range(-5.0..5.0),
        h_prime: rng.random_range(-5.0..5.0),
        j: rng.random_range(-2.0..2.0),
    }
}

fn energy_balance() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst = 0.0f64;
    let mut negative = 0;
    for k in 0..200 {
        let kind = KINDS[k % 2];
        let p = random_cycle(&mut rng, kind, false);
        if p.t_hot < 0.0 || p.t_cold < 0.0 {
            negative += 1;
        }
        let r = run_cycle(&p).unwrap();
        let scale = [r.q1, r.w2, r.q3, r.w4]
            .iter()
            .fold(1.0f64, |m, x| m.max(x.abs()));
        worst = worst.max((r.q1 + r.w2 + r.q3 + r.w4).abs() / scale);
    }
    verdict(
        worst <= 1e-12 && negative > 0,
        format!("max |sum|/scale {worst:.2e} over 200 draws ({negative} with a negative bath)"),
    )
}

fn decomposition() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_cycle(&mut rng, SpinKind::ThreeHalves, false);
        let r = run_cycle(&p).unwrap();
        let (m, n) = (r.m.unwrap(), r.n.unwrap());
        let s = local_split(&r, &p).unwrap();
        let scale = r.scale().max(m.abs()).max(n.abs());
        let residuals = [
            r.q1 - p.j * m - p.h * n,
            r.q3 + p.j * m + p.h_prime * n,
            -(r.w2 + r.w4) - (p.h - p.h_prime) * n,
            s.w_total - 2.0 * s.w,
            r.q1 - p.j * m - 2.0 * s.q1,
        ];
        for x in residuals {
            worst = worst.max(x.abs() / scale);
        }
    }
    verdict(
        worst <= 1e-12,
        format!("max residual/scale {worst:.2e} over 100 draws"),
    )
}

fn reduced_state() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let (mut diag, mut off) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let h: f64 = rng.random_range(-3.0..3.0);
        let j: f64 = rng.random_range(-1.5..1.5);
        let beta: f64 = rng.random_range(-3.0..3.0);
        let ls = LocalState::of_gibbs(h, j, beta).unwrap();
        let red =
            partial_trace_oracle(&gibbs_density_matrix(SpinKind::ThreeHalves, h, j, beta).unwrap())
                .unwrap();
        for k in 0..4 {
            diag = diag.max((ls.populations[k] - red[(k, k)].re).abs());
        }
        off = off.max(red.max_off_diagonal());
    }
    verdict(
        diag <= 1e-12 && off <= 1e-12,
        format!("max |pi - diag| {diag:.2e}, max off-diagonal {off:.2e}"),
    )
}

fn local_temperatures() -> Verdict {
    let (mut worst_loc, mut worst_m) = (0.0f64, 0.0f64);
    for beta in [-2.0f64, -1.0, -0.5, 0.5, 1.0, 2.0] {
        let b = local_beta(2.0, 0.0, beta, None).unwrap();
        let bm = LocalState::of_gibbs(2.0, 0.0, beta)
            .unwrap()
            .spectroscopic_beta()
            .unwrap();
        worst_loc = worst_loc.max((b - beta).abs());
        worst_m = worst_m.max((bm - beta).abs());
    }
    verdict(
        worst_loc <= 1e-6 && worst_m <= 1e-6,
        format!("max |beta_loc - beta| {worst_loc:.2e}, max |beta_Mloc - beta| {worst_m:.2e}"),
    )
}

fn symmetry() -> Verdict {
    let mut worst = 0.0f64;
    for k in 1..=20 {
        let beta = 0.25 * k as f64;
        let p = ThermalState::of_pair(SpinKind::ThreeHalves, 1.0, 0.0, beta).unwrap();
        let m = ThermalState::of_pair(SpinKind::ThreeHalves, 1.0, 0.0, -beta).unwrap();
        worst = worst
            .max((p.entropy() - m.entropy()).abs())
            .max((p.heat_capacity() - m.heat_capacity()).abs())
            .max((p.internal_energy() + m.internal_energy()).abs());
    }
    verdict(
        worst <= 1e-12,
        format!("max residual {worst:.2e} on 40 beta points"),
    )
}

fn entanglement_null() -> Verdict {
    let mut worst = 0.0f64;
    for h in [-3.0, -1.0, -0.25, 0.5, 1.0, 2.0, 4.0] {
        for beta in [-4.0, -1.5, -0.5, -0.1, 0.1, 0.5, 1.5, 4.0] {
            worst = worst.max(gibbs_m_sm(SpinKind::ThreeHalves, h, 0.0, beta).unwrap());
        }
    }
    let at_zero = gibbs_m_sm(SpinKind::ThreeHalves, 1.0, 0.4, 0.0).unwrap();
    verdict(
        worst <= 1e-10 && at_zero == 0.0,
        format!("max m_SM at J = 0 {worst:.2e}, m_SM(beta = 0) = {at_zero}"),
    )
}

fn moments() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 13);
    let mut worst = 0.0f64;
    for k in 0..10 {
        let kind = KINDS[k % 2];
        let h = rng.random_range(0.2..3.0);
        let j = rng.random_range(-1.0..1.0);
        let beta = rng.random_range(0.2..3.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        for (a, b) in fd_moments(kind, h, j, beta).unwrap() {
            worst = worst.max((a - b).abs() / a.abs().max(1e-12));
        }
    }
    verdict(
        worst <= 1e-5,
        format!("max relative deviation {worst:.2e} over U, S, C at 10 points"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("spectrum oracle", spectrum_oracle),
        ("fig7 efficiency peak and leakage", fig7),
        ("fig8 coupling-enhanced efficiency", fig8),
        ("fig5 double heat input, eta = 1", fig5),
        ("fig9 work to heat, eta = 1", fig9),
        ("fig11 regime boundaries", fig11),
        ("energy balance", energy_balance),
        ("decomposition identities", decomposition),
        ("reduced-state oracle", reduced_state),
        ("local temperatures at J = 0", local_temperatures),
        ("J = 0 thermodynamic symmetry", symmetry),
        ("entanglement null", entanglement_null),
        ("moments vs finite differences", moments),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let v = run();
        if !v.pass {
            failed += 1;
        }
        println!(
            "{} criterion {:>2} {:<36} {}",
            if v.pass { "PASS" } else { "FAIL" },
            k + 1,
            title,
            v.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
