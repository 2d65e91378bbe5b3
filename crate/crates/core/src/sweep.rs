//! Linear parameter sweeps, figure presets and CSV output.
//!
//! A [`SweepSpec`] holds one or more series (sub-curves sharing an axis,
//! each with its own substance and fixed parameters), the axis range and
//! the requested output columns. [`run_sweep`] evaluates every grid point,
//! in parallel, and assembles a [`CsvTable`] in grid order.
//!
//! Every table starts with `series` and the axis column and ends with
//! `error`. A quantity that cannot be evaluated at a grid point (F at
//! β = 0, β_Mloc at h = 0, a zero temperature) leaves its cell empty and
//! adds a `column: reason` entry to `error`; the sweep carries on.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::entanglement::gibbs_m_sm;
use crate::error::{Error, Result};
use crate::gibbs::{beta_from_temperature, ThermalState};
use crate::local::{local_beta, LocalState};
use crate::otto::{local_split, run_cycle, CycleParams, CycleReport};
use crate::spin_algebra::SpinKind;

/// Largest admitted grid size.
pub const MAX_COUNT: usize = 1_000_000;

/// Swept parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    J,
    HPrime,
    Beta,
    H,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::J => "J",
            Axis::HPrime => "h_prime",
            Axis::Beta => "beta",
            Axis::H => "h",
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" | "j" => Ok(Axis::J),
            "h_prime" | "h-prime" | "hp" => Ok(Axis::HPrime),
            "beta" => Ok(Axis::Beta),
            "h" => Ok(Axis::H),
            other => Err(Error::InvalidSweep(format!("unknown axis `{other}`"))),
        }
    }
}

/// Output column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Q1,
    W2,
    Q3,
    W4,
    M,
    N,
    Eta,
    Regime,
    /// Extracted work `−(W2 + W4)`.
    WorkExtracted,
    Entropy,
    Energy,
    HeatCapacity,
    FreeEnergy,
    MSm,
    /// `m_SM` of the stage-1 state at `(h, T)`.
    MSmHot,
    /// `m_SM` of the stage-3 state at `(h', T')`.
    MSmCold,
    BetaLoc,
    BetaMloc,
    LocalQ1,
    LocalQ2,
    LocalW,
}

impl Column {
    pub const ALL: [Column; 21] = [
        Column::Q1,
        Column::W2,
        Column::Q3,
        Column::W4,
        Column::M,
        Column::N,
        Column::Eta,
        Column::Regime,
        Column::WorkExtracted,
        Column::Entropy,
        Column::Energy,
        Column::HeatCapacity,
        Column::FreeEnergy,
        Column::MSm,
        Column::MSmHot,
        Column::MSmCold,
        Column::BetaLoc,
        Column::BetaMloc,
        Column::LocalQ1,
        Column::LocalQ2,
        Column::LocalW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::Q1 => "Q1",
            Column::W2 => "W2",
            Column::Q3 => "Q3",
            Column::W4 => "W4",
            Column::M => "m",
            Column::N => "n",
            Column::Eta => "eta",
            Column::Regime => "regime",
            Column::WorkExtracted => "W_ext",
            Column::Entropy => "S",
            Column::Energy => "U",
            Column::HeatCapacity => "C",
            Column::FreeEnergy => "F",
            Column::MSm => "m_SM",
            Column::MSmHot => "m_SM_hot",
            Column::MSmCold => "m_SM_cold",
            Column::BetaLoc => "beta_loc",
            Column::BetaMloc => "beta_Mloc",
            Column::LocalQ1 => "q1",
            Column::LocalQ2 => "q2",
            Column::LocalW => "w",
        }
    }

    /// Columns computed from a full cycle (need `h, h', T, T', J`).
    fn is_cycle(self) -> bool {
        matches!(
            self,
            Column::Q1
                | Column::W2
                | Column::Q3
                | Column::W4
                | Column::M
                | Column::N
                | Column::Eta
                | Column::Regime
                | Column::WorkExtracted
                | Column::MSmHot
                | Column::MSmCold
                | Column::LocalQ1
                | Column::LocalQ2
                | Column::LocalW
        )
    }

    fn biquartit_only(self) -> bool {
        matches!(
            self,
            Column::M
                | Column::N
                | Column::BetaLoc
                | Column::BetaMloc
                | Column::LocalQ1
                | Column::LocalQ2
                | Column::LocalW
        )
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Column::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidSweep(format!("unknown column `{s}`")))
    }
}

/// Parameters held constant along the axis. `t_hot`/`t_cold` are the
/// stage-1/stage-3 bath temperatures; thermal columns take `beta`, or
/// `1 / t_hot` when `beta` is not given.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Fixed {
    pub h: Option<f64>,
    pub h_prime: Option<f64>,
    pub t_hot: Option<f64>,
    pub t_cold: Option<f64>,
    pub j: Option<f64>,
    pub beta: Option<f64>,
}

impl Fixed {
    fn slot(&mut self, axis: Axis) -> &mut Option<f64> {
        match axis {
            Axis::J => &mut self.j,
            Axis::HPrime => &mut self.h_prime,
            Axis::Beta => &mut self.beta,
            Axis::H => &mut self.h,
        }
    }

    fn with_axis(mut self, axis: Axis, x: f64) -> Self {
        *self.slot(axis) = Some(x);
        self
    }
}

/// One sub-curve of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub kind: SpinKind,
    pub fixed: Fixed,
}

/// A complete sweep description.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub series: Vec<Series>,
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub columns: Vec<Column>,
}

impl SweepSpec {
    /// Single-series sweep labelled by the substance name.
    pub fn single(
        kind: SpinKind,
        fixed: Fixed,
        axis: Axis,
        start: f64,
        stop: f64,
        count: usize,
        columns: Vec<Column>,
    ) -> Self {
        Self {
            series: vec![Series {
                label: substance_name(kind).to_string(),
                kind,
                fixed,
            }],
            axis,
            start,
            stop,
            count,
            columns,
        }
    }

    /// Grid value `k`: exact endpoints, and symmetric about zero for
    /// symmetric ranges.
    pub fn grid_point(&self, k: usize) -> f64 {
        let last = self.count - 1;
        if k == 0 {
            return self.start;
        }
        if k == last {
            return self.stop;
        }
        let (last, k) = (last as f64, k as f64);
        (self.start * (last - k) + self.stop * k) / last
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.count).map(|k| self.grid_point(k)).collect()
    }

    pub fn header(&self) -> Vec<String> {
        let mut header = vec!["series".to_string(), self.axis.name().to_string()];
        header.extend(self.columns.iter().map(|c| c.name().to_string()));
        header.push("error".to_string());
        header
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSweep(msg));
        if self.series.is_empty() {
            return bad("no series".into());
        }
        if self.columns.is_empty() {
            return bad("no output columns".into());
        }
        if !(2..=MAX_COUNT).contains(&self.count) {
            return bad(format!("count {} outside 2..={MAX_COUNT}", self.count));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return bad("range bounds must be finite".into());
        }
        if self.start == self.stop {
            return bad("range start equals stop".into());
        }
        let cycle = self.columns.iter().any(|c| c.is_cycle());
        let thermal = self.columns.iter().any(|c| !c.is_cycle());
        if cycle && self.axis == Axis::Beta {
            return bad("cycle columns are driven by T and T', not by a beta axis".into());
        }
        for s in &self.series {
            let mut fixed = s.fixed;
            if fixed.slot(self.axis).is_some() {
                return bad(format!(
                    "series `{}`: {} is both fixed and swept",
                    s.label,
                    self.axis.name()
                ));
            }
            if s.kind == SpinKind::Half {
                if let Some(c) = self.columns.iter().find(|c| c.biquartit_only()) {
                    return bad(format!("column {} requires the biquartit", c.name()));
                }
            }
            let probe = fixed.with_axis(self.axis, 0.0);
            let mut missing = Vec::new();
            if probe.h.is_none() {
                missing.push("h");
            }
            if probe.j.is_none() {
                missing.push("J");
            }
            if cycle {
                for (name, v) in [
                    ("h_prime", probe.h_prime),
                    ("T", probe.t_hot),
                    ("T_prime", probe.t_cold),
                ] {
                    if v.is_none() {
                        missing.push(name);
                    }
                }
            }
            if thermal && probe.beta.is_none() && probe.t_hot.is_none() {
                missing.push("beta or T");
            }
            if !missing.is_empty() {
                return bad(format!(
                    "series `{}` is missing {}",
                    s.label,
                    missing.join(", ")
                ));
            }
        }
        Ok(())
    }
}

pub fn substance_name(kind: SpinKind) -> &'static str {
    match kind {
        SpinKind::Half => "biqubit",
        SpinKind::ThreeHalves => "biquartit",
    }
}

pub fn parse_substance(s: &str) -> Result<SpinKind> {
    match s {
        "biquartit" => Ok(SpinKind::ThreeHalves),
        "biqubit" => Ok(SpinKind::Half),
        other => Err(Error::InvalidSweep(format!("unknown substance `{other}`"))),
    }
}

/// Formats a real so that it parses back to the same `f64`: plain decimal
/// for `1e-5 <= |x| < 1e16` (and zero), scientific otherwise.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Rectangular table of formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Raw cells of a column, optionally restricted to one series.
    pub fn cells(&self, name: &str, series: Option<&str>) -> Option<Vec<&str>> {
        let idx = self.column_index(name)?;
        Some(
            self.rows
                .iter()
                .filter(|r| series.is_none_or(|s| r[0] == s))
                .map(|r| r[idx].as_str())
                .collect(),
        )
    }

    /// Parsed numeric cells; empty cells become `None`.
    pub fn numeric(&self, name: &str, series: Option<&str>) -> Option<Vec<Option<f64>>> {
        self.cells(name, series)
            .map(|c| c.iter().map(|s| s.parse().ok()).collect())
    }

    pub fn write_to<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        let csv_err = |e: csv::Error| Error::Csv(e.to_string());
        w.write_record(&self.header).map_err(csv_err)?;
        for row in &self.rows {
            w.write_record(row).map_err(csv_err)?;
        }
        w.flush().map_err(|e| Error::Csv(e.to_string()))
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Csv(e.to_string()))
    }
}

impl fmt::Display for CsvTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv_string().map_err(|_| fmt::Error)?)
    }
}

struct Row {
    cells: Vec<String>,
    errors: Vec<String>,
}

impl Row {
    fn push(&mut self, column: Column, value: Result<String>) {
        match value {
            Ok(s) => self.cells.push(s),
            Err(e) => {
                self.cells.push(String::new());
                self.errors.push(format!("{}: {e}", column.name()));
            }
        }
    }
}

fn thermal_beta(p: &Fixed) -> Result<f64> {
    match (p.beta, p.t_hot) {
        (Some(b), _) => Ok(b),
        (None, Some(t)) => beta_from_temperature(t),
        (None, None) => Err(Error::InvalidSweep("no beta".into())),
    }
}

fn cycle_params(kind: SpinKind, p: &Fixed) -> CycleParams<f64> {
    CycleParams {
        kind,
        t_hot: p.t_hot.unwrap_or(f64::NAN),
        t_cold: p.t_cold.unwrap_or(f64::NAN),
        h: p.h.unwrap_or(f64::NAN),
        h_prime: p.h_prime.unwrap_or(f64::NAN),
        j: p.j.unwrap_or(f64::NAN),
    }
}

fn evaluate(series: &Series, axis: Axis, x: f64, columns: &[Column]) -> Vec<String> {
    let p = series.fixed.with_axis(axis, x);
    let kind = series.kind;
    let (h, j) = (p.h.unwrap_or(f64::NAN), p.j.unwrap_or(f64::NAN));
    let num = |r: Result<f64>| r.map(format_real);

    let need_cycle = columns.iter().any(|c| c.is_cycle());
    let need_thermal = columns.iter().any(|c| {
        matches!(
            c,
            Column::Entropy | Column::Energy | Column::HeatCapacity | Column::FreeEnergy
        )
    });
    let params = cycle_params(kind, &p);
    let report: Option<Result<CycleReport<f64>>> = need_cycle.then(|| run_cycle(&params));
    let beta = thermal_beta(&p);
    let thermal: Option<Result<ThermalState<f64>>> = need_thermal.then(|| {
        beta.clone()
            .and_then(|b| ThermalState::of_pair(kind, h, j, b))
    });

    let mut row = Row {
        cells: vec![series.label.clone(), format_real(x)],
        errors: Vec::new(),
    };
    for &c in columns {
        let from_report = |f: &dyn Fn(&CycleReport<f64>) -> Result<String>| -> Result<String> {
            match report.as_ref().expect("cycle report evaluated") {
                Ok(r) => f(r),
                Err(e) => Err(e.clone()),
            }
        };
        let from_thermal = |f: &dyn Fn(&ThermalState<f64>) -> Result<f64>| -> Result<String> {
            match thermal.as_ref().expect("thermal state evaluated") {
                Ok(s) => f(s).map(format_real),
                Err(e) => Err(e.clone()),
            }
        };
        let value = match c {
            Column::Q1 => from_report(&|r| Ok(format_real(r.q1))),
            Column::W2 => from_report(&|r| Ok(format_real(r.w2))),
            Column::Q3 => from_report(&|r| Ok(format_real(r.q3))),
            Column::W4 => from_report(&|r| Ok(format_real(r.w4))),
            Column::M => from_report(&|r| r.m.map(format_real).ok_or(Error::RequiresBiquartit)),
            Column::N => from_report(&|r| r.n.map(format_real).ok_or(Error::RequiresBiquartit)),
            Column::Eta => from_report(&|r| Ok(r.eta.map(format_real).unwrap_or_default())),
            Column::Regime => from_report(&|r| Ok(r.regime.label().to_string())),
            Column::WorkExtracted => from_report(&|r| Ok(format_real(r.extracted_work()))),
            Column::LocalQ1 => from_report(&|r| local_split(r, &params).map(|s| format_real(s.q1))),
            Column::LocalQ2 => from_report(&|r| local_split(r, &params).map(|s| format_real(s.q2))),
            Column::LocalW => from_report(&|r| local_split(r, &params).map(|s| format_real(s.w))),
            Column::MSmHot => {
                num(beta_from_temperature(params.t_hot).and_then(|b| gibbs_m_sm(kind, h, j, b)))
            }
            Column::MSmCold => num(beta_from_temperature(params.t_cold)
                .and_then(|b| gibbs_m_sm(kind, params.h_prime, j, b))),
            Column::Entropy => from_thermal(&|s| Ok(s.entropy())),
            Column::Energy => from_thermal(&|s| Ok(s.internal_energy())),
            Column::HeatCapacity => from_thermal(&|s| Ok(s.heat_capacity())),
            Column::FreeEnergy => from_thermal(&|s| s.free_energy()),
            Column::MSm => num(beta.clone().and_then(|b| gibbs_m_sm(kind, h, j, b))),
            Column::BetaLoc => num(beta.clone().and_then(|b| local_beta(h, j, b, None))),
            Column::BetaMloc => num(beta
                .clone()
                .and_then(|b| LocalState::of_gibbs(h, j, b))
                .and_then(|ls| ls.spectroscopic_beta())),
        };
        row.push(c, value);
    }
    let mut cells = row.cells;
    cells.push(row.errors.join("; "));
    cells
}

/// Evaluates every series on the grid; rows are series-major, grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<CsvTable> {
    spec.validate()?;
    let grid = spec.grid();
    let points: Vec<(&Series, f64)> = spec
        .series
        .iter()
        .flat_map(|s| grid.iter().map(move |&x| (s, x)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(s, x)| evaluate(s, spec.axis, x, &spec.columns))
        .collect();
    Ok(CsvTable {
        header: spec.header(),
        rows,
    })
}

/// `Ok` or the reason an expectation was missed.
pub type CheckOutcome = std::result::Result<(), String>;

/// A quantitative expectation attached to a figure preset.
#[derive(Debug, Clone, Copy)]
pub struct Expectation {
    pub description: &'static str,
    pub check: fn(&CsvTable) -> CheckOutcome,
}

/// A named sweep reproducing one figure.
#[derive(Debug, Clone)]
pub struct ScenarioPreset {
    pub name: &'static str,
    pub caption: &'static str,
    pub spec: SweepSpec,
    pub expected: Vec<Expectation>,
}

impl ScenarioPreset {
    /// Runs the sweep and every attached expectation.
    pub fn run(&self) -> Result<(CsvTable, Vec<(Expectation, CheckOutcome)>)> {
        let table = run_sweep(&self.spec)?;
        let checks = self
            .expected
            .iter()
            .map(|e| (*e, (e.check)(&table)))
            .collect();
        Ok((table, checks))
    }
}

pub const PRESET_NAMES: [&str; 10] = [
    "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11",
];

fn cycle_fixed(t_hot: f64, t_cold: f64, h: f64, h_prime: f64) -> Fixed {
    Fixed {
        h: Some(h),
        h_prime: Some(h_prime),
        t_hot: Some(t_hot),
        t_cold: Some(t_cold),
        ..Fixed::default()
    }
}

fn both_substances(fixed: Fixed) -> Vec<Series> {
    [SpinKind::ThreeHalves, SpinKind::Half]
        .into_iter()
        .map(|kind| Series {
            label: substance_name(kind).to_string(),
            kind,
            fixed,
        })
        .collect()
}

fn coupling_series(kind: SpinKind, base: Fixed, couplings: &[f64]) -> Vec<Series> {
    couplings
        .iter()
        .map(|&j| Series {
            label: format!("J={j}"),
            kind,
            fixed: Fixed { j: Some(j), ..base },
        })
        .collect()
}

const CYCLE_COLUMNS: [Column; 7] = [
    Column::Q1,
    Column::W2,
    Column::Q3,
    Column::W4,
    Column::WorkExtracted,
    Column::Eta,
    Column::Regime,
];

/// `(axis value, value)` pairs of a numeric column within one series.
pub fn series_points(table: &CsvTable, axis: &str, column: &str, series: &str) -> Vec<(f64, f64)> {
    let xs = table.numeric(axis, Some(series)).unwrap_or_default();
    let ys = table.numeric(column, Some(series)).unwrap_or_default();
    xs.into_iter()
        .zip(ys)
        .filter_map(|(x, y)| Some((x?, y?)))
        .collect()
}

/// `(axis value, eta)` of the heat-engine rows of one series: the
/// heat-to-work efficiencies, excluding the unit work-to-heat ratios.
pub fn engine_efficiency(table: &CsvTable, axis: &str, series: &str) -> Vec<(f64, f64)> {
    let xs = table.numeric(axis, Some(series)).unwrap_or_default();
    let eta = table.numeric("eta", Some(series)).unwrap_or_default();
    let labels = table.cells("regime", Some(series)).unwrap_or_default();
    xs.into_iter()
        .zip(eta)
        .zip(labels)
        .filter(|(_, label)| *label == crate::otto::Regime::HeatEngine.label())
        .filter_map(|((x, y), _)| Some((x?, y?)))
        .collect()
}

/// Point of largest value, if any.
pub fn argmax(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    points.iter().copied().max_by(|a, b| a.1.total_cmp(&b.1))
}

/// Axis values where the regime label changes within a series, as the
/// midpoint of the two grid points around the switch, with the new label.
pub fn regime_transitions(
    table: &CsvTable,
    axis: &str,
    series: &str,
) -> Vec<(f64, String, String)> {
    let xs = table.numeric(axis, Some(series)).unwrap_or_default();
    let labels = table.cells("regime", Some(series)).unwrap_or_default();
    let mut out = Vec::new();
    for k in 1..labels.len() {
        if labels[k] != labels[k - 1] {
            if let (Some(a), Some(b)) = (xs[k - 1], xs[k]) {
                out.push((
                    0.5 * (a + b),
                    labels[k - 1].to_string(),
                    labels[k].to_string(),
                ));
            }
        }
    }
    out
}

fn check_fig2(t: &CsvTable) -> CheckOutcome {
    let worst = |col: &str, odd: bool| {
        let pts = series_points(t, "beta", col, "J=0");
        let n = pts.len();
        (0..n / 2)
            .map(|k| {
                let (a, b) = (pts[k].1, pts[n - 1 - k].1);
                if odd {
                    (a + b).abs()
                } else {
                    (a - b).abs()
                }
            })
            .fold(0.0, f64::max)
    };
    let r = worst("S", false)
        .max(worst("C", false))
        .max(worst("U", true));
    if r <= 1e-10 {
        Ok(())
    } else {
        Err(format!("worst symmetry residual {r:e}"))
    }
}

fn check_fig7(t: &CsvTable) -> CheckOutcome {
    let (j, eta) = argmax(&series_points(t, "J", "eta", "biquartit")).ok_or("no efficiency")?;
    if (eta - 0.999).abs() <= 1e-3 && (j + 0.11).abs() <= 0.02 {
        Ok(())
    } else {
        Err(format!("max eta {eta} at J = {j}"))
    }
}

fn check_fig8(t: &CsvTable) -> CheckOutcome {
    let pts = engine_efficiency(t, "J", "biquartit");
    let (j, eta) = argmax(&pts).ok_or("no engine rows")?;
    let all = pts
        .iter()
        .chain(engine_efficiency(t, "J", "biqubit").iter())
        .map(|p| p.1)
        .fold(f64::MIN, f64::max);
    if eta >= 0.75 && j > 0.0 && all <= 0.9 + 1e-9 {
        Ok(())
    } else {
        Err(format!(
            "biquartit max eta {eta} at J = {j}; overall max {all}"
        ))
    }
}

fn check_fig11(t: &CsvTable) -> CheckOutcome {
    let tr = regime_transitions(t, "h_prime", "J=0");
    let step = 1.4 / 999.0;
    let at = |from: &str, to: &str, x: f64| {
        tr.iter()
            .any(|(h, a, b)| a == from && b == to && (h - x).abs() <= step)
    };
    if tr.len() == 2 && at("Refrigerator", "HeatEngine", 0.5) && at("HeatEngine", "Heater", 1.0) {
        Ok(())
    } else {
        Err(format!("transitions {tr:?}"))
    }
}

/// Looks up a figure preset by name (`fig2` … `fig11`).
pub fn figure_preset(name: &str) -> Result<ScenarioPreset> {
    let thermal_base = |h: f64| Fixed {
        h: Some(h),
        ..Fixed::default()
    };
    let preset = match name {
        "fig2" => ScenarioPreset {
            name: "fig2",
            caption:
                "U, S, C and F versus beta at h = 1, J = 0.1 (J = 0 for the symmetric reference)",
            spec: SweepSpec {
                series: coupling_series(SpinKind::ThreeHalves, thermal_base(1.0), &[0.1, 0.0]),
                axis: Axis::Beta,
                start: -5.0,
                stop: 5.0,
                count: 200,
                columns: vec![
                    Column::Energy,
                    Column::Entropy,
                    Column::HeatCapacity,
                    Column::FreeEnergy,
                ],
            },
            expected: vec![Expectation {
                description: "J = 0: S, C even and U odd in beta",
                check: check_fig2,
            }],
        },
        "fig3" => ScenarioPreset {
            name: "fig3",
            caption: "heat capacity and m_SM along beta at h = 1, J = 0.1 and 0.4",
            spec: SweepSpec {
                series: coupling_series(SpinKind::ThreeHalves, thermal_base(1.0), &[0.1, 0.4]),
                axis: Axis::Beta,
                start: -5.0,
                stop: 5.0,
                count: 200,
                columns: vec![Column::HeatCapacity, Column::MSm],
            },
            expected: Vec::new(),
        },
        "fig4" => ScenarioPreset {
            name: "fig4",
            caption: "local inverse temperatures versus beta at h = 2, J = 0, 0.1, 0.2",
            spec: SweepSpec {
                series: coupling_series(SpinKind::ThreeHalves, thermal_base(2.0), &[0.0, 0.1, 0.2]),
                axis: Axis::Beta,
                start: -5.0,
                stop: 5.0,
                count: 200,
                columns: vec![Column::BetaLoc, Column::BetaMloc],
            },
            expected: Vec::new(),
        },
        "fig5" => ScenarioPreset {
            name: "fig5",
            caption: "heat and work versus J at T = -1, T' = -3, h = 1, h' = -1",
            spec: SweepSpec {
                series: both_substances(cycle_fixed(-1.0, -3.0, 1.0, -1.0)),
                axis: Axis::J,
                start: -1.0,
                stop: 1.0,
                count: 201,
                columns: CYCLE_COLUMNS.to_vec(),
            },
            expected: Vec::new(),
        },
        "fig6" | "fig7" => ScenarioPreset {
            name: if name == "fig6" { "fig6" } else { "fig7" },
            caption: "heat, work and efficiency versus J at T = -1, T' = 2, h = 4, h' = 0.155",
            spec: SweepSpec {
                series: both_substances(cycle_fixed(-1.0, 2.0, 4.0, 0.155)),
                axis: Axis::J,
                start: -0.5,
                stop: 0.0,
                count: 501,
                columns: CYCLE_COLUMNS.to_vec(),
            },
            expected: if name == "fig7" {
                vec![Expectation {
                    description: "biquartit max eta 0.999 +- 0.001 at J = -0.11 +- 0.02",
                    check: check_fig7,
                }]
            } else {
                Vec::new()
            },
        },
        "fig8" => ScenarioPreset {
            name: "fig8",
            caption: "efficiency versus J at T = 2.5, T' = 0.25, h = 16, h' = 12",
            spec: SweepSpec {
                series: both_substances(cycle_fixed(2.5, 0.25, 16.0, 12.0)),
                axis: Axis::J,
                start: 0.0,
                stop: 4.0,
                count: 401,
                columns: CYCLE_COLUMNS.to_vec(),
            },
            expected: vec![Expectation {
                description: "biquartit engine eta >= 0.75 for some J > 0, all engine eta <= 0.9",
                check: check_fig8,
            }],
        },
        "fig9" => ScenarioPreset {
            name: "fig9",
            caption: "heat and work versus J at T = 2, T' = 1, h = 4, h' = -1",
            spec: SweepSpec {
                series: both_substances(cycle_fixed(2.0, 1.0, 4.0, -1.0)),
                axis: Axis::J,
                start: -1.0,
                stop: 1.0,
                count: 201,
                columns: CYCLE_COLUMNS.to_vec(),
            },
            expected: Vec::new(),
        },
        "fig10" => {
            let cols = vec![Column::W2, Column::W4, Column::MSmHot, Column::MSmCold];
            let mut series = Vec::new();
            for (tag, fixed) in [
                ("fig5", cycle_fixed(-1.0, -3.0, 1.0, -1.0)),
                ("fig9", cycle_fixed(2.0, 1.0, 4.0, -1.0)),
            ] {
                series.push(Series {
                    label: format!("biquartit,{tag}"),
                    kind: SpinKind::ThreeHalves,
                    fixed,
                });
            }
            ScenarioPreset {
                name: "fig10",
                caption: "work W2, W4 against m_SM with the fig5 and fig9 parameters",
                spec: SweepSpec {
                    series,
                    axis: Axis::J,
                    start: -1.0,
                    stop: 1.0,
                    count: 201,
                    columns: cols,
                },
                expected: Vec::new(),
            }
        }
        "fig11" => ScenarioPreset {
            name: "fig11",
            caption: "work and regime versus h' at h = 1, T = 1, T' = 0.5 for J = 0, 0.2, -0.2",
            spec: SweepSpec {
                series: coupling_series(
                    SpinKind::ThreeHalves,
                    Fixed {
                        h: Some(1.0),
                        t_hot: Some(1.0),
                        t_cold: Some(0.5),
                        ..Fixed::default()
                    },
                    &[0.0, 0.2, -0.2],
                ),
                axis: Axis::HPrime,
                start: 0.1,
                stop: 1.5,
                count: 1000,
                columns: vec![
                    Column::Q1,
                    Column::W2,
                    Column::Q3,
                    Column::W4,
                    Column::WorkExtracted,
                    Column::Regime,
                ],
            },
            expected: vec![Expectation {
                description:
                    "J = 0: Refrigerator -> HeatEngine at h' = 0.5, HeatEngine -> Heater at h' = 1",
                check: check_fig11,
            }],
        },
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(preset)
}
