use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use qudit_otto::gibbs::beta_from_temperature;
use qudit_otto::otto::local_split;
use qudit_otto::sweep::{self, format_real, Axis, Column, CsvTable, Fixed, SweepSpec};
use qudit_otto::verify::verify_all;
use qudit_otto::{
    gibbs_m_sm, local_beta, run_cycle, CycleParams, LocalState, SpinKind, ThermalState,
};

const FORMAT_HELP: &str = "\
Output is CSV: comma-delimited, LF line endings, one header row, '.' as the
decimal separator. Reals are printed in shortest round-trip form (they parse
back to the identical f64): plain decimal for 1e-5 <= |x| < 1e16 and for 0,
scientific notation such as 1.5e-7 otherwise. Every table ends with an
`error` column; a quantity that cannot be evaluated leaves its cell empty and
the reason appears there.

Exit status: 0 success, 1 verification failure, 2 usage error.
RAYON_NUM_THREADS sets the number of sweep worker threads.";

#[derive(Parser, Debug)]
#[command(name = "qudit-otto", version, about = "Thermodynamics and Otto cycles of coupled spin pairs", after_help = FORMAT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gibbs-state potentials U, S, C, F and m_SM at one (h, J, beta).
    Thermo(PointArgs),
    /// Reduced single-quartit state and local inverse temperatures (biquartit).
    Local(PointArgs),
    /// One Otto cycle: heats, works, decomposition, efficiency, regime.
    Cycle(CycleArgs),
    /// Linear sweep of one parameter.
    Sweep(SweepArgs),
    /// Data behind one figure (fig2 ... fig11).
    Figure(FigureArgs),
    /// Runs the seeded invariant suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Working substance: biquartit (two spin-3/2) or biqubit (two spin-1/2).
    #[arg(long, default_value = "biquartit", value_parser = ["biquartit", "biqubit"])]
    substance: String,
    /// Write CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_negative_numbers = true)]
    h: f64,
    #[arg(long = "J", allow_negative_numbers = true)]
    j: f64,
    /// Inverse temperature (any sign).
    #[arg(
        long,
        allow_negative_numbers = true,
        conflicts_with = "t",
        required_unless_present = "t"
    )]
    beta: Option<f64>,
    /// Temperature; beta = 1/T.
    #[arg(long = "T", id = "t", allow_negative_numbers = true)]
    t: Option<f64>,
}

#[derive(Args, Debug)]
struct CycleArgs {
    #[command(flatten)]
    common: Common,
    /// Bath temperature of the first isochore.
    #[arg(long = "T", allow_negative_numbers = true)]
    t: f64,
    /// Bath temperature of the second isochore.
    #[arg(long = "T-prime", allow_negative_numbers = true)]
    t_prime: f64,
    #[arg(long, allow_negative_numbers = true)]
    h: f64,
    #[arg(long = "h-prime", allow_negative_numbers = true)]
    h_prime: f64,
    #[arg(long = "J", allow_negative_numbers = true)]
    j: f64,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Swept parameter: J, h_prime, beta or h.
    #[arg(long)]
    axis: String,
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    #[arg(long, default_value_t = 201)]
    count: usize,
    #[arg(long, allow_negative_numbers = true)]
    h: Option<f64>,
    #[arg(long = "h-prime", allow_negative_numbers = true)]
    h_prime: Option<f64>,
    #[arg(long = "T", allow_negative_numbers = true)]
    t: Option<f64>,
    #[arg(long = "T-prime", allow_negative_numbers = true)]
    t_prime: Option<f64>,
    #[arg(long = "J", allow_negative_numbers = true)]
    j: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Comma-separated output columns, from: Q1 W2 Q3 W4 m n eta regime W_ext
    /// S U C F m_SM m_SM_hot m_SM_cold beta_loc beta_Mloc q1 q2 w.
    /// Default: cycle columns when --T-prime is given, else S,U,C,F.
    #[arg(long, value_delimiter = ',')]
    columns: Vec<String>,
}

#[derive(Args, Debug)]
struct FigureArgs {
    /// fig2, fig3, ..., fig11.
    name: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

enum Failure {
    Usage(anyhow::Error),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<qudit_otto::Error> for Failure {
    fn from(e: qudit_otto::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn substance(common: &Common) -> anyhow::Result<SpinKind> {
    Ok(sweep::parse_substance(&common.substance)?)
}

fn emit(table: &CsvTable, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            table.write_to(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            table.write_to(stdout.lock())?;
        }
    }
    Ok(())
}

fn cell<E: std::fmt::Display>(r: Result<f64, E>, name: &str, errors: &mut Vec<String>) -> String {
    match r {
        Ok(x) => format_real(x),
        Err(e) => {
            errors.push(format!("{name}: {e}"));
            String::new()
        }
    }
}

fn point_beta(args: &PointArgs) -> anyhow::Result<f64> {
    match (args.beta, args.t) {
        (Some(b), _) => Ok(b),
        (None, Some(t)) => Ok(beta_from_temperature(t)?),
        (None, None) => bail!("one of --beta or --T is required"),
    }
}

fn thermo(args: &PointArgs) -> anyhow::Result<CsvTable> {
    let kind = substance(&args.common)?;
    let beta = point_beta(args)?;
    let state = ThermalState::of_pair(kind, args.h, args.j, beta)?;
    let mut errors = Vec::new();
    let mut row = vec![
        args.common.substance.clone(),
        format_real(args.h),
        format_real(args.j),
        format_real(beta),
        format_real(state.log_z),
        format_real(state.internal_energy()),
        format_real(state.entropy()),
        format_real(state.heat_capacity()),
    ];
    row.push(cell(state.free_energy(), "F", &mut errors));
    row.push(cell(
        gibbs_m_sm(kind, args.h, args.j, beta),
        "m_SM",
        &mut errors,
    ));
    row.push(errors.join("; "));
    Ok(CsvTable {
        header: [
            "substance",
            "h",
            "J",
            "beta",
            "ln_Z",
            "U",
            "S",
            "C",
            "F",
            "m_SM",
            "error",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![row],
    })
}

fn local(args: &PointArgs) -> anyhow::Result<CsvTable> {
    if substance(&args.common)? != SpinKind::ThreeHalves {
        bail!("local states are defined for the biquartit only");
    }
    let beta = point_beta(args)?;
    let ls = LocalState::of_gibbs(args.h, args.j, beta)?;
    let mut errors = Vec::new();
    let mut row = vec![format_real(args.h), format_real(args.j), format_real(beta)];
    row.extend(ls.populations.iter().map(|&p| format_real(p)));
    row.push(format_real(ls.entropy()));
    row.push(format_real(ls.internal_energy()));
    row.push(cell(
        local_beta(args.h, args.j, beta, None),
        "beta_loc",
        &mut errors,
    ));
    row.push(cell(ls.spectroscopic_beta(), "beta_Mloc", &mut errors));
    row.push(errors.join("; "));
    Ok(CsvTable {
        header: [
            "h",
            "J",
            "beta",
            "pi1",
            "pi2",
            "pi3",
            "pi4",
            "s",
            "u",
            "beta_loc",
            "beta_Mloc",
            "error",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![row],
    })
}

fn cycle(args: &CycleArgs) -> anyhow::Result<CsvTable> {
    let kind = substance(&args.common)?;
    let params = CycleParams {
        kind,
        t_hot: args.t,
        t_cold: args.t_prime,
        h: args.h,
        h_prime: args.h_prime,
        j: args.j,
    };
    let r = run_cycle(&params)?;
    let opt = |x: Option<f64>| x.map(format_real).unwrap_or_default();
    let split = local_split(&r, &params).ok();
    let mut row = vec![
        args.common.substance.clone(),
        format_real(r.q1),
        format_real(r.w2),
        format_real(r.q3),
        format_real(r.w4),
        format_real(r.extracted_work()),
        opt(r.m),
        opt(r.n),
        opt(r.eta),
        format_real(r.eta0),
        r.regime.label().to_string(),
    ];
    row.extend([
        opt(split.map(|s| s.q1)),
        opt(split.map(|s| s.q2)),
        opt(split.map(|s| s.w)),
    ]);
    row.push(String::new());
    Ok(CsvTable {
        header: [
            "substance",
            "Q1",
            "W2",
            "Q3",
            "W4",
            "W_ext",
            "m",
            "n",
            "eta",
            "eta0",
            "regime",
            "q1",
            "q2",
            "w",
            "error",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![row],
    })
}

fn sweep_spec(args: &SweepArgs) -> anyhow::Result<SweepSpec> {
    let kind = substance(&args.common)?;
    let axis: Axis = args.axis.parse()?;
    let columns: Vec<Column> = if args.columns.is_empty() {
        let mut c = vec![Column::Q1, Column::W2, Column::Q3, Column::W4];
        if args.t_prime.is_some() {
            if kind == SpinKind::ThreeHalves {
                c.extend([Column::M, Column::N]);
            }
            c.extend([Column::Eta, Column::Regime]);
            c
        } else {
            vec![
                Column::Entropy,
                Column::Energy,
                Column::HeatCapacity,
                Column::FreeEnergy,
            ]
        }
    } else {
        args.columns
            .iter()
            .map(|s| s.trim().parse())
            .collect::<Result<_, _>>()?
    };
    let fixed = Fixed {
        h: args.h,
        h_prime: args.h_prime,
        t_hot: args.t,
        t_cold: args.t_prime,
        j: args.j,
        beta: args.beta,
    };
    let spec = SweepSpec::single(kind, fixed, axis, args.from, args.to, args.count, columns);
    spec.validate()?;
    Ok(spec)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Thermo(a) => emit(&thermo(&a)?, a.common.out.as_ref())?,
        Command::Local(a) => emit(&local(&a)?, a.common.out.as_ref())?,
        Command::Cycle(a) => emit(&cycle(&a)?, a.common.out.as_ref())?,
        Command::Sweep(a) => {
            let spec = sweep_spec(&a)?;
            emit(&sweep::run_sweep(&spec)?, a.common.out.as_ref())?;
        }
        Command::Figure(a) => {
            let preset = sweep::figure_preset(&a.name)?;
            let (table, checks) = preset.run()?;
            emit(&table, a.out.as_ref())?;
            eprintln!("{}: {}", preset.name, preset.caption);
            let mut failed = Vec::new();
            for (exp, outcome) in checks {
                match outcome {
                    Ok(()) => eprintln!("PASS {}", exp.description),
                    Err(why) => {
                        eprintln!("FAIL {}: {why}", exp.description);
                        failed.push(exp.description);
                    }
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Verification(format!(
                    "{} expectation(s) failed",
                    failed.len()
                )));
            }
        }
        Command::Verify(a) => {
            let report = verify_all(a.seed);
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Verification("invariant suites failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
