use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qudit-otto"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cycle_prints_one_row() {
    let o = run(&[
        "cycle",
        "--T",
        "1",
        "--T-prime",
        "0.5",
        "--h",
        "1",
        "--h-prime",
        "0.7",
        "--J",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("substance,Q1,W2,Q3,W4,"));
    assert!(lines[1].contains(",HeatEngine,"));
    let header: Vec<&str> = lines[0].split(',').collect();
    let row: Vec<&str> = lines[1].split(',').collect();
    let eta: f64 = row[header.iter().position(|h| *h == "eta").unwrap()]
        .parse()
        .unwrap();
    assert!((eta - 0.3).abs() < 1e-12);
}

#[test]
fn negative_values_are_accepted() {
    let o = run(&[
        "cycle",
        "--T",
        "-1",
        "--T-prime",
        "-3",
        "--h",
        "1",
        "--h-prime",
        "-1",
        "--J",
        "0.5",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("DoubleHeatInput"));
}

#[test]
fn biqubit_cycle_leaves_decomposition_empty() {
    let o = run(&[
        "cycle",
        "--substance",
        "biqubit",
        "--T",
        "1",
        "--T-prime",
        "0.5",
        "--h",
        "1",
        "--h-prime",
        "0.7",
        "--J",
        "0.1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "biqubit");
    assert_eq!(row[6], "");
    assert_eq!(row[7], "");
}

#[test]
fn thermo_at_infinite_temperature_marks_free_energy() {
    let o = run(&["thermo", "--h", "1", "--J", "0.1", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert!(row.contains(",,0,F: "), "{row}");
}

#[test]
fn thermo_accepts_temperature() {
    let a = stdout(&run(&["thermo", "--h", "1", "--J", "0.1", "--T", "0.5"]));
    let b = stdout(&run(&["thermo", "--h", "1", "--J", "0.1", "--beta", "2"]));
    assert_eq!(a, b);
}

#[test]
fn local_requires_biquartit() {
    let o = run(&[
        "local",
        "--substance",
        "biqubit",
        "--h",
        "1",
        "--J",
        "0.1",
        "--beta",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["local", "--h", "2", "--J", "0", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("h,J,beta,pi1,pi2,pi3,pi4,s,u,beta_loc,beta_Mloc,error\n"));
}

#[test]
fn sweep_row_count_and_default_count() {
    let o = run(&[
        "sweep", "--axis", "beta", "--from", "-2", "--to", "2", "--h", "1", "--J", "0.1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 202);
    assert!(text.starts_with("series,beta,S,U,C,F,error\n"));
    let zero_row = text
        .lines()
        .find(|l| l.starts_with("biquartit,0,"))
        .unwrap();
    assert!(zero_row.ends_with("free energy is undefined at infinite temperature (beta = 0)"));
}

#[test]
fn sweep_is_byte_identical_across_runs_and_threads() {
    let args = [
        "sweep",
        "--axis",
        "J",
        "--from",
        "-0.5",
        "--to",
        "0",
        "--count",
        "301",
        "--T",
        "-1",
        "--T-prime",
        "2",
        "--h",
        "4",
        "--h-prime",
        "0.155",
    ];
    let one = bin()
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    let four = bin()
        .args(args)
        .env("RAYON_NUM_THREADS", "4")
        .output()
        .unwrap();
    let again = run(&args);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, again.stdout);
    assert!(!one.stdout.contains(&b'\r'));
}

#[test]
fn out_flag_writes_same_bytes() {
    let dir = std::env::temp_dir().join(format!("qudit-otto-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig11.csv");
    let o = run(&["figure", "fig11", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    let piped = run(&["figure", "fig11"]);
    assert_eq!(written, piped.stdout);
    assert!(String::from_utf8_lossy(&piped.stderr).contains("PASS"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["figure", "fig1"],
        vec![
            "sweep", "--axis", "J", "--from", "0", "--to", "0", "--h", "1", "--beta", "1",
        ],
        vec![
            "sweep", "--axis", "J", "--from", "0", "--to", "1", "--count", "1", "--h", "1",
            "--beta", "1",
        ],
        vec![
            "sweep", "--axis", "J", "--from", "0", "--to", "1", "--J", "1", "--h", "1", "--beta",
            "1",
        ],
        vec!["sweep", "--axis", "spin", "--from", "0", "--to", "1"],
        vec![
            "cycle",
            "--T",
            "0",
            "--T-prime",
            "1",
            "--h",
            "1",
            "--h-prime",
            "1",
            "--J",
            "0",
        ],
        vec!["thermo", "--h", "1", "--J", "0"],
        vec!["nonsense"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_passes() {
    let o = run(&["verify", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));
}

#[test]
fn help_documents_format_and_exit_codes() {
    let text = stdout(&run(&["--help"]));
    assert!(text.contains("round-trip"));
    assert!(text.contains("Exit status"));
    for sub in ["thermo", "local", "cycle", "sweep", "figure", "verify"] {
        assert!(text.contains(sub));
    }
}
