use std::fs;
use std::process::{Command, Output};

use qdot_eur::sweep::CSV_HEADER;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdot-eur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn field(stdout: &str, name: &str) -> f64 {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{name} = ")))
        .unwrap_or_else(|| panic!("no {name} in output:\n{stdout}"))
        .parse()
        .unwrap()
}

#[test]
fn point_reports_golden_concurrence() {
    let out = run(&["point", "--t", "1", "--k0", "10", "--b0", "1", "--verify"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!((field(&stdout, "concurrence") - 0.564428579418).abs() < 1e-10);
    let (b, a, l) = (
        field(&stdout, "berta_bound"),
        field(&stdout, "adabi_bound"),
        field(&stdout, "lhs"),
    );
    assert!(b <= a + 1e-9 && a <= l + 1e-9);
}

#[test]
fn point_at_zero_temperature() {
    let out = run(&["point", "--t", "0", "--k0", "10", "--b0", "1"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!((field(&stdout, "concurrence") - 1.0).abs() < 1e-9);
    assert!((field(&stdout, "discord") - 1.0).abs() < 1e-9);
    assert!(field(&stdout, "lhs").abs() < 1e-9);
}

#[test]
fn sweep_writes_csv_and_plot_script() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig1a.csv");
    let script = dir.path().join("fig1a.gp");
    let args = [
        "sweep",
        "--param",
        "temperature",
        "--start",
        "0",
        "--stop",
        "5",
        "--steps",
        "101",
        "--k0",
        "10",
        "--b0",
        "1",
        "--verify",
        "--out",
        csv.to_str().unwrap(),
        "--plot-script",
        script.to_str().unwrap(),
    ];
    let out = run(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 102);
    assert_eq!(lines[0], CSV_HEADER);
    assert!(!text.contains('\r'));
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 8));

    let gp = fs::read_to_string(&script).unwrap();
    assert!(gp.contains("data = 'fig1a.csv'"));

    // deterministic output
    let first = text.clone();
    assert!(run(&args).status.success());
    assert_eq!(fs::read_to_string(&csv).unwrap(), first);
}

#[test]
fn sweep_to_stdout_matches_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("k0.csv");
    let base = ["sweep", "--param", "k0", "--start", "0", "--stop", "20", "--steps", "11", "--t", "1", "--b0", "1"];
    let stdout = run(&base).stdout;
    let mut with_out = base.to_vec();
    with_out.extend(["--out", csv.to_str().unwrap()]);
    assert!(run(&with_out).status.success());
    assert_eq!(fs::read(&csv).unwrap(), stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["point", "--t", "1", "--k0", "10"],
        &["point", "--t", "-1", "--k0", "10", "--b0", "1"],
        &["sweep", "--param", "gamma", "--start", "0", "--stop", "1", "--steps", "5", "--t", "1", "--k0", "1", "--b0", "1"],
        &["sweep", "--param", "k0", "--start", "2", "--stop", "1", "--steps", "5", "--t", "1", "--b0", "1"],
        &["sweep", "--param", "k0", "--start", "0", "--stop", "1", "--steps", "1", "--t", "1", "--b0", "1"],
        &["sweep", "--param", "k0", "--start", "0", "--stop", "1", "--steps", "5", "--b0", "1"],
        &["sweep", "--param", "temperature", "--start", "-1", "--stop", "1", "--steps", "5", "--k0", "1", "--b0", "1"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "args {args:?}");
    }
}
