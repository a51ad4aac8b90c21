use std::f64::consts::FRAC_PI_4;
use std::fs;
use std::process::{Command, Output};

use gauss_shannon::cli::parse_real;
use gauss_shannon::harness::parse_csv;
use gauss_shannon::{rate_fit, repro_table, Column, ExperimentConfig};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gauss-shannon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn repro_table_prints_the_reference_rows() {
    let o = bin(&[
        "repro-table",
        "--delta",
        "pi/4",
        "--eps",
        "1/7",
        "--n-list",
        "7:2:25",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0], "n,lower,measured,upper");
    assert!(lines[1].starts_with("7,7.5816e-07,1.61"));
    assert!(lines[1].ends_with(",1.3637e-04"));
    assert!(lines[10].starts_with("25,1.3193e-16,"));
    assert!(lines[10].ends_with(",3.5451e-14"));
}

#[test]
fn bounds_rejects_an_inadmissible_window() {
    let o = bin(&[
        "bounds", "--delta", "pi/4", "--eps", "1/7", "--n", "5", "--opt-r",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn bounds_prints_one_quantity_per_line() {
    let o = bin(&["bounds", "--delta", "pi/4", "--eps", "1/7", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
    assert_eq!(keys, ["lower", "upper", "c", "n_min"]);
    assert!(text.contains("lower=7.5816"));
    assert!(text.contains("upper=1.3637"));
    assert!(text.ends_with("n_min=7\n"));
}

#[test]
fn scan_c_is_positive_on_the_documented_range() {
    let o = bin(&[
        "scan-c",
        "--eps",
        "0.05",
        "--delta-min",
        "0.0157",
        "--delta-max",
        "1.539",
        "--steps",
        "200",
        "--r-rule",
        "fixed-min",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delta,c"));
    let cs: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(cs.len(), 200);
    assert!(cs.iter().all(|&c| c > 0.0));
}

#[test]
fn reconstruct_matches_the_library() {
    let o = bin(&[
        "reconstruct",
        "--delta",
        "pi/4",
        "--n",
        "7",
        "--opt-r",
        "--at",
        "0.5,0.25",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines().skip(1);
    let v: f64 = lines
        .next()
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!((v - 0.5).abs() < 1e-4);
    assert_eq!(lines.count(), 1);
}

#[test]
fn reconstruct_reads_sample_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("impulse.txt");
    fs::write(&path, "# unit impulse\n-1,0\n0,1\n1,0\n2,0\n").unwrap();
    let o = bin(&[
        "reconstruct",
        "--delta",
        "pi/4",
        "--samples",
        path.to_str().unwrap(),
        "--r",
        "1",
        "--at",
        "0,0.5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let vals: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(vals[0], 1.0);
    assert!((vals[1] - 0.561815).abs() < 1e-6);
}

#[test]
fn file_errors_exit_with_four() {
    let o = bin(&[
        "reconstruct",
        "--delta",
        "pi/4",
        "--samples",
        "/nonexistent/s.txt",
        "--at",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(4));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0,abc\n").unwrap();
    let o = bin(&[
        "reconstruct",
        "--delta",
        "pi/4",
        "--samples",
        bad.to_str().unwrap(),
        "--at",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(4));

    let o = bin(&[
        "rate-fit",
        "--csv",
        "/nonexistent/t.csv",
        "--column",
        "measured",
        "--n-from",
        "15",
        "--n-to",
        "25",
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(bin(&[]).status.code(), Some(2));
    assert_eq!(bin(&["bounds", "--delta", "pi/4"]).status.code(), Some(2));
    assert_eq!(
        bin(&["bounds", "--delta", "x", "--eps", "1/7", "--n", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["bounds", "--delta", "4", "--eps", "1/7", "--n", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["bounds", "--delta", "pi/4", "--eps", "1/7", "--n", "7", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn rate_fit_round_trip_matches_in_process() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = bin(&[
        "repro-table",
        "--delta",
        "pi/4",
        "--eps",
        "1/7",
        "--n-list",
        "7:2:25",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let o = bin(&[
        "rate-fit",
        "--csv",
        path.to_str().unwrap(),
        "--column",
        "measured",
        "--n-from",
        "15",
        "--n-to",
        "25",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let from_cli: f64 = stdout(&o).trim().parse().unwrap();

    let rows: Vec<_> = repro_table(&ExperimentConfig::table1())
        .unwrap()
        .into_iter()
        .filter(|r| r.n >= 15)
        .collect();
    let in_process = rate_fit(&rows, Column::Measured).unwrap();
    // The file carries five significant digits.
    assert!(
        (from_cli - in_process).abs() < 1e-4,
        "{from_cli} vs {in_process}"
    );

    let reparsed = parse_csv(&fs::read_to_string(&path).unwrap(), false).unwrap();
    assert_eq!(reparsed.len(), 10);
}

#[test]
fn log_table_round_trips_through_rate_fit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("log.csv");
    let o = bin(&[
        "repro-table",
        "--delta",
        "pi/4",
        "--eps",
        "1/7",
        "--n-list",
        "15:2:25",
        "--log",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&[
        "rate-fit",
        "--csv",
        path.to_str().unwrap(),
        "--column",
        "upper",
        "--n-from",
        "15",
        "--n-to",
        "25",
        "--log",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let slope: f64 = stdout(&o).trim().parse().unwrap();
    assert!((slope + 1.1781).abs() / 1.1781 < 0.1);
}

#[test]
fn fraction_literals_are_exact() {
    assert_eq!(parse_real("pi/4").unwrap(), FRAC_PI_4);
    assert_eq!(parse_real("1/7").unwrap(), 1.0 / 7.0);
}
