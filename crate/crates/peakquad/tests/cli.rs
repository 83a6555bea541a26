//! End-to-end tests of the binary: argument surface, output formats,
//! file writing and the exit-code contract (0 success, 1 domain or
//! oracle error, 2 usage error).

use std::process::{Command, Output};

fn peakquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peakquad"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_of(args: &[&str]) -> String {
    let out = peakquad(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output is UTF-8")
}

#[test]
fn integrate_reports_value_nodes_and_error() {
    let text = stdout_of(&[
        "integrate", "--scheme", "quadp", "--alpha", "100", "--n", "10", "--m", "4", "--f", "x2",
    ]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("value,nodes,re,abs_error,order"));
    let cells: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(cells.len(), 5);
    let value: f64 = cells[0].parse().unwrap();
    let exact = 4.4311346272637895e-7;
    assert!((value - exact).abs() <= 1e-12 * exact, "value {value:e}");
    assert_eq!(cells[1], "50");
    let re: f64 = cells[2].parse().unwrap();
    assert!(re <= 5e-12, "re {re:e}");
}

#[test]
fn integrate_covers_all_four_schemes() {
    // n = 5 keeps the growing-degree ladder inside the degree cap.
    for scheme in ["quadp", "quade", "simpson", "trapezoid"] {
        let mut args = vec![
            "integrate", "--scheme", scheme, "--alpha", "30", "--n", "5", "--f", "expx2",
        ];
        if scheme == "quadp" {
            args.extend(["--m", "6"]);
        }
        let text = stdout_of(&args);
        let row = text.lines().nth(1).unwrap();
        let value: f64 = row.split(',').next().unwrap().parse().unwrap();
        assert!(value.is_finite() && value > 0.0, "{scheme}: {row}");
    }
}

#[test]
fn shallow_peaks_are_a_domain_error() {
    let out = peakquad(&[
        "integrate", "--scheme", "quadp", "--alpha", "0.5", "--n", "5", "--m", "4", "--f", "x2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("alpha"), "stderr: {msg}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_mistakes_exit_with_code_two() {
    // Unknown subcommand, unknown table id, missing required degree.
    for args in [
        &["frobnicate"][..],
        &["table", "7"][..],
        &["figure", "9"][..],
        &["integrate", "--scheme", "quadp", "--alpha", "10", "--n", "5", "--f", "x2"][..],
        &["integrate", "--scheme", "quadp", "--alpha", "10", "--n", "5", "--m", "4", "--f", "x9"][..],
    ] {
        let out = peakquad(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn seed_flag_is_rejected_loudly() {
    let out = peakquad(&["table", "1", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("deterministic"), "stderr: {msg}");
}

#[test]
fn table_csv_is_deterministic_and_well_formed() {
    let a = stdout_of(&["table", "3"]);
    let b = stdout_of(&["table", "3"]);
    assert_eq!(a, b);
    let mut lines = a.lines();
    assert_eq!(
        lines.next(),
        Some("scheme,alpha,c0,n,m,re,abs_error,order,nodes")
    );
    assert_eq!(lines.clone().count(), 18);
    // Growing-degree rows carry a semicolon-joined degree ladder.
    assert!(lines.next().unwrap().contains(";"));
}

#[test]
fn markdown_format_renders_a_pipe_table() {
    let text = stdout_of(&["table", "2", "--format", "md"]);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("| scheme"));
    assert!(lines[1].starts_with("| ---"));
    assert_eq!(lines.len(), 20, "header + rule + 18 rows");
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = std::env::temp_dir().join("peakquad-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("figure62.csv");
    let streamed = stdout_of(&["figure", "6.2"]);
    let out = peakquad(&["figure", "6.2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "--out must not echo to stdout");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(streamed, written);
    assert!(written.starts_with("# panel A"), "note comment leads the CSV");
    std::fs::remove_file(&path).ok();
}

#[test]
fn moments_lists_one_row_per_index() {
    let text = stdout_of(&["moments", "--alpha", "10", "--beta", "-0.25", "--kmax", "6"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,value");
    assert_eq!(lines.len(), 8);
    let w0: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((w0 - 1.7724538509055160e-1).abs() <= 1e-15, "w0 = {w0:e}");

    // Peaks right of the interval are a documented domain error here.
    let out = peakquad(&["moments", "--alpha", "10", "--beta", "0.25", "--kmax", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_suite_passes_and_summarizes() {
    let text = stdout_of(&["check"]);
    let last = text.lines().last().unwrap();
    assert!(
        last.starts_with("summary: 24/24 checks passed"),
        "summary line: {last}"
    );
    assert!(!text.contains("FAIL"));

    // An unreachable tolerance is an oracle error, not a crash.
    let out = peakquad(&["check", "--tol", "1e-16"]);
    assert_eq!(out.status.code(), Some(1));
}
