//! End-to-end tests of the CLI binary: wire formats, exit codes, and
//! byte-level determinism across thread counts.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quadric-codes"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn spectrum_reports_the_known_small_weights() {
    let out = run(&[
        "spectrum", "--family", "hyperbolic", "--n", "5", "--q", "2", "--max-weight", "12",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["q"], 2);
    assert_eq!(v["N"], 5);
    assert_eq!(v["n"], 35);
    assert_eq!(v["dimension"], 20);
    let spectrum: Vec<(u64, u64)> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["weight"].as_u64().unwrap(), e["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(
        spectrum,
        vec![(6, 280), (8, 735), (10, 11648), (12, 52290)]
    );
    assert_eq!(v["config"]["command"], "spectrum");
    assert_eq!(v["config"]["threads"], 1);
}

#[test]
fn classify_reads_form_lines() {
    let mut child = bin()
        .arg("classify")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"3 4 1 0 0 0 0 0 1 0 0 0 0 0 0 1 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v = json(&out);
    let class = &v["classes"][0];
    assert_eq!(class["vertex_dim"], -1);
    assert_eq!(class["base_kind"], "parabolic");
    assert_eq!(class["point_count"], 40);
}

#[test]
fn verify_tables_elliptic_q2_exits_zero() {
    let out = run(&["verify-tables", "--family", "elliptic", "--l", "2", "--q", "2"]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let v = json(&out);
    assert_eq!(v["all_match"], true);
    assert_eq!(v["pairs_total"], 1953);
    for row in v["count_rows"].as_array().unwrap() {
        assert_eq!(row["match"], true, "row {row}");
    }
    // the informational spectrum leg records the irreducible-pencil excess
    assert_eq!(v["spectrum_agrees"], false);
}

#[test]
fn points_count_matches_the_quadric_size() {
    let out = run(&["points", "--family", "parabolic", "--n", "4", "--q", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["count"], 40);
    assert_eq!(v["points"].as_array().unwrap().len(), 40);

    let csv = run(&[
        "points", "--family", "parabolic", "--n", "4", "--q", "3", "--format", "csv",
    ]);
    assert_eq!(
        String::from_utf8_lossy(&csv.stdout).lines().count(),
        40
    );
}

#[test]
fn pencil_scan_full_is_clean_and_deterministic() {
    let args = [
        "pencil-scan", "--family", "hyperbolic", "--n", "5", "--q", "2",
    ];
    let one = run(&args);
    assert!(one.status.success());
    let v = json(&one);
    assert_eq!(v["threshold"], 29);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["max_V_irreducible_pencils"], 25);

    let mut with_threads = args.to_vec();
    with_threads.extend(["--threads", "8"]);
    let eight = run(&with_threads);
    // identical apart from the embedded thread count
    let mut v1 = json(&one);
    let mut v8 = json(&eight);
    v1["config"]["threads"] = serde_json::Value::Null;
    v8["config"]["threads"] = serde_json::Value::Null;
    assert_eq!(v1, v8);
}

#[test]
fn sampled_scan_is_seed_stable() {
    let args = [
        "pencil-scan", "--family", "parabolic", "--n", "4", "--q", "3",
        "--sample", "20000", "--seed", "1",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn divisibility_passes_on_the_grid() {
    let out = run(&["divisibility", "--family", "elliptic", "--n", "5", "--q", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["modulus"], 2);
    assert_eq!(v["divisible"], true);
}

// golden line: the exact wire format is part of the contract
#[test]
fn spectrum_json_golden() {
    let out = run(&[
        "spectrum", "--family", "elliptic", "--n", "5", "--q", "2", "--max-weight", "4",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim_end(),
        r#"{"N":5,"config":{"N":5,"command":"spectrum","family":"elliptic","force":false,"max_weight":4,"q":2,"threads":1},"dimension":20,"family":"elliptic","n":27,"q":2,"spectrum":[{"count":270,"weight":4}],"truncated_at":4}"#
    );
}

#[test]
fn verify_tables_csv_has_all_sections() {
    let out = run(&[
        "verify-tables", "--family", "parabolic", "--l", "2", "--q", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "section,label,weight,predicted,measured,match");
    // 11 size rows, 5 count rows, 5 spectrum weight lines
    assert_eq!(lines.iter().filter(|l| l.starts_with("size,")).count(), 11);
    assert_eq!(lines.iter().filter(|l| l.starts_with("count,")).count(), 5);
    assert_eq!(lines.iter().filter(|l| l.starts_with("spectrum,")).count(), 5);
    assert!(lines.contains(&"count,(1.3)+(2.1),2,105,105,true"));
}

#[test]
fn spectrum_csv_lists_weight_count_pairs() {
    let out = run(&[
        "spectrum", "--family", "elliptic", "--n", "5", "--q", "2",
        "--max-weight", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["weight,count", "4,270"]);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["spectrum", "--family", "nope", "--n", "5", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["spectrum", "--family", "hyperbolic", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2)); // neither --n nor --l

    let out = run(&["spectrum", "--family", "hyperbolic", "--n", "4", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2)); // parity mismatch

    let out = run(&["verify-tables", "--family", "hyperbolic", "--l", "3", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2)); // outside the verified grid
}

#[test]
fn spectrum_is_byte_identical_across_thread_counts() {
    let base = [
        "spectrum", "--family", "parabolic", "--n", "4", "--q", "3",
    ];
    let one = run(&base);
    let mut v1 = json(&one);
    let mut eight_args = base.to_vec();
    eight_args.extend(["--threads", "8"]);
    let eight = run(&eight_args);
    let mut v8 = json(&eight);
    v1["config"]["threads"] = serde_json::Value::Null;
    v8["config"]["threads"] = serde_json::Value::Null;
    assert_eq!(v1, v8);
}
