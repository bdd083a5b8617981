use std::process::{Command, Output};

use num_bigint::BigInt;
use trioct::{seq_terms, OctSequenceContext, Preset};

fn trioct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trioct"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn tribonacci_csv_prefix() {
    let out = trioct(&[
        "seq",
        "--preset",
        "tribonacci",
        "--n",
        "0..7",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows.last(), Some(&"7,24"));
}

#[test]
fn jacobsthal_octonion_row() {
    let out = trioct(&[
        "oct",
        "--preset",
        "third-order-jacobsthal",
        "--n",
        "0",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "0,0,1,1,2,5,9,18,37"));
}

#[test]
fn seq_matches_library_strings() {
    for preset in Preset::ALL {
        let out = trioct(&[
            "seq",
            "--preset",
            preset.name(),
            "--n",
            "0..30",
            "--format",
            "csv",
        ]);
        let expected: Vec<String> = seq_terms(&preset.params::<BigInt>(), 31)
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n},{v}"))
            .collect();
        let text = stdout(&out);
        let got: Vec<&str> = text.lines().skip(1).collect();
        assert_eq!(got, expected, "{preset}");
    }
}

#[test]
fn oct_jsonl_matches_library() {
    let out = trioct(&[
        "oct", "--preset", "narayana", "--n", "3..5", "--format", "jsonl",
    ]);
    let ctx = OctSequenceContext::<BigInt>::new(Preset::Narayana.params(), 10);
    for (line, n) in stdout(&out).lines().zip(3..) {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(row["n"], n);
        let expected: Vec<String> = ctx
            .oct_term(n)
            .components()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(row["components"], serde_json::json!(expected));
    }
}

#[test]
fn shift_route_equals_direct_terms() {
    let shifted = trioct(&["oct", "--preset", "padovan", "--n", "0..6", "--m", "4"]);
    let direct = trioct(&["oct", "--preset", "padovan", "--n", "4..10"]);
    assert_eq!(stdout(&shifted), stdout(&direct));
}

#[test]
fn rational_and_config_sources_agree() {
    let dir = std::env::temp_dir().join(format!("trioct-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("params.txt");
    std::fs::write(
        &path,
        "# halves\nr = 1/2\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n",
    )
    .unwrap();
    let from_file = trioct(&["seq", "--config", path.to_str().unwrap(), "--n", "0..4"]);
    let from_flags = trioct(&[
        "seq", "--r", "1/2", "--s", "1", "--t", "1", "--v0", "0", "--v1", "1", "--v2", "1", "--n",
        "0..4",
    ]);
    assert!(from_file.status.success());
    assert_eq!(stdout(&from_file), stdout(&from_flags));
    assert!(stdout(&from_file).ends_with("4,11/4\n"));
}

#[test]
fn roots_prints_labeled_lines() {
    let out = trioct(&["roots", "--preset", "tribonacci"]);
    let text = stdout(&out);
    let labels: Vec<&str> = text
        .lines()
        .map(|l| l.split(" = ").next().unwrap())
        .collect();
    assert_eq!(
        labels,
        ["alpha", "omega1", "omega2", "discriminant", "P", "Q", "R"]
    );
    let alpha: f64 = text.lines().next().unwrap()[8..].parse().unwrap();
    assert!((alpha - 1.839_286_755_214_161).abs() < 1e-15);
}

#[test]
fn genfunc_lists_slots_and_denominator() {
    let out = trioct(&["genfunc", "--preset", "tribonacci"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.contains("e7: 24 + 20 x + 13 x^2"));
    assert!(text.contains("denominator: 1 - 1 x - 1 x^2 - 1 x^3"));
}

#[test]
fn sums_match_direct_totals() {
    let out = trioct(&["sum", "--preset", "tribonacci", "--n", "0..7"]);
    let totals: Vec<u64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(totals, [0, 1, 2, 4, 8, 15, 28, 52]);
}

#[test]
fn degenerate_sum_falls_back_to_direct() {
    let out = trioct(&[
        "sum", "--r", "2", "--s", "-2", "--t", "1", "--v0", "1", "--v1", "2", "--v2", "3", "--n",
        "0..3",
    ]);
    assert!(out.status.success());
    // V = 1, 2, 3, 3
    assert!(stdout(&out).ends_with("3,9\n"));
    assert!(stderr(&out).contains("summing directly"));
}

#[test]
fn errors_are_single_distinct_lines() {
    let cases: [&[&str]; 6] = [
        &["seq", "--preset", "nosuch"],
        &["seq", "--preset", "padovan", "--n", "4..1"],
        &["seq", "--preset", "padovan", "--n", "x"],
        &["seq", "--config", "/nonexistent/params.txt"],
        &[
            "roots", "--r", "0", "--s", "3", "--t", "0", "--v0", "0", "--v1", "1", "--v2", "1",
        ],
        &["seq", "--preset", "padovan", "--r", "1"],
    ];
    let mut seen = Vec::new();
    for args in cases {
        let out = trioct(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = stderr(&out);
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(!seen.contains(&err), "{err}");
        seen.push(err);
    }
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(trioct(&["seq", "--format", "xml"]).status.code(), Some(1));
    assert_eq!(trioct(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(trioct(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_passes_and_is_byte_identical() {
    let args = [
        "verify", "--preset", "all", "--n-max", "40", "--report", "json",
    ];
    let a = trioct(&args);
    let b = trioct(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["seed"], 1);
    for (name, cat) in report["categories"].as_object().unwrap() {
        assert_eq!(cat["failed"], 0, "{name}");
        assert!(cat["run"].as_u64().unwrap() > 0, "{name}");
    }
}
