//! End-to-end checks of the `ncgb` binary: golden outputs, exit codes,
//! determinism, and JSON schema conformance.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ncgb"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn ncgb")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "`ncgb {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[track_caller]
fn assert_golden(args: &[&str], name: &str) {
    assert_eq!(stdout_of(args), golden(name), "golden {name}");
}

#[test]
fn dim_matches_golden_and_is_deterministic() {
    assert_golden(&["dim", "--matrix-n", "2"], "dim_n2.txt");
    assert_golden(
        &["dim", "--matrix-n", "2", "--format", "json"],
        "dim_n2.json",
    );
    let a = stdout_of(&["dim", "--matrix-n", "2", "--format", "json"]);
    let b = stdout_of(&["dim", "--matrix-n", "2", "--format", "json", "--jobs", "1"]);
    assert_eq!(a, b);
}

#[test]
fn dim_of_down_up_system_is_infinite() {
    let downup = fixtures().join("downup.json");
    let out = stdout_of(&[
        "dim",
        "--input",
        downup.to_str().unwrap(),
        "--max-degree",
        "12",
    ]);
    assert_eq!(out, golden("dim_downup.txt"));
    assert!(out.starts_with("INFINITE"));
}

#[test]
fn gb_modes_agree_and_match_golden() {
    let full = stdout_of(&["gb", "--matrix-n", "2", "--mode", "full"]);
    let paper = stdout_of(&["gb", "--matrix-n", "2", "--mode", "paper"]);
    assert_eq!(full, paper);
    let core_golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/gb_n2.txt");
    assert_eq!(full, std::fs::read_to_string(core_golden).unwrap());
}

#[test]
fn check_command_exit_codes() {
    let ok = run(&["check", "--matrix-n", "3"]);
    assert_eq!(ok.status.code(), Some(0));

    let zero = fixtures().join("zero2.json");
    let ok = run(&["check", "--input", zero.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    let corrupted = fixtures().join("corrupted.json");
    let bad = run(&["check", "--input", corrupted.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    let text = String::from_utf8(bad.stdout).unwrap();
    assert!(
        text.starts_with("FAIL"),
        "violation should be printed: {text}"
    );
}

#[test]
fn input_errors_exit_3() {
    // Neither source given.
    assert_eq!(run(&["dim"]).status.code(), Some(3));
    // Both sources given.
    let downup = fixtures().join("downup.json");
    assert_eq!(
        run(&[
            "dim",
            "--matrix-n",
            "2",
            "--input",
            downup.to_str().unwrap()
        ])
        .status
        .code(),
        Some(3)
    );
    // Unparseable polynomial.
    assert_eq!(
        run(&["mul", "--matrix-n", "2", "e[1", "1"]).status.code(),
        Some(3)
    );
    // Unknown flag (argument parse error).
    assert_eq!(run(&["dim", "--bogus"]).status.code(), Some(3));
    // Invalid max degree.
    assert_eq!(
        run(&["dim", "--matrix-n", "2", "--max-degree", "2"])
            .status
            .code(),
        Some(3)
    );
    // Paper-family relations need the matrix system.
    assert_eq!(
        run(&["gb", "--input", downup.to_str().unwrap(), "--mode", "paper"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn degree_bound_exceeded_exits_2_with_partial_data() {
    // The matrix-system basis tops out at degree 5, so a cap of 4 must
    // abort with the partial basis as data.
    let out = bin()
        .args(["gb", "--matrix-n", "2", "--max-degree", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stdout.is_empty(), "partial basis should be printed");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("degree bound 4 exceeded"), "{stderr}");
}

#[test]
fn env_var_overrides_default_degree_cap() {
    let fail = bin()
        .args(["gb", "--matrix-n", "2"])
        .env("NCGB_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(2));
    let ok = bin()
        .args(["gb", "--matrix-n", "2", "--max-degree", "9"])
        .env("NCGB_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "flag beats the env var");
}

#[test]
fn mul_examples() {
    assert_golden(
        &["mul", "--matrix-n", "2", "e[1,1]^5", "1"],
        "mul_quintic.txt",
    );
    assert_eq!(
        stdout_of(&["mul", "--matrix-n", "2", "e[1,1]", "e[2,2]"]),
        "0\n"
    );
}

#[test]
fn verification_reports_match_goldens() {
    assert_golden(&["center", "--matrix-n", "2"], "center_n2.txt");
    assert_golden(&["decompose", "--matrix-n", "2"], "decompose_n2.txt");
    assert_golden(&["reps", "--matrix-n", "2"], "reps_n2.txt");
    assert_golden(&["oracle-diff", "--matrix-n", "2"], "oracle_diff_n2.txt");
    assert_golden(&["basis", "--matrix-n", "2"], "basis_n2.txt");
    let downup = fixtures().join("downup.json");
    assert_golden(
        &[
            "growth",
            "--input",
            downup.to_str().unwrap(),
            "--max-degree",
            "10",
            "--format",
            "json",
        ],
        "growth_downup.json",
    );
}

#[test]
fn basis_of_infinite_quotient_fails_cleanly() {
    let downup = fixtures().join("downup.json");
    let out = run(&["basis", "--input", downup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_flag_writes_identical_bytes() {
    let dir = std::env::temp_dir().join("ncgb-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dim.json");
    let out = bin()
        .args([
            "dim",
            "--matrix-n",
            "2",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("dim_n2.json")
    );
}

// ---------------------------------------------------------------
// JSON outputs validate against the committed schemas.
// ---------------------------------------------------------------

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&value)
        .unwrap_or_else(|e| panic!("schema {name}: {e}"))
}

#[track_caller]
fn assert_valid(args: &[&str], schema_name: &str) {
    let text = stdout_of(args);
    let value: serde_json::Value = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("`ncgb {}` not JSON: {e}", args.join(" ")));
    let compiled = schema(schema_name);
    let msgs: Vec<String> = match compiled.validate(&value) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| e.to_string()).collect(),
    };
    assert!(msgs.is_empty(), "{schema_name} violations: {msgs:?}");
}

#[test]
fn json_outputs_validate_against_schemas() {
    let downup = fixtures().join("downup.json");
    let downup = downup.to_str().unwrap();
    assert_valid(
        &["check", "--matrix-n", "2", "--format", "json"],
        "check.schema.json",
    );
    assert_valid(
        &["gb", "--matrix-n", "2", "--format", "json"],
        "gb.schema.json",
    );
    assert_valid(
        &["gb", "--input", downup, "--format", "json"],
        "gb.schema.json",
    );
    assert_valid(
        &["dim", "--matrix-n", "2", "--format", "json"],
        "dim.schema.json",
    );
    assert_valid(
        &[
            "dim",
            "--input",
            downup,
            "--max-degree",
            "8",
            "--format",
            "json",
        ],
        "dim.schema.json",
    );
    assert_valid(
        &["basis", "--matrix-n", "2", "--format", "json"],
        "basis.schema.json",
    );
    assert_valid(
        &[
            "mul",
            "--matrix-n",
            "2",
            "e[1,2]",
            "e[2,1]",
            "--format",
            "json",
        ],
        "mul.schema.json",
    );
    assert_valid(
        &["table", "--matrix-n", "2", "--format", "json"],
        "table.schema.json",
    );
    assert_valid(
        &["oracle-diff", "--matrix-n", "2", "--format", "json"],
        "oracle-diff.schema.json",
    );
    assert_valid(
        &["center", "--matrix-n", "2", "--format", "json"],
        "center.schema.json",
    );
    assert_valid(
        &["decompose", "--matrix-n", "2", "--format", "json"],
        "decompose.schema.json",
    );
    assert_valid(
        &["reps", "--matrix-n", "2", "--format", "json"],
        "reps.schema.json",
    );
    assert_valid(
        &["growth", "--matrix-n", "2", "--format", "json"],
        "growth.schema.json",
    );
}

#[test]
fn center_n3_reports_dimension_five() {
    let out = stdout_of(&["center", "--matrix-n", "3"]);
    assert!(out.starts_with("dimension: 5\n"), "{out}");
}
