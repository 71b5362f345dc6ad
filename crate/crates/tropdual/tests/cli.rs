//! End-to-end tests of the `tropdual` binary: JSON schemas, flags, and exit
//! codes, exercised through real subprocesses.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn write_matrix(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("tropdual-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn tropdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropdual")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn mutate_prints_the_documented_example() {
    let a2 = write_matrix("a2.json", r#"{"rows":2,"cols":2,"entries":[[0,1],[-1,0]]}"#);
    let out = tropdual(&["mutate", "-m", a2.to_str().unwrap(), "-w", "1,2", "--show", "c,g"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["c"]["entries"], serde_json::json!([[0, -1], [1, -1]]));
    assert_eq!(json["word"], serde_json::json!([1, 2]));
    assert!(json.get("f").is_none());
}

#[test]
fn mutate_empty_word_prints_identities_and_fpolys() {
    let a2 = write_matrix("a2-full.json", r#"{"rows":2,"cols":2,"entries":[[0,1],[-1,0]]}"#);
    let out = tropdual(&["mutate", "-m", a2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["c"]["entries"], serde_json::json!([[1, 0], [0, 1]]));
    assert_eq!(json["g"]["entries"], serde_json::json!([[1, 0], [0, 1]]));
    assert_eq!(json["b_t"]["d"], serde_json::json!([1, 1]));
    // F-polynomials serialize as coefficient/exponent term lists.
    assert_eq!(json["f"][0], serde_json::json!([{ "coeff": "1", "exp": [0, 0] }]));
}

#[test]
fn verify_reports_tallies_and_honors_out_flag() {
    let b2 = write_matrix("b2.json", r#"{"rows":2,"cols":2,"entries":[[0,2],[-1,0]]}"#);
    let dir = std::env::temp_dir().join("tropdual-cli-tests");
    let out_path = dir.join("report.json");
    let out = tropdual(&[
        "verify",
        "-m",
        b2.to_str().unwrap(),
        "--depth",
        "6",
        "--checks",
        "theorem,auxiliary",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["words"], 13);
    assert_eq!(report["checks"]["theorem"]["pass"], 13);
    assert_eq!(report["checks"]["theorem"]["fail"], 0);
    assert_eq!(report["checks"]["auxiliary"]["pass"], 13);
    assert_eq!(report["failures"], serde_json::json!([]));
}

#[test]
fn verify_all_checks_on_a2_depth_8() {
    let a2 = write_matrix("a2-all.json", r#"{"rows":2,"cols":2,"entries":[[0,1],[-1,0]]}"#);
    let out = tropdual(&[
        "verify",
        "-m",
        a2.to_str().unwrap(),
        "--depth",
        "8",
        "--checks",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["status"], "pass");
    for check in [
        "theorem",
        "auxiliary",
        "sign_coherence",
        "conjecture41",
        "step_left",
        "inverse_column",
        "tropical",
        "scalar",
        "separation",
    ] {
        assert_eq!(report["checks"][check]["fail"], 0, "check {check}");
        assert!(report["checks"][check]["pass"].as_u64().unwrap() > 0, "check {check}");
    }
}

#[test]
fn verify_respects_pinned_symmetrizer() {
    let pinned = write_matrix(
        "b2-pinned.json",
        r#"{"rows":2,"cols":2,"entries":[[0,2],[-1,0]],"d":[2,4]}"#,
    );
    let out = tropdual(&["verify", "-m", pinned.to_str().unwrap(), "--depth", "3", "--checks", "auxiliary"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["matrix"]["d"], serde_json::json!([2, 4]));
    assert_eq!(report["status"], "pass");
}

#[test]
fn scan_exhaustive_covers_rank2_periodicity_depth() {
    let out = tropdual(&[
        "scan",
        "--rank",
        "2",
        "--max-entry",
        "1",
        "--samples",
        "1",
        "--depth",
        "10",
        "--strategy",
        "exhaustive",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["samples"][0]["words"], 21);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["config"]["strategy"]["kind"], "exhaustive");
}

#[test]
fn scan_rejects_over_budget_configs() {
    let out = tropdual(&[
        "scan",
        "--rank",
        "4",
        "--samples",
        "100",
        "--depth",
        "12",
        "--strategy",
        "exhaustive",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn unknown_check_name_is_a_config_error() {
    let a2 = write_matrix("a2-check.json", r#"{"rows":2,"cols":2,"entries":[[0,1],[-1,0]]}"#);
    let out = tropdual(&["verify", "-m", a2.to_str().unwrap(), "--checks", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
