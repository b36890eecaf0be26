use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn vcsize(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcsize"))
        .args(args)
        .env_remove("VCSIZE_BOUND")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_sl23_reports_two_sizes() {
    let out = vcsize(&["analyze", "SL23"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["vcs"], serde_json::json!([4, 6]));
    assert_eq!(r["order"], 24);
    assert_eq!(r["classification"]["case"], "not_single_vcs");
    assert!(r.get("timings").is_none() && r.get("character_table").is_none());
}

#[test]
fn analyze_cyclic_has_empty_vcs() {
    let r = json(&vcsize(&["analyze", "C(12)"]));
    assert_eq!(r["vcs"], serde_json::json!([]));
    assert_eq!(r["classification"]["case"], "not_single_vcs");
}

#[test]
fn analyze_sylow_over_complement_example() {
    let out = vcsize(&["analyze", "sdp(3^3, ES(2,+), maxker)", "--emit-table", "--timings"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["expr"], "sdp(3^3,ES(2,+),maxker)");
    assert_eq!(r["vcs"], serde_json::json!([18]));
    assert_eq!(r["classification"]["case"], "sylow_over_complement");
    assert!(r["character_table"]["rows"].is_array());
    assert!(r["timings"]["table_ms"].is_u64());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = vcsize(&["analyze", "sdp(3^3,ES(2,-),maxker)", "--seed", "7"]);
    let b = vcsize(&["analyze", "sdp( 3^3 , ES(2,-) , maxker )", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_one_with_diagnostic() {
    let out = vcsize(&["analyze", "sdp(3^3, ES(2,-), maxker"]);
    assert_eq!(out.status.code(), Some(1));
    let e = json(&out);
    assert_eq!(e["error"]["kind"], "ParseError");
    assert_eq!(e["error"]["line"], 1);
    assert_eq!(e["error"]["column"], 25);
    assert_eq!(e["error"]["expected"], serde_json::json!(["')'"]));
}

#[test]
fn bound_precedence_flag_env_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("flags.toml");
    std::fs::write(&cfg, "bound = 10\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let out = vcsize(&["analyze", "SL23", "--config", cfg]);
    assert_eq!(json(&out)["error"]["kind"], "BoundExceeded");

    let out = Command::new(env!("CARGO_BIN_EXE_vcsize"))
        .args(["analyze", "SL23", "--config", cfg])
        .env("VCSIZE_BOUND", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_vcsize"))
        .args(["analyze", "SL23", "--config", cfg, "--bound", "10"])
        .env("VCSIZE_BOUND", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn file_input_and_json_out() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("group.txt");
    std::fs::write(&src, "# Borel subgroup of Sz(8)\nSz8Borel\n").unwrap();
    let dest = dir.path().join("out.json");
    let out = vcsize(&["verify", "--file", src.to_str().unwrap(), "--json-out", dest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&dest).unwrap()).unwrap();
    assert_eq!(r["vcs"], serde_json::json!([64]));
    assert!(r["invariant_checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn chartab_outputs_integer_table() {
    let r = json(&vcsize(&["chartab", "D(6)"]));
    assert_eq!(r["class_count"], 3);
    assert_eq!(r["table"]["class_sizes"], serde_json::json!([1, 2, 3]));
}

fn write_grid(dir: &Path, body: &str) -> String {
    let p = dir.join("grid.toml");
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn search_is_resumable_and_flags_skips() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write_grid(
        dir.path(),
        "order_cap = 500\nworkers = 2\n[[families]]\nactors = [\"ES(2,+)\", \"ES(2,-)\"]\nmodules = [\"3^3\", \"5^3\"]\n",
    );
    let catalog = dir.path().join("cat.jsonl");
    let cat = catalog.to_str().unwrap();
    let out = vcsize(&["search", &grid, "--catalog", cat]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["appended"], 4);
    let first = std::fs::read_to_string(&catalog).unwrap();
    let records: Vec<Value> = first.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records[0]["vcs"], serde_json::json!([18]));
    assert_eq!(records[2]["status"], "skipped");
    assert_eq!(records[2]["order"], 1000);

    let out = vcsize(&["search", &grid, "--catalog", cat]);
    assert_eq!(json(&out)["appended"], 0);
    assert_eq!(std::fs::read_to_string(&catalog).unwrap(), first);
}

#[test]
fn search_with_empty_grid_appends_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write_grid(dir.path(), "");
    let catalog = dir.path().join("cat.jsonl");
    let out = vcsize(&["search", &grid, "--catalog", catalog.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["grid_points"], 0);
}

#[test]
fn search_without_catalog_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write_grid(dir.path(), "");
    let out = vcsize(&["search", &grid]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "Config");
}
