use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hardy_cover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardy-cover")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const COVERING: &str = r#"{"n":3,"perms":{"A1":[2,3,1],"B1":[1,2,3]}}"#;
const LATTICE: &str = r#"{"m":1,"lattice":{"p":[[[0.7648421872844885,0.644217687237691]]],"q":[[[-1,0]]]}}"#;

#[test]
fn group_prints_a_passing_json_report() {
    let out = hardy_cover(&["group", "--genus", "1", "--boundary", "2", "--double"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["data"]["generators"].as_array().unwrap().len(), 6);
}

#[test]
fn induce_writes_the_induced_representation() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "covering.json", COVERING);
    write(dir.path(), "rep.json", LATTICE);
    let cfg = write(
        dir.path(),
        "induce.json",
        r#"{"mode":"induce","genus":0,"boundary":2,"covering":"covering.json","representation":"rep.json"}"#,
    );
    let out_path = dir.path().join("induced.json");
    let out = hardy_cover(&["--format", "text", "induce", "--config", &cfg, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    let induced: serde_json::Value = serde_json::from_str(&fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!((induced["n"].as_u64(), induced["m"].as_u64()), (Some(3), Some(1)));
    assert_eq!(induced["block_structure"]["A1"], serde_json::json!([2, 3, 1]));
}

#[test]
fn failing_checks_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "verify.json",
        &format!(
            r#"{{"mode":"verify","genus":0,"boundary":2,"covering":{COVERING},
            "representation":{{"m":1,"images":{{"1:B1":[[[1,0]]],"2:B1":[[[-1,0]]],"3:B1":[[[1,0]]],"3:A1":[[[1,0]]]}}}},
            "signatures":[1,-1]}}"#
        ),
    );
    let report = dir.path().join("report.json");
    let out = hardy_cover(&["--report", report.to_str().unwrap(), "verify", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(parsed["passed"], false);
    assert!(parsed["error"].as_str().unwrap().contains("[2:B1] [1:B1]^-1"), "{parsed}");
}

#[test]
fn bad_configs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.json", r#"{"mode":"isometry","n":3,"alpha":0.7,"signs":[1,-1],"colour":1}"#);
    let out = hardy_cover(&["isometry", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));

    let out = hardy_cover(&[
        "verify",
        "--config",
        &write(dir.path(), "iso.json", r#"{"mode":"isometry","n":3,"alpha":0.7,"signs":[1,-1]}"#),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected `verify`"));

    let out = hardy_cover(&["verify", "--config", "/nonexistent/config.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn isometry_json_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "iso.json",
        r#"{"mode":"isometry","n":2,"alpha":0.3,"signs":[1,-1],"trials":2,"samples":256}"#,
    );
    let a = hardy_cover(&["isometry", "--config", &cfg, "--seed", "5"]);
    let b = hardy_cover(&["isometry", "--config", &cfg, "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
}
