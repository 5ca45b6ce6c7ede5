use std::path::Path;
use std::process::{Command, Output};

fn albert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_albert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const SPLIT_FIRST: &str = "[field]\nkind = \"rationals\"\n\n[construction]\nkind = \"first\"\nalgebra = \"matrix3\"\nlambda = \"1\"\n";

#[test]
fn split_h3_preset_passes() {
    let o = albert(&["verify", "--preset", "split-h3", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("all suites passed"));
}

#[test]
fn config_file_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "first.toml", SPLIT_FIRST);
    let o = albert(&["verify", &path, "--samples", "10", "--suite", "axioms", "--suite", "u-operator"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn corrupted_adjoint_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = format!("{SPLIT_FIRST}corruption = \"dropped-yz\"\n");
    let path = write(dir.path(), "bad.toml", &text);
    let o = albert(&["verify", &path, "--samples", "10", "--suite", "axioms"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{out}");
    assert!(out.contains("FAIL"), "{out}");
    assert!(out.contains("first failure"), "{out}");
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = albert(&["verify", "/nonexistent/config.toml"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot read"));
}

#[test]
fn bad_config_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.toml", &SPLIT_FIRST.replace("\"1\"", "\"one\""));
    let o = albert(&["verify", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 7"), "{}", stderr(&o));
}

#[test]
fn unknown_preset_and_suite_are_usage_errors() {
    assert_eq!(albert(&["verify", "--preset", "no-such"]).status.code(), Some(2));
    assert_eq!(albert(&["presets", "--show", "no-such"]).status.code(), Some(2));
    let o = albert(&["verify", "--preset", "split-first", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = albert(&["verify", "--preset", "split-h3", "--suite", "kernel"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn presets_are_listed_stably() {
    let a = albert(&["presets", "--json"]);
    let b = albert(&["presets", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.len() >= 6);
    assert!(names.contains(&"split-h3") && names.contains(&"split-second"));
    let plain = stdout(&albert(&["presets"]));
    assert_eq!(plain.lines().count(), names.len());
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "--preset", "split-second", "--samples", "8", "--seed", "3", "--json"];
    let a = albert(&args);
    let b = albert(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["passed"], true);
}

#[test]
fn u_path_certificate_records_pole() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cert.json");
    let o = albert(&["path", "--preset", "split-h3", "--kind", "u-path", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("rational roots [1/2]"), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["kind"], "u-path");
    assert_eq!(v["pole_roots"], serde_json::json!(["1/2"]));
    let pole = v["samples"].as_array().unwrap().iter().find(|s| s["t"] == "1/2").unwrap();
    assert_eq!(pole["outcome"], "pole");
    for key in ["structure-id", "parameters", "start", "end", "samples"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v["start"]["declared_hash"].as_str().unwrap().len() == 64);
}

#[test]
fn corrupted_endpoint_fails() {
    let dir = tempfile::tempdir().unwrap();
    let text = format!("{}\n[path]\ncorrupt_end = true\n", albert_core::harness::preset("split-h3").unwrap().text);
    let path = write(dir.path(), "end.toml", &text);
    let out = dir.path().join("cert.json");
    let o = albert(&["path", &path, "--kind", "u-path", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("first failure"));
}
