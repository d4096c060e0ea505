use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fedcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fedcount"))
        .args(args)
        .env_remove("FEDCOUNT_BUDGET")
        .env_remove("FEDCOUNT_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = fedcount(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("fedcount-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn count_ladder_forests() {
    let r = json(&["count", "forests", "--family", "grid2:3"]);
    assert_eq!(r["result"]["value"], "112");
    assert_eq!(r["family_grammar"], "1");
    let text = fedcount(&["count", "forests", "--family", "grid2:3"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("value: 112"));
}

#[test]
fn count_with_status_reports_plan() {
    let r = json(&["count", "degrees", "--family", "book:3,4", "--status"]);
    assert_eq!(r["result"]["F"], "52");
    assert_eq!(r["result"]["D"], "60");
    assert_eq!(r["result"]["fed_status"], "FLD");
    assert_eq!(r["result"]["plan"]["method"], "product");
}

#[test]
fn gr_counts() {
    assert_eq!(json(&["gr", "--n", "2", "--q", "0", "--k", "1"])["result"]["count"], "15");
    assert_eq!(json(&["gr", "--n", "2", "--q", "-3", "--k", "1"])["result"]["count"], "15");
    let c = json(&["gr", "--n", "5", "--collisions"]);
    assert_eq!(c["result"]["extends_two"], c["result"]["predicted_two"]);
    assert_eq!(c["result"]["extends_more"], "0");
}

#[test]
fn colored_modes() {
    let both = json(&["colored", "--n", "3", "--k", "2"]);
    assert_eq!(both["result"]["census_a"], "1387");
    assert_eq!(both["result"]["recurrence_a"], "1387");
    let rec = json(&["colored", "--n", "3", "--k", "2", "--recurrence"]);
    assert!(rec["result"].get("census_a").is_none());
}

#[test]
fn fed_sweep_six_vertices() {
    let out = fedcount(&["verify", "fed", "--max-vertices", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("violations: 0"));
}

#[test]
fn reports_are_reproducible_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    let args = ["verify", "families", "--max-size", "12", "--seed", "5"];
    assert_eq!(strip(json(&args)), strip(json(&args)));
    let one = strip(json(&["verify", "families", "--max-size", "12", "--seed", "5", "--workers", "1"]));
    assert_eq!(one, strip(json(&args)));
}

#[test]
fn csv_sequence() {
    let out = fedcount(&["sequence", "gr", "--terms", "4", "--format", "csv"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "n,value\n1,2\n2,15\n3,112\n4,836\n");
}

#[test]
fn graph_files() {
    let good = temp_file("good.txt", "# paw\n4 4\n0 1\n0 2\n0 3\n1 2\n");
    let r = json(&["count", "degrees", "--graph", good.to_str().unwrap()]);
    assert_eq!(r["result"]["value"], "16");
    let bad = temp_file("bad.txt", "3 2\n0 1\n1 1\n");
    let out = fedcount(&["count", "forests", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let missing = fedcount(&["count", "forests", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("fedcount-{}-out.json", std::process::id()));
    let out = fedcount(&["gr", "--n", "3", "--format", "json", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["count"], "112");
}

#[test]
fn exit_codes() {
    assert_eq!(fedcount(&["count", "forests", "--family", "wheel:4"]).status.code(), Some(1));
    assert_eq!(fedcount(&["nonsense"]).status.code(), Some(1));
    assert_eq!(fedcount(&["gr", "--n", "8", "--budget", "1000"]).status.code(), Some(2));
    let env = Command::new(env!("CARGO_BIN_EXE_fedcount"))
        .args(["verify", "fed", "--max-vertices", "6"])
        .env("FEDCOUNT_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&env.stderr).contains("budget"));
    assert_eq!(fedcount(&["gr", "--n", "2", "--budget", "0"]).status.code(), Some(1));
    assert_eq!(fedcount(&["--help"]).status.code(), Some(0));
}
