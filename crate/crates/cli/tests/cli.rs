use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn sepax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepax"))
        .args(args)
        .env_remove("SEPAX_MAX_POINTS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn classify(path: &str) -> Value {
    let o = sepax(&["classify", path, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    json(&o)
}

#[test]
fn classify_sierpinski() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "s2.json", r#"{"points": 2, "opens": [[], [1], [0, 1]]}"#);
    let v = classify(&path);
    assert_eq!(v["axioms"]["T_HALF"], true);
    assert_eq!(v["axioms"]["T_NWD_OR_RO"], false);
    assert_eq!(v["points"][0]["is_nwd"], true);
    assert_eq!(v["points"][1]["is_open"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);

    let md = stdout(&sepax(&["classify", &path]));
    assert!(md.contains("| T_HALF | yes |"), "{md}");
}

#[test]
fn classify_discrete_satisfies_every_separation_axiom() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "d3.json", r#"{"points": ["a", "b", "c"], "subbasis": [[0], [1], [2]]}"#);
    let v = classify(&path);
    for (name, holds) in v["axioms"].as_object().unwrap() {
        if !["SYMMETRIC", "SUBFIT", "RO_SUBFIT", "NODEC"].contains(&name.as_str()) {
            assert_eq!(holds, true, "{name}");
        }
    }
    assert_eq!(v["space"]["points"][2], "c");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.json", r#"{"points": 3, "opens": [[], [0], [1], [0, 1, 2]]}"#);
    let o = sepax(&["classify", &path]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("{0}") && err.contains("{1}"), "{err}");

    let path = write(&dir, "syntax.json", "{\n  \"points\": 2,\n  \"opens\": [[], [0,]\n}");
    let o = sepax(&["classify", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = sepax(&["classify", "/nonexistent/space.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = sepax(&["enumerate", "--points", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "355 labeled, 33 classes on 4 points\n");

    let v = json(&sepax(&["enumerate", "--points", "3", "--up-to-homeo", "--format", "json"]));
    assert_eq!(v["report"]["labeled_count"], 29);
    assert_eq!(v["report"]["homeo_class_count"], 9);
    assert_eq!(v["spaces"].as_array().unwrap().len(), 9);
}

#[test]
fn point_cap_comes_from_the_environment() {
    let o = sepax(&["enumerate", "--points", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("SEPAX_MAX_POINTS"));

    let o = Command::new(env!("CARGO_BIN_EXE_sepax"))
        .args(["enumerate", "--points", "5"])
        .env("SEPAX_MAX_POINTS", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6942 labeled, 139 classes on 5 points\n");

    let o = Command::new(env!("CARGO_BIN_EXE_sepax"))
        .args(["enumerate", "--points", "6"])
        .env("SEPAX_MAX_POINTS", "9")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(sepax(&["enumerate", "--points", "0"]).status.code(), Some(2));
}

#[test]
fn verify_diagram_passes() {
    let o = sepax(&["verify", "diagram", "--points", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0 violations / 355 spaces on 4 points"), "{}", stdout(&o));

    let v = json(&sepax(&["verify", "diagram", "--points", "3", "--format", "json"]));
    assert_eq!(v["spaces_checked"], 1 + 4 + 29);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_props() {
    let o = sepax(&["verify", "props", "--points", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let v = json(&sepax(&["verify", "props", "--points", "3", "--prop", "duality", "--format", "json"]));
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 1);
    assert_eq!(outcomes[0]["passed"], true);

    let o = sepax(&["verify", "props", "--points", "3", "--prop", "no_such_property"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("duality"));
}

#[test]
fn mine_finds_minimal_witnesses() {
    let v = json(&sepax(&["mine", "--satisfy", "T_D", "--violate", "T_1", "--max-points", "4", "--format", "json"]));
    assert_eq!(v["outcome"]["result"], "found");
    assert_eq!(v["outcome"]["n"], 2);
    assert_eq!(v["outcome"]["minimal"], true);

    let v = json(&sepax(&[
        "mine",
        "--satisfy",
        "T_NWD_OR_RO",
        "--violate",
        "T_CLOSED_MEETS_RO",
        "--max-points",
        "4",
        "--format",
        "json",
    ]));
    assert_eq!(v["outcome"]["n"], 4);

    let v = json(&sepax(&["mine", "--satisfy", "T_1", "--violate", "T_0", "--max-points", "3", "--format", "json"]));
    assert_eq!(v["outcome"]["result"], "none_up_to");
    assert_eq!(v["outcome"]["n"], 3);

    let o = sepax(&["mine", "--satisfy", "T_BOGUS", "--violate", "T_0", "--max-points", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mined_witness_classifies_consistently() {
    let dir = TempDir::new().unwrap();
    let v = json(&sepax(&[
        "mine",
        "--satisfy",
        "T_HALF",
        "--violate",
        "T_CLOSED_OR_RO",
        "--max-points",
        "4",
        "--format",
        "json",
    ]));
    let space = serde_json::to_string(&v["outcome"]["space"]).unwrap();
    let path = write(&dir, "w.json", &space);
    let c = classify(&path);
    assert_eq!(c["axioms"]["T_HALF"], true);
    assert_eq!(c["axioms"]["T_CLOSED_OR_RO"], false);
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let first = sepax(&["catalog", "show", "attachment5", "--format", "json"]);
    let second = sepax(&["catalog", "show", "attachment5", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);

    let space = json(&first)["space"].clone();
    let emitted = serde_json::to_string_pretty(&space).unwrap();
    let path = write(&dir, "a5.json", &emitted);
    let again = classify(&path)["space"].clone();
    assert_eq!(again, space);

    let a = sepax(&["enumerate", "--points", "4", "--up-to-homeo", "--format", "json"]);
    let b = sepax(&["enumerate", "--points", "4", "--up-to-homeo", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn catalog_commands() {
    let o = sepax(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let list = stdout(&o);
    for name in ["sierpinski2", "khalimsky3", "attachment5", "fan4", "kappa-space"] {
        assert!(list.contains(name), "{name}");
    }
    let v = json(&sepax(&["catalog", "show", "kappa-space", "--format", "json"]));
    assert!(v["space"].is_null());
    assert_eq!(sepax(&["catalog", "show", "nowhere"]).status.code(), Some(2));
}

#[test]
fn dot_export() {
    for form in ["full", "finite"] {
        let o = sepax(&["export-diagram", "--form", form, "--format", "dot"]);
        assert_eq!(o.status.code(), Some(0));
        let dot = stdout(&o);
        assert!(dot.starts_with("digraph"), "{dot}");
        assert_eq!(dot.trim_end().chars().last(), Some('}'));
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        assert!(dot.contains("->"));
    }
    let v = json(&sepax(&["export-diagram", "--format", "json"]));
    assert!(!v["edges"].as_array().unwrap().is_empty());

    let o = sepax(&["enumerate", "--points", "2", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}
