use std::process::{Command, Output};

use semitopo_core::search::enumerate_topologies;
use semitopo_core::SpaceDocument;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semitopo")).args(args).output().unwrap()
}

fn write_doc(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_sierpinski() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_doc(&dir, "s.json", r#"{"points":["a","b"],"opens":[[],[0],[0,1]]}"#);
    let out = run(&["classify", &f, "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["profile"]["semi_T0"], true);
    assert_eq!(v["profile"]["semi_T1"], false);
    assert_eq!(v["points"], serde_json::json!(["a", "b"]));
    let trace = String::from_utf8(out.stderr).unwrap();
    assert!(trace.contains("semi_T1: singletons_wedge=false definition=false"), "{trace}");
}

#[test]
fn classify_discrete_has_every_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_doc(&dir, "d.json", r#"{"points":["0","1","2"],"opens":[[],[0],[1],[2],[0,1],[0,2],[1,2],[0,1,2]]}"#);
    let out = run(&["classify", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let profile = v["profile"].as_object().unwrap();
    for (k, val) in profile {
        if val.is_boolean() {
            assert_eq!(val, true, "{k}");
        }
    }
    assert_eq!(v["subsets"].as_array().unwrap().len(), 8);
}

#[test]
fn classify_rejects_bad_documents() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_doc(&dir, "m.json", r#"{"points":["a","b"],"opens":[[],[0]]}"#);
    let out = run(&["classify", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("MissingFull"));
    let f = write_doc(&dir, "bad.json", "not json");
    assert_eq!(run(&["classify", &f]).status.code(), Some(2));
    assert_eq!(run(&["classify", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn classify_omits_subsets_above_six_points() {
    let dir = tempfile::tempdir().unwrap();
    let points: Vec<String> = (0..7).map(|i| format!("\"{i}\"")).collect();
    let body = format!(r#"{{"points":[{}],"opens":[[],[0,1,2,3,4,5,6]]}}"#, points.join(","));
    let f = write_doc(&dir, "seven.json", &body);
    let v = stdout_json(&run(&["classify", &f]));
    assert!(v.get("subsets").is_none());
    let v = stdout_json(&run(&["classify", &f, "--all-subsets"]));
    assert_eq!(v["subsets"].as_array().unwrap().len(), 128);
}

#[test]
fn verify_small_sizes() {
    let out = run(&["verify", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n_max"], 3);
    assert_eq!(v["spaces_per_n"][2]["spaces"], 29);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert_eq!(run(&["verify", "--n-max", "1"]).status.code(), Some(0));
}

#[test]
fn verify_reports_injected_fault() {
    let out = run(&["verify", "--n-max", "3", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let vs = v["violations"].as_array().unwrap();
    assert!(!vs.is_empty());
    assert!(vs.iter().all(|x| x["property"] == "injected_semi_open_is_open"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("violated: injected_semi_open_is_open"));
}

#[test]
fn verify_size_cap() {
    assert_eq!(run(&["verify", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "6", "--allow-large"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "0"]).status.code(), Some(2));
}

#[test]
fn witness_exit_codes() {
    let out = run(&["witness", "--query", "semi_T_omega AND NOT semi_T1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["witness"]["opens"], serde_json::json!([[], [0], [0, 1]]));

    let out = run(&["witness", "--query", "semi_T_omega_4 AND NOT semi_T0"]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "exhausted_none");
    assert!(v["witness"].is_null());

    let out = run(&["witness", "--query", "nonsense_flag"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("UnknownAtom"));
}

#[test]
fn enumerate_streams_documents() {
    for (args, count) in [
        (vec!["enumerate", "--n", "3"], 29),
        (vec!["enumerate", "--n", "3", "--canonical"], 9),
        (vec!["enumerate", "--n", "1"], 1),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), count + 1);
        assert_eq!(lines[count], format!(r#"{{"count":{count}}}"#));
        for l in &lines[..count] {
            SpaceDocument::from_json(l).unwrap().to_space().unwrap();
        }
    }
    assert_eq!(run(&["enumerate", "--n", "6"]).status.code(), Some(2));
}

#[test]
fn documents_round_trip() {
    for n in 1..=4 {
        for sp in enumerate_topologies(n, false).unwrap() {
            let text = SpaceDocument::from_space(&sp).to_json();
            let back = SpaceDocument::from_json(&text).unwrap().to_space().unwrap();
            assert_eq!(back.canonical_form().unwrap(), sp.canonical_form().unwrap());
            assert_eq!(back, sp);
        }
    }
}
