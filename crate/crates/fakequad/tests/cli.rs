//! End-to-end checks of the command-line interface: exit codes, output
//! determinism, and agreement between the text and JSON encodings.

use fakequad::cli::run_capture;
use serde_json::Value;

#[test]
fn exit_codes() {
    assert_eq!(run_capture(&["euler", "--field", "2", "--ramified", "3,7"]).0, 0);
    // Domain error: odd ramification.
    let (code, out) = run_capture(&["euler", "--field", "2", "--ramified", "3"]);
    assert_eq!(code, 2);
    assert!(out.contains("OddRamification"), "{}", out);
    // Domain error: non-squarefree field.
    let (code, out) = run_capture(&["field", "--d", "12"]);
    assert_eq!(code, 2);
    assert!(out.contains("NotSquarefree"));
    // Usage errors.
    let (code, out) = run_capture(&[]);
    assert_eq!(code, 64);
    assert!(out.contains("UsageError"));
    assert_eq!(run_capture(&["frobnicate"]).0, 64);
    assert_eq!(run_capture(&["repro", "unknown"]).0, 64);
    assert_eq!(run_capture(&["euler", "--field", "2"]).0, 64);
}

#[test]
fn known_value_commands() {
    let (code, out) = run_capture(&["euler", "--field", "2", "--ramified", "3,7"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "c2 = 8");

    let (code, out) = run_capture(&["resolve", "A", "10", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("chain: [4, 2, 2]"));
    assert!(out.contains("delta K^2: -6/5"));
    assert!(out.contains("delta e: 3"));

    // The du Val shorthand parses too.
    let (code, out) = run_capture(&["resolve", "A9"]);
    assert_eq!(code, 0);
    assert!(out.contains("chain: [2, 2, 2, 2, 2, 2, 2, 2, 2]"));

    let (code, out) = run_capture(&["torsion", "--field", "5", "--ramified", "2,5"]);
    assert_eq!(code, 0);
    assert!(out.contains("order 5: true"));
    assert!(out.contains("order 2: false"));
}

#[test]
fn repro_targets_pass() {
    for target in ["theorem-b", "section4", "covers"] {
        let (code, out) = run_capture(&["repro", target]);
        assert_eq!(code, 0, "repro {} failed:\n{}", target, out);
        assert!(out.contains("golden: ok"));
    }
    let (code, out) = run_capture(&["--json", "repro", "section4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["golden_match"], Value::Bool(true));
}

#[test]
fn deterministic_output() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["field", "--d", "5", "--split", "2,3,5,7,11"],
        vec!["algebra", "--field", "2", "--ramified", "2,3"],
        vec!["enumerate", "cyclic", "5"],
        vec!["quotient", "--group", "D4"],
        vec!["registry"],
        vec!["cover", "codes", "6"],
        vec!["repro", "theorem-b"],
    ];
    for cmd in commands {
        let a = run_capture(&cmd);
        let b = run_capture(&cmd);
        assert_eq!(a, b, "non-deterministic output for {:?}", cmd);
        let mut json_cmd = vec!["--json"];
        json_cmd.extend(&cmd);
        let ja = run_capture(&json_cmd);
        let jb = run_capture(&json_cmd);
        assert_eq!(ja, jb, "non-deterministic JSON for {:?}", cmd);
    }
}

#[test]
fn text_and_json_encode_identical_values() {
    // euler: text "c2 = 4/5" vs JSON {num: 4, den: 5}.
    let (_, text) = run_capture(&["euler", "--field", "5", "--ramified", "2,5"]);
    let (_, json) = run_capture(&["--json", "euler", "--field", "5", "--ramified", "2,5"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(text.trim(), "c2 = 4/5");
    assert_eq!(v["c2"]["num"], Value::from(4));
    assert_eq!(v["c2"]["den"], Value::from(5));

    // resolve: chain and delta values agree across modes.
    let (_, text) = run_capture(&["resolve", "A(8,5)"]);
    let (_, json) = run_capture(&["--json", "resolve", "A(8,5)"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert!(text.contains("chain: [2, 3, 2]"));
    assert_eq!(v["chain"], serde_json::json!([2, 3, 2]));
    assert!(text.contains("delta K^2: -1/2"));
    assert_eq!(v["delta_k2"]["num"], Value::from(-1));
    assert_eq!(v["delta_k2"]["den"], Value::from(2));

    // enumerate: the same configuration strings in both modes.
    let (_, text) = run_capture(&["enumerate", "cyclic", "4"]);
    let (_, json) = run_capture(&["--json", "enumerate", "cyclic", "4"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let configs: Vec<String> = v["configurations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    for c in &configs {
        assert!(text.contains(c), "text output lacks {}", c);
    }
    assert_eq!(configs.len(), 2);

    // registry: pass counts agree.
    let (_, text) = run_capture(&["registry"]);
    let (_, json) = run_capture(&["--json", "registry"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert!(text.contains("8/8 records pass"));
    assert_eq!(v["passed"], Value::from(8));
    assert_eq!(v["total"], Value::from(8));
}

#[test]
fn registry_by_id_and_errors() {
    let (code, out) = run_capture(&["registry", "--id", "sqrt5-p2p5"]);
    assert_eq!(code, 0);
    assert!(out.contains("sqrt5-p2p5: pass"));
    let (code, _) = run_capture(&["registry", "--id", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn impossibility_command() {
    let (code, out) = run_capture(&["enumerate", "impossible", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("impossible"));
    let (code, _) = run_capture(&["enumerate", "impossible", "7"]);
    assert_eq!(code, 2);
}
