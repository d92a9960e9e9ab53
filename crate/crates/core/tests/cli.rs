use std::process::{Command, Output};

use magicsq::IntPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magicsq")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn skeleton_verb() {
    let v = json(&["cgmb", "skeleton", "--ambient", "E6", "--kernel", "3,4,5", "--variety", "2"]);
    assert_eq!(v, serde_json::json!([0, 6, 15, 21]));
    let v = json(&["cgmb", "skeleton", "--ambient", "2E6", "--kernel", "3,4,5", "--variety", "1,6", "--star", "(1 6)(3 5)"]);
    assert_eq!(v, serde_json::json!([0, 9, 15, 24]));
}

#[test]
fn fixture_check_verb() {
    let v = json(&["cgmb", "check", "--fixture", "henke-y1"]);
    assert_eq!(v["holds"], true);
}

#[test]
fn poincare_json_parses_back() {
    let out = stdout(&["poincare", "--type", "E7", "--variety", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 33);
    let p: IntPoly = serde_json::from_value(v["poly"].clone()).unwrap();
    assert_eq!(p.value_at_one(), 126.into());
}

#[test]
fn conormed_and_divisibility() {
    let v = json(&["poincare", "--type", "2E6", "--variety", "2", "--conormed"]);
    let p: IntPoly = serde_json::from_value(v["poly"].clone()).unwrap();
    let ps = p.to_string();
    let ring = json(&["poly", "divides", "--p", &ps, "--q", "1+t^3"]);
    let semi = json(&["poly", "divides", "--p", &ps, "--q", "1+t^3", "--semiring"]);
    assert_eq!((ring["divides"].as_bool(), semi["divides"].as_bool()), (Some(true), Some(false)));
    let e = run(&["poincare", "--type", "E7", "--variety", "1", "--conormed"]);
    assert_eq!(e.status.code(), Some(2));
}

#[test]
fn jinv_verbs() {
    let out = stdout(&["--format", "text", "jinv", "poly", "--group", "E7", "--j", "0,1,1,1"]);
    assert_eq!(out.trim(), "1 + t^3 + t^5 + t^8 + t^9 + t^12 + t^14 + t^17");
    let v = json(&["jinv", "enumerate", "--group", "2E6"]);
    assert_eq!(v["profiles"].as_array().unwrap().len(), 4);
    assert_eq!(run(&["jinv", "poly", "--group", "F4", "--j", "1"]).status.code(), Some(2));
}

#[test]
fn killing_form_verb() {
    let v = json(&["qform", "af-e7", "--q", "definite", "--o", "definite", "--gamma", "+,+,+"]);
    assert_eq!(v, serde_json::json!({"dim": 133, "signature": -133, "witt_index": 0}));
    let v = json(&["qform", "af-e7", "--q", "split", "--o", "split", "--gamma", "-,-,+"]);
    assert!(v["witt_index"].as_u64().unwrap() > 0);
}

#[test]
fn table_verbs() {
    let csv = stdout(&["--format", "csv", "tables", "magic"]);
    assert_eq!(csv.lines().count(), 17);
    let v = json(&["tables", "conditions", "--group", "2E6"]);
    assert_eq!(v["parabolic"], "P_{1,6}");
    let v = json(&["tables", "tits-index", "--rost", "not-pure-symbol"]);
    assert_eq!(v["circled_nodes"], serde_json::json!([2]));
}

#[test]
fn weyl_verbs() {
    let v = json(&["weyl", "order", "--type", "E7"]);
    assert_eq!(v["order"], "2903040");
    let v = json(&["weyl", "cosets", "--type", "E6", "--parabolic", "1,3,4,5,6"]);
    assert_eq!(v.as_array().unwrap().len(), 72);
    let v = json(&["weyl", "double-cosets", "--type", "E6", "--left", "3,4,5", "--right", "2,3,4,5", "--star", "opposition"]);
    let total: u64 = v.as_array().unwrap().iter().map(|c| c["orbit_size"].as_u64().unwrap()).sum();
    assert_eq!(total, 270);
}

#[test]
fn verify_exit_codes_and_determinism() {
    let a = run(&["--seed-independent", "verify", "dims-*"]);
    let b = run(&["--seed-independent", "verify", "dims-*"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&["--format", "text", "verify", "cgmb-*"]);
    assert!(text.lines().take(2).all(|l| l.starts_with('✓')));

    let missing = run(&["verify", "nonexistent"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("dims-x2"));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn verify_fails_with_tampered_fixture() {
    let dir = std::env::temp_dir().join(format!("magicsq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let fixture = r#"{"name": "henke-y1", "provenance": "deliberately wrong",
        "total": {"flag_variety": {"ambient": "E7", "circled": [1]}},
        "terms": [{"kind": "tate", "shifts": [0]}]}"#;
    std::fs::write(dir.join("henke-y1.json"), fixture).unwrap();
    let out = run(&["--fixtures", dir.to_str().unwrap(), "verify", "henke-*"]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}
