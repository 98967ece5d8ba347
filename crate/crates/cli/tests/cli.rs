use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellipscheme")).args(args).env_remove("ELLIPSCHEME_FIXTURE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_k1_lists_four_extremal_types() {
    let o = run(&["classify", "--k", "1", "--format", "ascii"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let listed: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.starts_with("extremal types:"))
        .skip(1)
        .take_while(|l| !l.is_empty())
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(listed, vec!["V10", "4S+V2", "S+V4", "V2+V2"]);
    let j = json(&run(&["classify", "--k", "1", "--format", "json"]));
    assert_eq!(j["extremal"].as_array().unwrap().len(), 4);
}

#[test]
fn classify_k8_marks_nine_m_points() {
    let j = json(&run(&["classify", "--k", "8", "--format", "json"]));
    let m = j["points"].as_array().unwrap().iter().filter(|p| p["kind"] == "m").count();
    assert_eq!(m, 9);
    let svg = stdout(&run(&["classify", "--k", "8", "--format", "svg"]));
    assert_eq!(svg.matches("data-kind=\"M\"").count(), 9);
}

#[test]
fn usage_errors_exit_one() {
    for args in [&["classify", "--k", "0"][..], &["verify", "--k-max", "0"], &["construct", "--k", "1"], &["nonsense"]]
    {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&["construct", "--k", "1", "--family", "m", "--lambda", "0", "--collapse", "x", "--out", out]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn construct_m_curve() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&["construct", "--k", "1", "--family", "m", "--lambda", "1", "--out", out, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["scheme"], "<0|4>");
    assert_eq!(j["oriented"], serde_json::json!([4, 0]));
    let covers: Vec<&str> = j["covers"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(covers, vec!["V10", "4S+V2"]);
    assert!(Path::new(j["fixture"].as_str().unwrap()).exists());
    let text = stdout(&run(&["construct", "--k", "1", "--family", "m", "--lambda", "1", "--out", out]));
    assert!(text.contains("scheme: <4|0>"));
}

#[test]
fn construct_with_collapse() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&[
        "construct",
        "--k",
        "1",
        "--family",
        "m2",
        "--lambda",
        "0",
        "--collapse",
        "1,0",
        "--out",
        out,
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["collapsed"]["oriented"], serde_json::json!([1, 0]));
    assert_eq!(j["collapsed"]["scheme"], "<0|1>");
    let o = run(&["construct", "--k", "1", "--family", "m", "--lambda", "1", "--collapse", "0,1", "--out", out]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_of_range_lambda_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["construct", "--k", "1", "--family", "m2", "--lambda", "1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda"));
}

#[test]
fn emitted_curve_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let j = json(&run(&[
        "construct",
        "--k",
        "1",
        "--family",
        "m",
        "--lambda",
        "0",
        "--emit",
        "1/2",
        "--out",
        out,
        "--format",
        "json",
    ]));
    let curve = j["curve"].as_str().unwrap().to_string();
    let a = run(&["analyze", &curve, "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let a = json(&a);
    assert_eq!(a["generic"], true);
    assert_eq!(a["scheme"], j["scheme"]);
    assert_eq!(a["covers"], j["covers"]);
}

#[test]
fn analyze_special_and_non_generic() {
    let dir = tempfile::tempdir().unwrap();
    let special = dir.path().join("special.curve");
    std::fs::write(&special, ellipscheme::trigonal::format_curve(&ellipscheme::trigonal::special_extremal(1).unwrap()))
        .unwrap();
    let j = json(&run(&["analyze", special.to_str().unwrap(), "--format", "json"]));
    assert_eq!(j["scheme"], "three-pseudo-lines");
    assert_eq!(j["covers"], serde_json::json!(["V2+V2"]));

    let bad = dir.path().join("bad.curve");
    std::fs::write(&bad, "k=1\np=-1\nq=0\n").unwrap();
    let o = run(&["analyze", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let j = json(&o);
    assert_eq!(j["generic"], false);
    assert_eq!(j["degree_ok"], false);
    assert_eq!(j["delta_degree"], 0);

    let o = run(&["analyze", dir.path().join("missing.curve").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_tables() {
    let o = run(&["verify", "--k-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("pass")).count(), 1);
    let j = json(&run(&["verify", "--k-max", "8", "--format", "json"]));
    assert_eq!(j["pass"], true);
    assert_eq!(j["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn fixture_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    ellipscheme::patchwork::FixtureSet::builtin().write_dir(dir.path()).unwrap();
    let out = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_ellipscheme"))
        .args([
            "construct",
            "--k",
            "2",
            "--family",
            "m",
            "--lambda",
            "2",
            "--out",
            out.path().to_str().unwrap(),
            "--format",
            "json",
        ])
        .env("ELLIPSCHEME_FIXTURE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["oriented"], serde_json::json!([9, 1]));

    let empty = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_ellipscheme"))
        .args(["construct", "--k", "1", "--family", "m", "--lambda", "0", "--out", out.path().to_str().unwrap()])
        .env("ELLIPSCHEME_FIXTURE_DIR", empty.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_svg_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "construct",
        "--k",
        "1",
        "--family",
        "m",
        "--lambda",
        "0",
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "svg",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("<svg"));
}
