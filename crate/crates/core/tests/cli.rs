use std::f64::consts::PI;
use std::process::{Command, Output};

use inscribed::closed_forms::{p_contain, three_circle_probability};
use inscribed::fmt::real;
use serde_json::Value;

fn inscribed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inscribed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_targets() {
    let out = inscribed(&["eval", "p-contain", "--r", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0.25");

    let out = inscribed(&["eval", "li2", "--x", "1"]);
    assert_eq!(stdout(&out).trim().parse::<f64>().unwrap(), PI * PI / 6.0);

    let out = inscribed(&["eval", "li2", "--x", "-2"]);
    assert!((stdout(&out).trim().parse::<f64>().unwrap() + 1.436_746_366_883_681).abs() < 1e-14);

    let out = inscribed(&["eval", "three-circles"]);
    assert!(stdout(&out).starts_with("0.38712871"));

    let out = inscribed(&["eval", "chord-cdf", "--r", "1"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn eval_usage_errors_exit_2() {
    for args in [
        &["eval", "p-contain", "--r", "1.5"][..],
        &["eval", "li2", "--x", "1.01"],
        &["eval", "chord-cdf", "--r", "-0.1"],
        &["eval", "p-contain"],
        &["eval", "nonsense"],
    ] {
        let out = inscribed(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

fn table(what: &str, steps: &str) -> Vec<(String, String)> {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = inscribed(&["table", what, "--steps", steps, "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,value"));
    lines
        .map(|l| {
            let (r, v) = l.split_once(',').unwrap();
            (r.to_owned(), v.to_owned())
        })
        .collect()
}

#[test]
fn p_contain_table() {
    let rows = table("p-contain", "11");
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[0], ("0".into(), "0.25".into()));
    assert_eq!(rows[10], ("1".into(), "0".into()));
    let values: Vec<f64> = rows.iter().map(|(_, v)| v.parse().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn table_round_trips() {
    for (r, v) in table("p-contain", "257") {
        let r: f64 = r.parse().unwrap();
        let expected = p_contain(r).unwrap();
        assert_eq!(v.parse::<f64>().unwrap(), expected);
        assert_eq!(v, real(expected));
    }
}

#[test]
fn chord_cdf_table_ends_at_one() {
    let rows = table("chord-cdf", "11");
    assert_eq!(rows.last().unwrap().1, "1");
    assert_eq!(rows[0].1, "0");
}

#[test]
fn table_errors() {
    assert_eq!(inscribed(&["table", "p-contain", "--steps", "1"]).status.code(), Some(2));
    assert_eq!(
        inscribed(&["table", "p-contain", "--r-min", "0.8", "--r-max", "0.2"]).status.code(),
        Some(2)
    );
    let out = inscribed(&["table", "p-contain", "--out", "/nonexistent-dir/t.csv"]);
    assert_eq!(out.status.code(), Some(2));
}

fn records(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn simulate_triangle_record() {
    let args = ["simulate", "triangle", "--r", "0.5", "--seed", "42", "--trials", "1000000"];
    let first = inscribed(&args);
    let second = inscribed(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let recs = records(&first);
    assert_eq!(recs.len(), 1);
    let rec = &recs[0];
    for key in ["experiment", "params", "trials", "seed", "p_hat", "std_err", "closed_form", "z_score"] {
        assert!(rec.get(key).is_some(), "missing {key}");
    }
    assert_eq!(rec["seed"], 42);
    assert_eq!(rec["trials"], 1_000_000);
    assert_eq!(rec["params"]["r"], 0.5);
    assert_eq!(rec["closed_form"].as_f64().unwrap(), p_contain(0.5).unwrap());
    assert!(rec["z_score"].as_f64().unwrap().abs() < 5.0);
}

#[test]
fn simulate_three_circles_records() {
    let out = inscribed(&["simulate", "three-circles", "--trials", "100000"]);
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    for rec in &recs {
        assert_eq!(rec["closed_form"].as_f64().unwrap(), three_circle_probability());
    }
}

#[test]
fn simulate_chords_records() {
    let out = inscribed(&["simulate", "chords", "--r", "0.5,1", "--trials", "100000"]);
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["p_hat"], 1.0);
    let rate = recs[0]["acceptance_rate"].as_f64().unwrap();
    assert!((rate - 1.0 / 3.0).abs() < 0.01);
}

#[test]
fn simulate_usage_errors() {
    assert_eq!(inscribed(&["simulate", "triangle", "--r", "2"]).status.code(), Some(2));
    assert_eq!(inscribed(&["simulate", "chords"]).status.code(), Some(2));
    assert_eq!(inscribed(&["simulate", "triangle", "--r", "0.5", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(inscribed(&["verify", "--suite", "dilog"]).status.code(), Some(0));
    assert_eq!(inscribed(&["verify", "--suite", "dilog", "--tol", "0"]).status.code(), Some(1));
    assert_eq!(inscribed(&["verify", "--suite", "dilog", "--tol", "dilog=0"]).status.code(), Some(1));
    assert_eq!(inscribed(&["verify", "--suite", "dilog", "--tol", "abc"]).status.code(), Some(2));
    assert_eq!(inscribed(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_quadrature_json() {
    let out = inscribed(&["verify", "--suite", "quadrature", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["overall_pass"], true);
    let names: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"I_equals_pi_li2"));
}

#[test]
fn verify_all_json_passes() {
    let out = inscribed(&["verify", "--suite", "all", "--json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["overall_pass"], true, "{doc:#}");
    assert_eq!(out.status.code(), Some(0));
    let checks = doc["checks"].as_array().unwrap();
    let all_pass = checks.iter().all(|c| c["pass"] == true);
    assert_eq!(doc["overall_pass"], all_pass);
}
