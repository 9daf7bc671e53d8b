use std::path::PathBuf;

use graph_energy::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("graph-energy").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = call(args);
    assert_eq!(code, EXIT_OK, "{out}");
    serde_json::from_str(&out).unwrap()
}

fn corpus(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("graph-energy-{}-{name}.g6", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn energy_of_p4_k4_p3() {
    let (code, out) = call(&["energy", "Ch"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("energy 4.4721359550") && out.contains("det 1\n"), "{out}");
    let (_, out) = call(&["energy", "C~"]);
    assert!(out.contains("energy 6.0000000000") && out.contains("det -3\n"), "{out}");
    let r = json(&["energy", "Bg", "--format", "json"]);
    assert_eq!(r["singular"], Value::Bool(true));
    assert_eq!(r["verdicts"]["conjecture2"]["verdict"], "not_applicable");
    assert_eq!(r["bounds"]["log"], Value::Null);
}

#[test]
fn bounds_verdicts() {
    let r = json(&["bounds", "Ch", "--format", "json"]);
    assert_eq!(r["verdicts"]["conjecture2"]["verdict"], "fail");
    let margin = r["verdicts"]["conjecture2"]["margin"].as_f64().unwrap();
    assert!((margin + 0.0279).abs() < 1e-4);
    let r = json(&["bounds", "C~", "--format", "json"]);
    assert_eq!(r["verdicts"]["conjecture2"]["verdict"], "pass");
    assert!(r["verdicts"]["conjecture2"]["margin"].as_f64().unwrap().abs() <= 1e-8);
    assert_eq!(r["det"], "-3");
    let r = json(&["bounds", "EhEG", "--format", "json"]);
    let cov: Vec<&str> = r["coverage"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert!(cov.contains(&"Bipartite") && cov.contains(&"Regular"), "{cov:?}");
}

#[test]
fn report_keys_are_stable() {
    for g in ["Ch", "Bg", "EhEG", "@"] {
        let r = json(&["bounds", g, "--format", "json"]);
        for key in ["n", "m", "avg_degree", "det", "energy", "bounds", "verdicts", "coverage"] {
            assert!(r.get(key).is_some(), "{g}: missing {key}");
        }
        assert!(r["det"].is_string());
    }
}

#[test]
fn classify_text() {
    let (code, out) = call(&["classify", "EhEG"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("coverage Regular"), "{out}");
    let (_, out) = call(&["classify", "Ch"]);
    assert!(out.contains("coverage not_applicable"), "{out}");
}

#[test]
fn scan_orders() {
    let s = json(&["scan", "4", "--format", "json"]);
    assert_eq!(s["conjecture2_violations"].as_array().unwrap().len(), 2);
    assert_eq!(s["unexpected_violations"], 0);
    let (code, out) = call(&["scan", "7", "--workers", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("conjecture2_violations 0"), "{out}");
}

#[test]
fn scan_corpus_counts_singular() {
    let p = corpus("three", "C~\nCh\nCX\n");
    let s = json(&["scan", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(s["total_graphs"], 3);
    assert_eq!(s["nonsingular_count"], 2);
    assert_eq!(s["order"], Value::Null);
}

#[test]
fn scan_corpus_parse_errors() {
    let p = corpus("bad", "C~\nnot graph6\nCh\n");
    let s = json(&["scan", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(s["total_graphs"], 2);
    assert_eq!(s["parse_errors"].as_array().unwrap().len(), 1);
    let (code, _) = call(&["scan", p.to_str().unwrap(), "--strict"]);
    assert_eq!(code, EXIT_FAILURE);
}

#[test]
fn csv_and_json_agree() {
    let s = json(&["scan", "4", "--format", "json"]);
    let (_, csv) = call(&["scan", "4", "--format", "csv"]);
    let mut rows = csv::Reader::from_reader(csv.as_bytes());
    let violations: Vec<_> = rows
        .records()
        .map(|r| r.unwrap())
        .filter(|r| &r[0] == "conjecture2_violation")
        .collect();
    let listed = s["conjecture2_violations"].as_array().unwrap();
    assert_eq!(violations.len(), listed.len());
    for (row, v) in violations.iter().zip(listed) {
        assert_eq!(&row[1], v["graph6"].as_str().unwrap());
        for (col, key) in [(3, "energy"), (4, "target"), (5, "margin")] {
            let a: f64 = row[col].parse().unwrap();
            assert_eq!(a, v[key].as_f64().unwrap(), "{key}");
        }
    }
}

#[test]
fn usage_and_limits() {
    assert_eq!(call(&["scan", "10"]).0, EXIT_USAGE);
    assert_eq!(call(&["scan", "11", "--allow-long"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--grid-points", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["scan", "5", "--workers", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["energy"]).0, EXIT_USAGE);
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn verify_small_run() {
    let (code, out) = call(&["verify", "--grid-points", "1000", "--max-order", "6"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    assert!(out.contains("PASS dominance_chain"));
}
