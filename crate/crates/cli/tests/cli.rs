use std::io::Write;
use std::process::{Command, Output};

use betti_core::decomposition::Decomposition;
use betti_core::BettiDiagram;

fn betti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betti"))
        .args(args)
        .output()
        .expect("run betti")
}

fn out(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn err(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn pure_table_and_json() {
    let o = betti(&["pure", "--degrees", "0,1,2,4"]);
    assert!(o.status.success());
    assert!(out(&o).starts_with("       0   1 2   3\ntotal: 1 8/3 2 1/3\n"));
    let o = betti(&["pure", "--degrees", "-1,0,2", "--json"]);
    let d = BettiDiagram::parse_json(&out(&o)).unwrap();
    assert_eq!(d.to_json_string(), out(&o).trim_end());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["pure", "--degrees", "0,2,1"],
        vec!["pure", "--degrees", "0,x"],
        vec!["verify-lemmas", "--samples", "5"],
        vec!["scan", "--s-max", "9", "--d-max", "12", "--mode", "shape-verify"],
        vec!["scan", "--s-max", "2", "--d-max", "5", "--mode", "nope"],
        vec!["asymptotic", "--codim", "2", "--delta", "1", "--defect", "0", "--j", "3", "--t-max", "2"],
        vec!["monomial-betti", "--family", "no-such(1)"],
        vec!["decompose", "/nonexistent/file.json"],
    ] {
        let o = betti(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", err(&o));
    }
    let o = betti(&["pure", "--degrees", "3,3"]);
    let line = err(&o);
    assert_eq!(line.lines().count(), 1);
    assert!(line.starts_with("betti: invalid-sequence: "), "{line}");
}

#[test]
fn findings_exit_one() {
    let gap = temp(r#"{"entries":[{"i":0,"j":0,"value":"1"},{"i":2,"j":2,"value":"1"}]}"#);
    let o = betti(&["decompose", gap.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(err(&o).starts_with("betti: not-in-cone: "));

    let o = betti(&["scan", "--s-min", "2", "--s-max", "2", "--d-max", "4", "--mode", "find-violations"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(out(&o).lines().any(|l| l.starts_with("0,1,3;2;false;false;1;")));
}

#[test]
fn decompose_round_trips_through_json() {
    let f = temp(r#"{"entries":[{"i":0,"j":0,"value":"1"},{"i":1,"j":2,"value":"2"},{"i":2,"j":3,"value":"1"}]}"#);
    let o = betti(&["decompose", f.path().to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let dec = Decomposition::parse_json(&out(&o)).unwrap();
    assert_eq!(dec.to_json_string(), out(&o).trim_end());
    let o = betti(&["decompose", f.path().to_str().unwrap()]);
    assert_eq!(out(&o), "1/2 * pi(0,2,3)\n1/2 * pi(0,2)\nbounds: ok (codim 1, pd 2)\n");
}

#[test]
fn check_beh_translates_generators() {
    let f = temp(r#"{"entries":[{"i":0,"j":2,"value":"1"},{"i":1,"j":4,"value":"3"},{"i":2,"j":5,"value":"2"}]}"#);
    let o = betti(&["check-beh", f.path().to_str().unwrap(), "--json"]);
    assert!(o.status.success(), "{}", err(&o));
    assert!(err(&o).contains("translated by -2"));
    let v: serde_json::Value = serde_json::from_str(&out(&o)).unwrap();
    assert_eq!(v["hypothesis_met"], true);
    assert_eq!(v["overall"], true);
}

#[test]
fn scan_csv_is_deterministic() {
    let args = ["scan", "--s-max", "4", "--d-max", "9", "--mode", "shape-verify"];
    let (a, b) = (betti(&args), betti(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = out(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("degrees;s;shape;beh_pass;first_violating_j;betti_totals"));
    assert!(lines.all(|l| l.split(';').nth(2) == Some("true")));
}

#[test]
fn verify_lemmas_is_reproducible() {
    let args = ["verify-lemmas", "--samples", "200", "--seed", "5", "--s-max", "6", "--json"];
    let (a, b) = (betti(&args), betti(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&out(&a)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn asymptotic_table() {
    let o = betti(&["asymptotic", "--codim", "3", "--delta", "1", "--defect", "1", "--j", "2", "--t-max", "5"]);
    assert!(o.status.success());
    assert_eq!(out(&o).lines().nth(5), Some("5\t25/4\t27/2"));
    let o = betti(&[
        "asymptotic", "--codim", "2", "--delta", "2", "--defect", "0", "--j", "1", "--t-max", "3", "--tail", "0", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out(&o)).unwrap();
    assert_eq!(v[0]["exact_bound"], "4");
    assert_eq!(v[0]["b_j"], "4");
    assert_eq!(v[2]["leading"], "6");
    let o = betti(&[
        "asymptotic", "--codim", "2", "--delta", "2", "--defect", "0", "--j", "1", "--t-max", "3", "--tail", "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).starts_with("betti: constraint-error"));
}

#[test]
fn monomial_betti_from_file_and_family() {
    let f = temp(r#"{"nvars": 2, "generators": [[2,0],[1,1],[0,2]]}"#);
    let a = betti(&["monomial-betti", f.path().to_str().unwrap(), "--json"]);
    let b = betti(&["monomial-betti", "--family", "power-of-maximal(2,2)", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let d = BettiDiagram::parse_json(&out(&a)).unwrap();
    assert_eq!(d, BettiDiagram::from_ints(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
}
