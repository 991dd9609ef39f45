use std::path::PathBuf;
use std::process::{Command, Output};

use logder::classify::{ClassificationReport, NT2Report, Verdict};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn arrtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrtool")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("arrtool-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn ds_prints_degree_sequence() {
    let o = arrtool(&["ds", data("same_lattice_b.arr").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "DS = (1, 5, 6, 6)\n");
}

#[test]
fn ds_json_is_a_list() {
    let o = arrtool(&["--json", "ds", data("boolean3.arr").to_str().unwrap()]);
    let v: Vec<i64> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, vec![1, 1, 1]);
}

#[test]
fn missing_file_exits_two() {
    let o = arrtool(&["ds", "/definitely/not/here.arr"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_file_exits_two() {
    let p = scratch("bad.arr", "vars: 3\nform: x1 +\n");
    let o = arrtool(&["ds", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn precondition_failure_exits_one() {
    let o = arrtool(&["nt1", data("same_lattice_c.arr").to_str().unwrap(), "--i", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = arrtool(&["nt1", data("boolean3.arr").to_str().unwrap(), "--i", "9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn nt2_seven_lines() {
    let o = arrtool(&["--json", "nt2", data("seven_lines.arr").to_str().unwrap(), "--i", "2", "--j", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let r: NT2Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.a_ij.verdict, Verdict::Spog);
    assert_eq!(r.a_ij.po_exponents, Some(vec![1, 2, 3]));
    assert_eq!(r.a_ij.level, Some(3));
    let tag = r.case_tag.unwrap().to_string();
    assert!(tag == "NT2-case2.1" || tag == "NT2-case2.2", "{tag}");
}

#[test]
fn classify_json_round_trips() {
    let o = arrtool(&["--json", "classify", data("ten_lines_no_free_addition.arr").to_str().unwrap()]);
    let text = stdout(&o);
    let r: ClassificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.verdict, Verdict::Free);
    assert_eq!(r.exponents, Some(vec![1, 3, 6]));
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
}

#[test]
fn delete_emits_a_parsable_file() {
    let o = arrtool(&["delete", data("seven_lines.arr").to_str().unwrap(), "--indices", "2,5"]);
    assert_eq!(o.status.code(), Some(0));
    let p = scratch("deleted.arr", &stdout(&o));
    let o = arrtool(&["classify", p.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("verdict: SPOG"), "{text}");
    assert!(text.contains("PO-exponents: (1, 2, 3)"), "{text}");
}

#[test]
fn resolve_shape() {
    let o = arrtool(&["resolve", data("boolean3.arr").to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().next(), Some("0 → S[-1]^3 → D → 0"));
}

#[test]
fn oracle_defaults_to_arrangement_size() {
    let o = arrtool(&["oracle", data("boolean3.arr").to_str().unwrap()]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("degree\tdim\tnew_generators"));
    assert_eq!(text.lines().count(), 1 + 4);
    let o = arrtool(&["oracle", data("boolean3.arr").to_str().unwrap(), "--max-degree", "1"]);
    assert_eq!(stdout(&o), "degree\tdim\tnew_generators\n0\t0\t0\n1\t3\t3\n");
}

#[test]
fn multiarrangement_input() {
    let p = scratch("multi.arr", "vars: 2\nform: x1\nmult: 2\nform: x2\n");
    let o = arrtool(&["ds", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "DS = (1, 2)\n");
    let o = arrtool(&["nt1", p.to_str().unwrap(), "--i", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let file = data("eleven_lines.arr");
    let args = ["--json", "nt2", file.to_str().unwrap(), "--i", "4", "--j", "8"];
    assert_eq!(arrtool(&args).stdout, arrtool(&args).stdout);
}

#[test]
fn verify_paper_reports_every_expectation() {
    let o =
        Command::new(env!("CARGO_BIN_EXE_arrtool")).arg("verify-paper").env("ARRTOOL_THREADS", "2").output().unwrap();
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    let (pass, fail) = lines
        .iter()
        .fold((0, 0), |(p, f), l| (p + l.starts_with("PASS ") as usize, f + l.starts_with("FAIL ") as usize));
    assert_eq!(pass + fail + 1, lines.len());
    assert!(pass > 50);
    // the exit status mirrors whether every expectation held
    assert_eq!(o.status.code(), Some(if fail == 0 { 0 } else { 1 }));
}
