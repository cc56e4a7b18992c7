use std::process::{Command, Output};

use thom_core::jets::{compose, local_algebra};
use thom_core::verify::{catalogue_to_string, sigma1_oracle, VerificationReport};
use thom_core::{ChernSeries, Expansion, Family, JetMap, LocalAlgebraReport, Partition, Polynomial, Rational};

fn thom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thom")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

#[test]
fn conjugate_inline() {
    let out = thom(&["conjugate", "[3,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[2,1,1]");
}

#[test]
fn schur_parses_back() {
    let out = thom(&["schur", "[2,1]"]);
    let p: Polynomial = serde_json::from_str(stdout(&out).trim()).unwrap();
    let c = |i| Polynomial::var(Family::C.var(i));
    assert_eq!(p, &(&c(1) * &c(2)) - &c(3));
    assert_eq!(stdout(&thom(&["--human", "schur", "[2,1]"])).trim(), "c1*c2 - c3");
}

#[test]
fn relative_classes_of_equal_series_are_trivial() {
    let s = serde_json::to_string(&ChernSeries::<Rational>::symbolic(&Family::C, 4)).unwrap();
    let out = thom(&["relchern", "--trunc", "4", &s, &s]);
    assert!(out.status.success());
    let rel: ChernSeries<Rational> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(rel.is_one());
    assert_eq!(rel.truncation(), 4);
    // without --trunc the result runs to twice the top degree of the inputs
    let rel: ChernSeries<Rational> = serde_json::from_str(stdout(&thom(&["relchern", &s, &s])).trim()).unwrap();
    assert!(rel.is_one());
    assert_eq!(rel.truncation(), 8);
}

#[test]
fn lr_and_grassmann_products() {
    let lr: Expansion = serde_json::from_str(stdout(&thom(&["lr", "[1]", "[1]"])).trim()).unwrap();
    let expected: Expansion =
        [(Partition::new(vec![2]).unwrap(), q(1)), (Partition::new(vec![1, 1]).unwrap(), q(1))].into_iter().collect();
    assert_eq!(lr, expected);
    // on Gr(1, 2) the square of the point class leaves the box
    let out = thom(&["grassmann", "product", "[1]", "[1]", "--n", "1", "--N", "2"]);
    assert_eq!(stdout(&out).trim(), "{}");
    let out = thom(&["grassmann", "pair", "[2,2]", "[]", "--n", "2", "--N", "4"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn jets_agree_with_the_library() {
    let inner = JetMap::from_terms(1, 1, 2, [(0, vec![1], q(1)), (0, vec![2], q(1))]).unwrap();
    let outer = JetMap::from_terms(1, 1, 2, [(0, vec![1], q(2))]).unwrap();
    let (a, b) = (serde_json::to_string(&inner).unwrap(), serde_json::to_string(&outer).unwrap());
    let out = thom(&["compose", &a, &b]);
    let got: JetMap<Rational> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(got, compose(&inner, &outer).unwrap());

    let cusp = JetMap::from_terms(1, 1, 3, [(0, vec![3], q(1))]).unwrap();
    let out = thom(&["localalg", &serde_json::to_string(&cusp).unwrap()]);
    let report: LocalAlgebraReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report, local_algebra(&cusp));
}

#[test]
fn verify_reads_a_catalogue_and_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let catalogue = dir.path().join("cat.jsonl");
    let entries: Vec<_> = (1..=3).map(|k| sigma1_oracle(k, 6).unwrap()).collect();
    std::fs::write(&catalogue, catalogue_to_string(&entries).unwrap()).unwrap();
    let report_path = dir.path().join("out.txt");
    let out = thom(&["-o", report_path.to_str().unwrap(), "verify", catalogue.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&report_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.last(), Some(&"PASS 3/3"));
    for line in &lines[..3] {
        let r: VerificationReport = serde_json::from_str(line).unwrap();
        assert!(r.passed());
    }
    // identical output on a second run
    let again = thom(&["verify", catalogue.to_str().unwrap()]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn oracle_output_is_a_catalogue_line() {
    let out = thom(&["oracle", "sigma1", "--k", "2"]);
    assert!(out.status.success());
    let entry: thom_core::CatalogueEntry = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(entry, sigma1_oracle(2, entry.codim * 2).unwrap());
}

#[test]
fn errors_and_exit_codes() {
    let missing = thom(&["verify", "/nonexistent/catalogue.jsonl"]);
    assert_eq!(missing.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&missing.stderr).unwrap();
    assert_eq!(err["kind"], "Io");

    let bad = thom(&["conjugate", "[1,3]"]);
    assert_eq!(bad.status.code(), Some(1));

    assert_eq!(thom(&[]).status.code(), Some(2));
    assert_eq!(thom(&["twist", "--rank", "1"]).status.code(), Some(2));
}
