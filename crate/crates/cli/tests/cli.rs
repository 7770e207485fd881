use std::process::Command;

use qcsd_cli::analyze::{analyze, AnalysisReport};
use qcsd_cli::known::KnownParams;
use qcsd_cli::table::TABLE;
use qcsd_cli::verify::{verify_entries, Status};

fn qcsd(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcsd"))
        .args(args)
        .output()
        .expect("qcsd runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn without_timing(text: &str) -> Vec<&str> {
    text.lines()
        .filter(|l| !l.starts_with("elapsed_ms"))
        .collect()
}

#[test]
fn json_report_reproduces_text_report() {
    let known = KnownParams::literature();
    for (poly, k) in [("1101", 9), ("1011001", 15), ("1111111", 7), ("1", 12)] {
        let report = analyze(poly, k, 2, &known).unwrap();
        let back: AnalysisReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back.to_text(), report.to_text());
        assert_eq!(back, report);
    }
}

#[test]
fn binary_json_and_text_agree() {
    let args = [
        "analyze",
        "--poly",
        "1011001",
        "--k",
        "15",
        "--threads",
        "2",
    ];
    let (text_code, text) = qcsd(&args);
    let (json_code, json) = qcsd(&[&args[..], &["--json"]].concat());
    let report: AnalysisReport = serde_json::from_str(&json).unwrap();
    assert_eq!(text_code, json_code);
    assert_eq!(text_code, report.exit_code());
    assert_eq!(without_timing(&report.to_text()), without_timing(&text));
}

#[test]
fn reversal_gives_the_same_code_parameters() {
    let known = KnownParams::literature();
    for (poly, k) in [
        ("1101001", 11),
        ("1011001", 15),
        ("110100111", 21),
        ("1110001", 17),
    ] {
        let rev: String = poly.chars().rev().collect();
        let a = analyze(poly, k, 2, &known).unwrap();
        let b = analyze(&rev, k, 2, &known).unwrap();
        assert_eq!(a.q, rev);
        assert_eq!(
            (a.d, a.beta, a.gamma, a.family, &a.distribution),
            (b.d, b.beta, b.gamma, b.family, &b.distribution),
            "{poly} at k={k}"
        );
    }
}

#[test]
fn verify_outcomes_do_not_depend_on_workers() {
    let known = KnownParams::literature();
    let entries: Vec<_> = TABLE
        .iter()
        .filter(|e| e.window == 11 || !e.is_consistent())
        .copied()
        .collect();
    let outcomes = |workers| {
        let summary = verify_entries(&entries, workers, false, &known, |_| {}).unwrap();
        summary
            .results
            .iter()
            .map(|r| {
                (
                    r.entry.poly,
                    r.status.clone(),
                    r.report.as_ref().map(|x| x.distribution.clone()),
                )
            })
            .collect::<Vec<_>>()
    };
    let one = outcomes(1);
    assert_eq!(one, outcomes(8));
    assert_eq!(one.iter().filter(|(_, s, _)| *s == Status::Pass).count(), 1);
    assert_eq!(
        one.iter()
            .filter(|(_, s, _)| *s == Status::DataSuspect)
            .count(),
        2
    );
}

#[test]
fn exit_codes() {
    assert_eq!(qcsd(&["bound", "--n", "70"]), (0, "14\n".to_string()));
    assert_eq!(qcsd(&["bound", "--n", "69"]).0, 1);
    assert_eq!(qcsd(&["bound", "--n", "-2"]).0, 1);
    assert_eq!(qcsd(&["analyze", "--poly", "1111111", "--k", "7"]).0, 2);
    assert_eq!(qcsd(&["analyze", "--poly", "1021"]).0, 1);
    assert_eq!(qcsd(&["analyze", "--poly", "11", "--k", "65"]).0, 1);
    assert_eq!(qcsd(&["search", "--kmin", "9", "--kmax", "4"]).0, 1);
    assert_eq!(qcsd(&["frobnicate"]).0, 1);
    assert_eq!(qcsd(&["--help"]).0, 0);
}

#[test]
fn small_search_formats() {
    let base = [
        "search",
        "--kmin",
        "5",
        "--kmax",
        "9",
        "--weights",
        "5",
        "--k",
        "15",
        "--target-d",
        "6",
        "--threads",
        "2",
    ];
    let (code, csv) = qcsd(&[&base[..], &["--format", "csv"]].concat());
    assert_eq!(code, 0);
    assert!(csv.starts_with("beta,poly,K,ones,gamma,family,novel,d\n"));
    let (code, json) = qcsd(&[&base[..], &["--format", "json"]].concat());
    assert_eq!(code, 0);
    let rows: Vec<qcsd_cli::search::HitRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(csv.lines().count(), rows.len() + 1);
    assert!(rows.iter().all(|r| r.d >= Some(6) && r.ones == 5));
    let (code, text) = qcsd(&base);
    assert_eq!(code, 0);
    assert_eq!(
        text.lines().last().unwrap(),
        format!("{} hit(s)", rows.len())
    );
}
