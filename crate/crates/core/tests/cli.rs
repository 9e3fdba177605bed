use std::process::{Command, Output};

use lrx_core::verifier::VerificationReport;
use lrx_core::{GenWord, Permutation};

fn lrx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrx"))
        .args(args)
        .env_remove("LRX_MEMORY_BUDGET")
        .env_remove("LRX_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn formula_bound() {
    let out = lrx(&["formula", "bound", "--n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "45\n");
}

#[test]
fn distance_of_reflection() {
    for method in ["bfs", "bidir"] {
        let out = lrx(&[
            "distance", "--n", "4", "--from", "s*r^2", "--to", "id", "--method", method,
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "6\n");
    }
}

#[test]
fn decompose_theorem_word() {
    let out = lrx(&["decompose", "--n", "5", "--theorem-i", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let word = GenWord::parse(text.lines().next().unwrap(), 5).unwrap();
    assert_eq!(word.len(), 10);
    let start = Permutation::parse("s*r^3", 5).unwrap();
    assert!(word.apply(&start).unwrap().is_identity());
}

#[test]
fn diameter_over_budget_exits_3() {
    let out = lrx(&["diameter", "--n", "13"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = lrx(&["sort-everything"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn rank_and_unrank_invert() {
    let out = lrx(&["rank", "--n", "5", "--perm", "[3 1 5 2 4]"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout(&out).trim().to_string();
    let out = lrx(&["unrank", "--n", "5", "--index", &r]);
    assert_eq!(stdout(&out), "3 1 5 2 4\n");
}

#[test]
fn env_overrides_and_flag_precedence() {
    let out = Command::new(env!("CARGO_BIN_EXE_lrx"))
        .args(["diameter", "--n", "9"])
        .env("LRX_MEMORY_BUDGET", "64M")
        .env("LRX_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("36\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_lrx"))
        .args(["diameter", "--n", "12", "--memory-budget", "64M"])
        .env("LRX_MEMORY_BUDGET", "4G")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_lrx"))
        .args(["formula", "bound", "--n", "4"])
        .env("LRX_MEMORY_BUDGET", "1K")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("lemma.json");
    let out = lrx(&[
        "verify",
        "lemma",
        "--n-max",
        "6",
        "--oracle",
        "--format",
        "json",
        "--output",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report = VerificationReport::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(report.passed());
    assert_eq!(report.summary.discrepancies, 0);

    let csv = dir.path().join("bound.csv");
    let out = lrx(&[
        "verify",
        "bound",
        "--n-max",
        "8",
        "--oracle",
        "--strict",
        "--format",
        "csv",
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 5);
    assert!(text.starts_with("n,params,formula,builder_len,builder_valid,oracle,equal\n"));
}

#[test]
fn same_flags_same_bytes() {
    let args = [
        "verify", "theorem", "--n-max", "7", "--oracle", "--format", "json",
    ];
    let a = lrx(&args);
    let b = lrx(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
