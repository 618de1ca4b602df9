use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::tempdir;

fn ktdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn gen_then_compute_complete_six() {
    let dir = tempdir().unwrap();
    let graph = dir.path().join("k6.txt");
    let report = dir.path().join("report.json");
    let certs = dir.path().join("certs.json");

    let out = ktdom(&["gen", "complete:6", "-o", path_str(&graph)]);
    assert!(out.status.success());
    let text = fs::read_to_string(&graph).unwrap();
    assert!(text.starts_with("n 6\n"));
    assert_eq!(text.lines().count(), 1 + 15);

    let out = ktdom(&[
        "compute",
        "-i",
        path_str(&graph),
        "-k",
        "2",
        "-r",
        path_str(&report),
        "--certificate",
        path_str(&certs),
        "--oracle",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = read_json(&report);
    assert_eq!(r["gamma"]["value"], 2);
    assert_eq!(r["domatic"]["value"], 3);
    assert_eq!(r["gamma_total"]["value"], 3);
    assert_eq!(r["domatic_total"]["value"], 2);
    let c = read_json(&certs);
    assert_eq!(c["gamma_set"].as_array().unwrap().len(), 2);
    assert_eq!(
        c["domatic_partition"]["classes"].as_array().unwrap().len(),
        3
    );
}

#[test]
fn gen_output_round_trips() {
    let dir = tempdir().unwrap();
    let first = dir.path().join("a.txt");
    let second = dir.path().join("b.txt");
    assert!(
        ktdom(&["gen", "gnp:9,0.4", "--seed", "17", "-o", path_str(&first)])
            .status
            .success()
    );
    // An inline seed and --seed describe the same graph.
    let out = ktdom(&[
        "compute",
        "-i",
        path_str(&first),
        "-k",
        "1",
        "-r",
        path_str(&second),
    ]);
    assert!(out.status.success());
    let again = ktdom(&["gen", "gnp:9,0.4,17"]);
    assert_eq!(
        fs::read_to_string(&first).unwrap(),
        String::from_utf8(again.stdout).unwrap()
    );
}

#[test]
fn verify_flags_sharp_domatic_pair() {
    let dir = tempdir().unwrap();
    let report = dir.path().join("verify.json");
    let out = ktdom(&[
        "verify",
        "-g",
        "clique-chain:2",
        "-k",
        "2",
        "-r",
        path_str(&report),
    ]);
    assert!(out.status.success());
    let r = read_json(&report);
    let check = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "C9-upper")
        .unwrap()
        .clone();
    assert_eq!(check["status"], "sharp");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr
        .lines()
        .any(|l| l.starts_with("C9-upper") && l.contains("sharp")));
}

#[test]
fn verify_exits_one_on_violation() {
    let out = ktdom(&["verify", "-g", "complete:3", "-k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("violated"));
}

#[test]
fn ensemble_is_reproducible() {
    let dir = tempdir().unwrap();
    let run = |name: &str, threads: &str| {
        let csv = dir.path().join(name);
        let out = ktdom(&[
            "ensemble",
            "--model",
            "gnp",
            "--n",
            "8",
            "--p",
            "0.5",
            "--count",
            "25",
            "--seed",
            "42",
            "-k",
            "2",
            "--oracle",
            "--threads",
            threads,
            "--csv",
            path_str(&csv),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        fs::read(&csv).unwrap()
    };
    let a = run("a.csv", "1");
    let b = run("b.csv", "4");
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 26);
    assert!(text
        .lines()
        .next()
        .unwrap()
        .starts_with("id,model,n,param,seed,"));
    assert!(!text.contains("mismatch"));
}

#[test]
fn ensemble_summary_and_regular_model() {
    let dir = tempdir().unwrap();
    let summary = dir.path().join("summary.json");
    let out = ktdom(&[
        "ensemble",
        "--model",
        "random-regular",
        "--n",
        "10",
        "--r",
        "4",
        "--count",
        "6",
        "--seed",
        "1",
        "-k",
        "2",
        "--summary",
        path_str(&summary),
        "--timing",
    ]);
    assert!(out.status.code().is_some_and(|c| c <= 1));
    let s = read_json(&summary);
    assert_eq!(s["count"], 6);
    assert_eq!(s["param"], "r=4");
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.lines().next().unwrap().ends_with(",wall_ms"));
}

#[test]
fn error_paths_exit_two() {
    let dir = tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "n 3\n0 0\n").unwrap();
    assert_eq!(
        ktdom(&["compute", "-i", path_str(&bad), "-k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ktdom(&[
            "compute",
            "-i",
            path_str(&dir.path().join("missing.txt")),
            "-k",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        ktdom(&[
            "ensemble", "--model", "gnp", "--n", "5", "--count", "1", "--seed", "0", "-k", "1"
        ])
        .status
        .code(),
        Some(2)
    );
    // clap usage errors also exit with 2.
    assert_eq!(
        ktdom(&["compute", "-g", "complete:4", "-k", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ktdom(&["gen", "nonsense:4"]).status.code(), Some(2));
}
