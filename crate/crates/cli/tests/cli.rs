use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn closest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closest"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn fasta_feasible_exits_zero() {
    let dir = TempDir::new().unwrap();
    let fa = write(&dir, "a.fa", ">r1\nACGT\n>r2\nAGGT\n");
    let out = closest(&["solve-csp", &fa, "--d", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("outcome\tfeasible"));
}

#[test]
fn infeasible_exits_one() {
    let dir = TempDir::new().unwrap();
    let fa = write(&dir, "b.fa", ">r1\nAAAA\n>r2\nTTTT\n");
    for algo in ["treesearch", "exhaustive", "marx"] {
        let out = closest(&["solve-csp", &fa, "--d", "1", "--algo", algo]);
        assert_eq!(code(&out), 1, "{algo}");
    }
}

#[test]
fn over_budget_exits_two() {
    let dir = TempDir::new().unwrap();
    let fa = write(&dir, "b.fa", ">r1\nAAAA\n>r2\nTTTT\n");
    let out = closest(&[
        "solve-csp",
        &fa,
        "--d",
        "1",
        "--algo",
        "exhaustive",
        "--budget-nodes",
        "10",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("refused"));
}

#[test]
fn input_errors_exit_three() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "c.fa", ">r1\nACXT\n");
    let out = closest(&["solve-csp", &bad, "--d", "1"]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("r1") && err.contains("position 2"), "{err}");

    let skipped = write(&dir, "d.fa", ">r1\nACXT\n>r2\nACGT\n");
    assert_eq!(
        code(&closest(&[
            "solve-csp",
            &skipped,
            "--d",
            "0",
            "--skip-invalid"
        ])),
        0
    );

    let ok = write(&dir, "e.fa", ">r1\nACGT\n");
    assert_eq!(code(&closest(&["solve-csp", &ok])), 3, "FASTA without --d");
    assert_eq!(
        code(&closest(&["solve-csp", &ok, "--d", "1", "--algo", "dp"])),
        3,
        "dp on hamming"
    );
    assert_eq!(
        code(&closest(&["solve-csp", "/nonexistent.fa", "--d", "1"])),
        3
    );
    assert_eq!(code(&closest(&["no-such-command"])), 3);
}

#[test]
fn levenshtein_auto_picks_dp() {
    let dir = TempDir::new().unwrap();
    let fa = write(&dir, "l.fa", ">a\nACGTACGT\n>b\nACGTACG\n>c\nCGTACGT\n");
    let out = closest(&["solve-csp", &fa, "--d", "1", "--metric", "levenshtein"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("algorithm\tdp"));
}

#[test]
fn weighted_metric_from_file() {
    let dir = TempDir::new().unwrap();
    let table = r#"{"schema_version":1,"alphabet":"AC","table":[["0","3/2","1"],["3/2","0","1"],["1","1","0"]]}"#;
    let costs = write(&dir, "costs.json", table);
    let fa = write(&dir, "w.fa", ">x\nAC\n>y\nAA\n");
    let metric = format!("weighted:{costs}");
    let out = closest(&[
        "solve-csp",
        &fa,
        "--alphabet",
        "AC",
        "--d",
        "1",
        "--metric",
        &metric,
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("algorithm\texhaustive"));
}

#[test]
fn generated_instances_solve() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("p.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        code(&closest(&[
            "gen-instance",
            "--seed",
            "5",
            "--n",
            "9",
            "--d",
            "2",
            "--output",
            p
        ])),
        0
    );
    assert_eq!(code(&closest(&["solve-csp", p])), 0);

    let motif = dir.path().join("m.json");
    let m = motif.to_str().unwrap();
    let gen = closest(&[
        "gen-instance",
        "--kind",
        "motif",
        "--n",
        "8",
        "--L",
        "4",
        "--d",
        "1",
        "--output",
        m,
    ]);
    assert_eq!(code(&gen), 0);
    let solved = closest(&["solve-cssp", m, "--format", "json"]);
    assert_eq!(code(&solved), 0);
    assert!(stdout(&solved).contains("\"algorithm\": \"marx\""));

    let fasta = closest(&["gen-instance", "--format", "fasta", "--k", "3"]);
    assert_eq!(stdout(&fasta).matches('>').count(), 3);
}

#[test]
fn bench_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = closest(&[
            "bench",
            "--count",
            "6",
            "--seed",
            "17",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
        fs::read(Path::new(&path)).unwrap()
    };
    assert_eq!(run("one.json"), run("two.json"));
}

#[test]
fn analysis_commands() {
    let chain = closest(&["analyze-chain", "--d", "1"]);
    assert_eq!(code(&chain), 0);
    assert!(stdout(&chain).contains("conductance\t1/2"));
    assert_eq!(
        code(&closest(&["analyze-chain", "--d", "9"])),
        2,
        "over the chain cap"
    );

    let tsv = closest(&["cost-model", "--format", "tsv"]);
    assert!(stdout(&tsv).starts_with("algorithm\tdistance_metric\tlog2_cost_terms\tregime\n"));
    let summary = closest(&["cost-model", "--summary"]);
    assert_eq!(stdout(&summary).lines().count(), 4);

    let grover = closest(&["grover-sim", "--n", "64", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&grover.stdout).unwrap();
    assert_eq!(v["iterations"], 6);
    assert!(v["success_probability"].as_f64().unwrap() > 0.9);
}
