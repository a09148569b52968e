//! End-to-end tests against the built binary: exit codes, output
//! determinism, and JSON round-tripping.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_segre-bn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_threads(args: &[&str], threads: &str) -> Output {
    bin()
        .args(args)
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn rho_examples_and_exit_codes() {
    let out = run(&["rho", "4", "1", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["rho"], 0);
    assert_eq!(v["result"]["wrd_nonempty"], true);

    let out = run(&["rho", "4", "2", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["rho"], -5);
    assert_eq!(v["result"]["wrd_nonempty"], false);

    // g < 3 is a usage error.
    let out = run(&["rho", "2", "1", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verdict_examples() {
    let out = run(&["verdict", "6", "1", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["feasible"], true);
    let data = &v["result"]["reason"]["witness"]["data"];
    assert_eq!(data["d1"], 4);
    assert_eq!(data["d2"], 6);

    let out = run(&["verdict", "30", "1", "2", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["feasible"], false);
    assert_eq!(v["result"]["reason"]["kind"], "BoundViolated");
    assert_eq!(v["result"]["reason"]["bound"], "270");

    let out = run(&["verdict", "11", "1", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["feasible"], false);
    assert_eq!(v["result"]["reason"]["kind"], "ProductMismatch");

    // Empty rank list is a usage error.
    let out = run(&["verdict", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_examples() {
    let out = run(&["enumerate", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let pairs: Vec<(i64, i64)> = v["result"]["two_factor"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| (w["r1"].as_i64().unwrap(), w["r2"].as_i64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![(1, 5), (2, 3), (3, 2), (5, 1)]);
    assert_eq!(v["result"]["triples"].as_array().unwrap().len(), 1);
    assert_eq!(
        v["result"]["triples"][0]["ranks"],
        serde_json::json!([1, 1, 1])
    );

    let out = run(&["enumerate", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["result"]["two_factor"].as_array().unwrap().is_empty());
    assert!(v["result"]["triples"].as_array().unwrap().is_empty());

    let out = run(&["enumerate", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["two_factor"].as_array().unwrap().len(), 1);
    assert!(v["result"]["triples"].as_array().unwrap().is_empty());
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--gmax", "50", "--maxn", "4", "--maxrank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("discrepancies"));

    let out = run(&["verify", "--gmin", "60", "--gmax", "10"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "--gmax", "100", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_env_variable_is_honored() {
    let out = bin()
        .args(["verify", "--gmax", "100"])
        .env("SEGRE_BN_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bound_command() {
    let out = run(&["bound", "--q", "2", "1", "1", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["theorem2_bound"], "10");
    assert_eq!(v["result"]["prop4_weak_bound"], "8/3");

    let out = run(&["bound", "1", "2", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["result"]["theorem2_bound"]["error"],
        "nonpositive-denominator"
    );
}

#[test]
fn csv_has_fixed_columns() {
    let out = run(&["rho", "4", "1", "3", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("command,inputs,result,citations"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("rho,"));
}

#[test]
fn acceptance_7_json_output_is_deterministic() {
    for args in [
        vec!["rho", "10", "1", "6", "--format", "json"],
        vec!["verdict", "12", "1", "5", "--format", "json"],
        vec!["enumerate", "36", "--format", "json"],
        vec!["bound", "--q", "1", "1", "2", "4", "--format", "json"],
        vec![
            "verify",
            "--gmax",
            "40",
            "--maxn",
            "4",
            "--maxrank",
            "4",
            "--format",
            "json",
        ],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");

        // Round trip: parse and re-serialize, byte-identical.
        let text = stdout(&a);
        let v: serde_json::Value = serde_json::from_str(text.trim_end()).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), text.trim_end());
    }

    // Worker count must not affect the bytes.
    let sweep = vec![
        "verify",
        "--gmax",
        "60",
        "--maxn",
        "5",
        "--maxrank",
        "4",
        "--format",
        "json",
    ];
    let single = run_with_threads(&sweep, "1");
    let many = run_with_threads(&sweep, "8");
    assert_eq!(single.stdout, many.stdout);

    println!("ACCEPTANCE 7 (deterministic JSON output): PASS");
}
