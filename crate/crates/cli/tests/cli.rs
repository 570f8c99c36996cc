use std::path::Path;
use std::process::{Command, Output};

fn xdist(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xdist"))
        .current_dir(dir)
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

#[test]
fn gen_hypercube_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = xdist(dir.path(), &["gen", "hypercube", "4", "-o", "q4.xdg"]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("q4.xdg")).unwrap();
    assert!(text.starts_with("xdg n=16 loops=0"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 32);
}

#[test]
fn gen_formats() {
    let dir = tempfile::tempdir().unwrap();
    let dimacs = stdout(&xdist(dir.path(), &["gen", "cycle", "5", "--format", "dimacs"]));
    assert!(dimacs.lines().any(|l| l == "p edge 5 5"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&xdist(dir.path(), &["gen", "complete", "4", "--format", "json"]))).unwrap();
    assert_eq!(json["order"], 4);
    assert_eq!(json["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_cartesian_prints_one_pass_line_per_trial() {
    let dir = tempfile::tempdir().unwrap();
    let out = xdist(
        dir.path(),
        &["verify", "cartesian-identity", "--n", "6", "--p", "3", "--trials", "50", "--seed", "7"],
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains(" pass ")).count(), 50);
    assert!(text.ends_with("50 of 50 passed\n"));
}

#[test]
fn seeded_json_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "strong-identity", "--n", "5", "--p", "2", "--trials", "10", "--seed", "11", "--format", "json"];
    let a = xdist(dir.path(), &args);
    let b = xdist(dir.path(), &args);
    assert_eq!(code(&a), 0);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);

    let g = ["gen", "random", "12", "0.4", "--seed", "3", "--format", "json"];
    assert_eq!(xdist(dir.path(), &g).stdout, xdist(dir.path(), &g).stdout);
    let other = ["gen", "random", "12", "0.4", "--seed", "4", "--format", "json"];
    assert_ne!(xdist(dir.path(), &g).stdout, xdist(dir.path(), &other).stdout);
}

#[test]
fn xdist_and_product_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&xdist(dir.path(), &["gen", "hypercube", "3", "-o", "q3.xdg"])), 0);
    let out = xdist(dir.path(), &["xdist", "q3.xdg", "--p", "3", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["edges"].as_array().unwrap().len(), 4);

    xdist(dir.path(), &["gen", "path", "3", "-o", "p3.xdg"]);
    xdist(dir.path(), &["gen", "complete", "2", "-o", "k2.dimacs", "--format", "dimacs"]);
    let out = xdist(dir.path(), &["product", "cartesian", "p3.xdg", "k2.dimacs", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["order"], 6);
    assert_eq!(json["edges"].as_array().unwrap().len(), 7);
}

#[test]
fn chi_exact_and_budget_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    xdist(dir.path(), &["gen", "cycle", "7", "-o", "c7.xdg"]);
    let out = xdist(dir.path(), &["chi", "exact", "c7.xdg"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["chi"], 3);
    assert_eq!(code(&xdist(dir.path(), &["chi", "exact", "c7.xdg", "--budget-nodes", "1"])), 3);
}

#[test]
fn chi_validate() {
    let dir = tempfile::tempdir().unwrap();
    xdist(dir.path(), &["gen", "cycle", "4", "-o", "c4.xdg"]);
    std::fs::write(dir.path().join("good.json"), r#"{"order":4,"count":2,"colors":[1,2,1,2]}"#).unwrap();
    std::fs::write(dir.path().join("bad.json"), r#"{"order":4,"count":2,"colors":[1,1,2,2]}"#).unwrap();
    assert_eq!(code(&xdist(dir.path(), &["chi", "validate", "c4.xdg", "good.json"])), 0);
    assert_eq!(code(&xdist(dir.path(), &["chi", "validate", "c4.xdg", "bad.json"])), 1);
}

#[test]
fn connectivity_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    xdist(dir.path(), &["gen", "cycle", "7", "-o", "c7.xdg"]);
    xdist(dir.path(), &["gen", "complete", "2", "-o", "k2.xdg"]);
    let out = xdist(dir.path(), &["connectivity", "strong", "--g", "c7.xdg", "--h", "k2.xdg", "--p", "3"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["predicted"], true);
    assert_eq!(json["oracle"], true);

    let out = xdist(dir.path(), &["connectivity", "hypercube", "--d", "5", "--p", "2"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["oracle"], false);
    assert_eq!(code(&out), 0);
}

#[test]
fn hypercube_checks_pass() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["hypercube-checks", "f-map", "--n", "6"][..],
        &["hypercube-checks", "decomposition", "--n", "6", "--p", "2"],
        &["hypercube-checks", "complement", "--n", "7", "--k", "3", "--i", "1"],
        &["hypercube-checks", "parity", "--n", "5", "--p", "2"],
        &["hypercube-checks", "all", "--n", "4"],
    ] {
        let out = xdist(dir.path(), args);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&xdist(dir.path(), &["gen", "bogus", "3"])), 2);
    assert_eq!(code(&xdist(dir.path(), &["gen", "cycle", "2"])), 2);
    assert_eq!(code(&xdist(dir.path(), &["gen", "johnson", "5"])), 2);
    assert_eq!(code(&xdist(dir.path(), &["xdist", "missing.xdg", "--p", "2"])), 2);
    assert_eq!(code(&xdist(dir.path(), &["hypercube-checks", "level", "--n", "5"])), 2);
    assert_eq!(code(&xdist(dir.path(), &[])), 2);
}

#[test]
fn table1_formula_only_reports_every_cell() {
    let dir = tempfile::tempdir().unwrap();
    let out = xdist(dir.path(), &["table1", "--formula-only", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let all_match = json["all_match"].as_bool().unwrap();
    assert_eq!(code(&out), if all_match { 0 } else { 1 });
    let text = stdout(&xdist(dir.path(), &["chi", "table1", "--formula-only"]));
    assert!(text.contains("(8,6)"));
    assert!(text.contains("(10,10)"));
}
