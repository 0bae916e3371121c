//! End-to-end checks of the command-line contract: exit codes, artifact
//! determinism, file-format diagnostics, and the claims-verification alarm.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_pseudograph")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pseudograph-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_audit_pipeline_exits_zero() {
    let dir = tmpdir("pipeline");
    let out = run_in(&dir, &["gen", "paley", "--q", "13", "--out", "p13.el"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.join("p13.el").exists());
    assert!(dir.join("p13.claims.json").exists());

    let out = run_in(&dir, &["audit", "p13.el", "--claims", "p13.claims.json", "--report", "r.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("r.json")).unwrap()).unwrap();
    assert_eq!(report["header"]["n"], 13);
    assert!(report["run_config"]["argv"].is_array());
}

#[test]
fn tampered_claims_trigger_exit_two() {
    let dir = tmpdir("tamper");
    run_in(&dir, &["gen", "paley", "--q", "13", "--out", "p13.el"]);
    let claims_path = dir.join("p13.claims.json");
    let mut claims: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&claims_path).unwrap()).unwrap();
    claims["lambda_exact"] = serde_json::json!(1.0);
    std::fs::write(&claims_path, serde_json::to_string_pretty(&claims).unwrap()).unwrap();

    let out = run_in(&dir, &["audit", "p13.el", "--claims", "p13.claims.json"]);
    assert_eq!(out.status.code(), Some(2), "tampered claim must raise the soundness alarm");
}

#[test]
fn usage_errors_exit_one() {
    let dir = tmpdir("usage");
    assert_eq!(run_in(&dir, &["spectrum", "missing.el"]).status.code(), Some(1));
    assert_eq!(run_in(&dir, &["nonsense"]).status.code(), Some(1));
    assert_eq!(run_in(&dir, &["gen", "paley", "--q", "7"]).status.code(), Some(1)); // 7 = 3 mod 4
    assert_eq!(run_in(&dir, &["gen", "paley", "--bogus", "1"]).status.code(), Some(1));
    assert_eq!(run_in(&dir, &[]).status.code(), Some(1));
}

#[test]
fn malformed_edge_lists_are_diagnosed() {
    let dir = tmpdir("malformed");
    std::fs::write(dir.join("dup.el"), "3 2\n0 1\n0 1\n").unwrap();
    let out = run_in(&dir, &["spectrum", "dup.el"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate edge"));

    std::fs::write(dir.join("range.el"), "2 1\n0 5\n").unwrap();
    let out = run_in(&dir, &["spectrum", "range.el"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));

    std::fs::write(dir.join("count.el"), "3 2\n0 1\n").unwrap();
    let out = run_in(&dir, &["spectrum", "count.el"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("declares 2 edges"));
}

#[test]
fn artifacts_are_byte_identical_across_runs() {
    let dir = tmpdir("determinism");
    run_in(&dir, &["gen", "paley", "--q", "13", "--out", "p13.el"]);
    for args in [
        vec!["spectrum", "p13.el", "--json", "--out", "s.json"],
        vec!["audit", "p13.el", "--seed", "5", "--report", "a.json"],
        vec![
            "mc", "giant", "--graph", "p13.el", "--trials", "20", "--seed", "9", "--grid", "0.5:2.0:0.5",
            "--out", "g.json",
        ],
    ] {
        let out_path = dir.join(args.last().unwrap());
        run_in(&dir, &args);
        let first = std::fs::read(&out_path).unwrap();
        run_in(&dir, &args);
        let second = std::fs::read(&out_path).unwrap();
        assert_eq!(first, second, "artifact {args:?} not reproducible");
    }
}

#[test]
fn oracle_outputs_are_json_with_witnesses() {
    let dir = tmpdir("oracle");
    run_in(&dir, &["gen", "paley", "--q", "13", "--out", "p13.el"]);
    let out = run_in(&dir, &["oracle", "alpha", "p13.el"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);

    let out = run_in(&dir, &["oracle", "spanning-trees", "p13.el"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["value"].is_string());

    let out = run_in(&dir, &["oracle", "hamilton", "p13.el", "--mode", "count"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let count: u64 = v["value"].as_str().unwrap().parse().unwrap();
    assert!(count > 0, "Paley(13) is Hamiltonian");
}

#[test]
fn mc_subcommands_produce_curves() {
    let dir = tmpdir("mc");
    run_in(&dir, &["gen", "regular", "--n", "24", "--d", "3", "--seed", "4", "--out", "r.el"]);
    let out = run_in(&dir, &["mc", "mst", "--graph", "r.el", "--trials", "30", "--seed", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["result"]["estimate"]["mean"].as_f64().unwrap() > 0.0);

    // degree-threshold curve on a denser host
    let out = run_in(&dir, &["mc", "degree", "--graph", "r.el", "--trials", "20", "--grid", "-1:1:1"]);
    assert!(out.status.success());
}

#[test]
fn enum_subcommand_checks_sandwiches() {
    let dir = tmpdir("enum");
    run_in(&dir, &["gen", "paley", "--q", "13", "--out", "p13.el"]);
    let out = run_in(&dir, &["enum", "p13.el", "--epsilon", "0.2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["findings"].as_array().unwrap().len() >= 2);
    // epsilon >= p/2 is a usage error
    let out = run_in(&dir, &["enum", "p13.el", "--epsilon", "0.4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_env_var_is_honored() {
    let dir = tmpdir("seedenv");
    let out_a = Command::new(bin())
        .args(["gen", "gnp", "--n", "30", "--prob", "0.5", "--out", "a.el"])
        .env("PSEUDOGRAPH_SEED", "31")
        .current_dir(&dir)
        .output()
        .unwrap();
    assert!(out_a.status.success());
    let out_b = Command::new(bin())
        .args(["gen", "gnp", "--n", "30", "--prob", "0.5", "--seed", "31", "--out", "b.el"])
        .current_dir(&dir)
        .output()
        .unwrap();
    assert!(out_b.status.success());
    let a = std::fs::read_to_string(dir.join("a.el")).unwrap();
    let b = std::fs::read_to_string(dir.join("b.el")).unwrap();
    assert_eq!(a, b, "env seed and flag seed must generate identical graphs");
}

#[test]
fn gen_covers_every_family() {
    let dir = tmpdir("families");
    let cases: Vec<Vec<&str>> = vec![
        vec!["gen", "paley", "--q", "13", "--out", "f1.el"],
        vec!["gen", "gnp", "--n", "20", "--prob", "0.3", "--seed", "1", "--out", "f2.el"],
        vec!["gen", "regular", "--n", "10", "--d", "3", "--seed", "1", "--out", "f3.el"],
        vec!["gen", "inner-product", "--k", "5", "--out", "f4.el"],
        vec!["gen", "dgt", "--q", "5", "--k", "3", "--out", "f5.el"],
        vec!["gen", "pg-polarity", "--q", "3", "--t", "2", "--out", "f6.el"],
        vec!["gen", "power-residue", "--q", "37", "--k", "3", "--out", "f7.el"],
        vec!["gen", "alon-triangle-free", "--k", "4", "--out", "f8.el"],
        vec!["gen", "alon-general", "--k", "4", "--h", "1", "--out", "f9.el"],
        vec!["gen", "lps", "--p", "17", "--q", "13", "--out", "f10.el"],
        vec!["gen", "norm", "--p", "3", "--t", "3", "--out", "f11.el"],
        vec!["gen", "cayley", "--factors", "13", "--set", "1,3,4,9,10,12", "--out", "f12.el"],
    ];
    for case in cases {
        let out = run_in(&dir, &case);
        assert!(
            out.status.success(),
            "{case:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    // the binary-Cayley graph at h=1 must equal the direct triangle-free build
    let f8 = std::fs::read_to_string(dir.join("f8.el")).unwrap();
    let f9 = std::fs::read_to_string(dir.join("f9.el")).unwrap();
    assert_eq!(f8, f9);
    // the abelian-Cayley build of Paley(13) must equal the field build
    let f1 = std::fs::read_to_string(dir.join("f1.el")).unwrap();
    let f12 = std::fs::read_to_string(dir.join("f12.el")).unwrap();
    assert_eq!(f1, f12);
}
