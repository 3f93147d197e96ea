use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};
use symdual::{builtin, FieldCtx, LinearCode, Mat, Trace};

const BIN: &str = env!("CARGO_BIN_EXE_symdual");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn mat_text(m: &Mat) -> String {
    let mut s = format!("symdual-matrix v1\np={} n={} k={}\n", m.ctx().p(), m.cols(), m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn write_code(dir: &Path, name: &str, code: &LinearCode) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, mat_text(code.gen())).unwrap();
    p
}

fn gf3_base() -> LinearCode {
    let f = FieldCtx::new(3).unwrap();
    let a = Mat::from_rows(
        &f,
        &[vec![1, 1, 0, 0], vec![1, 2, 0, 0], vec![0, 0, 2, 1], vec![0, 0, 1, 1]],
    );
    LinearCode::from_right_half(&a).unwrap()
}

fn gf19_base() -> LinearCode {
    let f = FieldCtx::new(19).unwrap();
    let a = Mat::from_rows(
        &f,
        &[
            vec![18, 13, 0, 0],
            vec![13, 1, 0, 0],
            vec![0, 0, 1, 6],
            vec![0, 0, 6, 18],
        ],
    );
    LinearCode::from_right_half(&a).unwrap()
}

#[test]
fn verify_passes_on_known_good_code() {
    let tmp = tempfile::tempdir().unwrap();
    let path = write_code(tmp.path(), "a.mat", &builtin("a23_36").unwrap().code());
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["antiorthogonal"], true);
}

#[test]
fn verify_fails_on_identity_padded_with_zeros() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("bad.mat");
    std::fs::write(&path, "symdual-matrix v1\np=3 n=4 k=2\n1 0 0 0\n0 1 0 0\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["self_dual"], false);
    assert_eq!(v["pass"], false);
}

#[test]
fn verify_malformed_header_is_usage_error() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("bad.mat");
    std::fs::write(&path, "symdual-matrix v1\np=3 n=4\n1 0 0 0\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dist_exact_on_length_12_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let path = write_code(tmp.path(), "g.mat", &builtin("g1_3_12").unwrap().code());
    let out = run(&["dist", path.to_str().unwrap(), "--exact"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["lower"], 6);
    assert_eq!(v["upper"], 6);
    assert_eq!(v["exact"], true);
}

#[test]
fn dist_budget_zero_gives_trivial_bounds() {
    let tmp = tempfile::tempdir().unwrap();
    let code = builtin("c3_8").unwrap().code();
    let path = write_code(tmp.path(), "c.mat", &code);
    let out = run(&["dist", path.to_str().unwrap(), "--budget", "0", "--seed", "5"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["lower"], 1);
    assert_eq!(v["upper"], (code.n() - code.k() + 1) as u64);
    assert_eq!(v["exact"], false);
    assert_eq!(v["seed"], 5);
}

#[test]
fn dist_with_target_certifies() {
    let tmp = tempfile::tempdir().unwrap();
    let path = write_code(tmp.path(), "c.mat", &builtin("c19_8").unwrap().code());
    let out = run(&["dist", path.to_str().unwrap(), "--target", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["upper"], 3);
    assert!(v["lower"].as_u64().unwrap() >= 3);
}

#[test]
fn construct_a_reproduces_golden_extension() {
    let tmp = tempfile::tempdir().unwrap();
    let base = write_code(tmp.path(), "base.mat", &gf3_base());
    let out = run(&[
        "construct", "--method", "A", "--base", base.to_str().unwrap(),
        "--word", "2,1,1,1,0,1,0,2", "--alpha", "1", "--beta", "1", "--s", "0", "--t", "1",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let expected = mat_text(builtin("g1_3_12").unwrap().code().gen());
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}

#[test]
fn construct_b_reproduces_golden_extension() {
    let tmp = tempfile::tempdir().unwrap();
    let base = write_code(tmp.path(), "base.mat", &gf19_base());
    let out = run(&[
        "construct", "--method", "B", "--base", base.to_str().unwrap(),
        "--x", "1,6,9,6", "--alpha", "18", "--beta", "6", "--h", "9,12,13",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let expected = mat_text(builtin("g2_19_12").unwrap().code().gen());
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}

#[test]
fn construct_writes_matrix_and_replayable_trace() {
    let tmp = tempfile::tempdir().unwrap();
    let base_code = gf3_base();
    let base = write_code(tmp.path(), "base.mat", &base_code);
    let out_path = tmp.path().join("ext.mat");
    let out = run(&[
        "construct", "--method", "A", "--base", base.to_str().unwrap(),
        "--auto", "--seed", "7", "--out", out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(written, String::from_utf8_lossy(&out.stdout));
    let trace_text = std::fs::read_to_string(tmp.path().join("ext.trace.json")).unwrap();
    let trace: Trace = serde_json::from_str(&trace_text).unwrap();
    let replayed = symdual::replay_trace(&trace, &[base_code]).unwrap();
    assert_eq!(mat_text(replayed.gen()), written);
}

#[test]
fn construct_rejects_non_self_dual_base() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("bad.mat");
    std::fs::write(&path, "symdual-matrix v1\np=3 n=4 k=2\n1 0 1 0\n0 1 0 0\n").unwrap();
    let out = run(&[
        "construct", "--method", "A", "--base", path.to_str().unwrap(),
        "--word", "1,0,1,0", "--alpha", "1", "--beta", "1", "--s", "0", "--t", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn qdc_emits_self_dual_40_20() {
    let tmp = tempfile::tempdir().unwrap();
    let out_path = tmp.path().join("q.mat");
    let out = run(&[
        "qdc", "--p", "11", "--ell", "19", "--a", "3", "--b", "4", "--bordered",
        "--out", out_path.to_str().unwrap(), "--iterations", "50",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["n"], 40);
    assert_eq!(v["k"], 20);
    assert_eq!(v["self_dual"], true);
    // the emitted file parses back to a full-rank generator
    let check = run(&["dist", out_path.to_str().unwrap(), "--budget", "0"]);
    assert!(check.status.success());
}

#[test]
fn enum_sets_p3_lists_four_pairs() {
    let out = run(&["enum-sets", "--p", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("S_-1(3): 4 pairs"), "{text}");
    assert!(text.contains("S_-I2(3): 4 matrices"), "{text}");
}

#[test]
fn catalog_list_on_empty_catalog_is_ok() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run_env(
        &["catalog", "list"],
        &[("SYMDUAL_CATALOG", tmp.path().to_str().unwrap())],
    );
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["records"].as_array().unwrap().len(), 0);
}

#[test]
fn search_populates_catalog_reproducibly() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = r#"{
        "p": 11, "target_length": 8, "target_distance": 1,
        "seed": 3, "trials_per_stage": 60, "distance_iterations": 10,
        "keep": 4, "method": "Both"
    }"#;
    let cfg_path = tmp.path().join("cfg.json");
    std::fs::write(&cfg_path, cfg).unwrap();

    let ids = |dir: &Path| -> Vec<String> {
        let cat_dir = dir.to_str().unwrap().to_string();
        let out = run(&["search", "--config", cfg_path.to_str().unwrap(), "--catalog", &cat_dir]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let v = stdout_json(&out);
        assert_eq!(v["seed"], 3);
        v["records"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["id"].as_str().unwrap().to_string())
            .collect()
    };
    let first = ids(&tmp.path().join("cat1"));
    let second = ids(&tmp.path().join("cat2"));
    assert!(!first.is_empty());
    assert_eq!(first, second);

    // the catalog now lists and re-serves what the search stored
    let cat1 = tmp.path().join("cat1");
    let out = run(&["catalog", "list", "--catalog", cat1.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["records"].as_array().unwrap().len(), first.len());
    let show = run(&["catalog", "show", &first[0], "--catalog", cat1.to_str().unwrap()]);
    assert!(show.status.success());
    let sv = stdout_json(&show);
    assert_eq!(sv["n"], 8);
    assert!(sv["matrix"].as_str().unwrap().starts_with("symdual-matrix v1"));

    let exported = tmp.path().join("exported.mat");
    let exp = run(&[
        "catalog", "export", &first[0], exported.to_str().unwrap(),
        "--catalog", cat1.to_str().unwrap(),
    ]);
    assert!(exp.status.success());
    let verify = run(&["verify", exported.to_str().unwrap()]);
    assert!(verify.status.success());
}
