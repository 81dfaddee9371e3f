use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn toric(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .current_dir(dir)
        .env_remove("TORIC_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

#[test]
fn ugb_of_c4() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    let v = json(&toric(&["ugb", "c4.txt"], d.path()));
    assert_eq!(v["count"], 1);
    assert_eq!(v["entries"][0]["degree"], 2);
    assert_eq!(v["provenance"], "structural");
}

#[test]
fn verify_k4_agrees() {
    let d = tempfile::tempdir().unwrap();
    let k4 = toric(&["kn", "4"], d.path());
    fs::write(d.path().join("k4.json"), &k4.stdout).unwrap();
    let v = json(&toric(&["verify", "k4.json"], d.path()));
    assert_eq!(v["ok"], true);
    for kind in ["circuits", "graver", "ugb"] {
        assert_eq!(v[kind]["structural"], 3);
        assert_eq!(v[kind]["equal"], true);
        assert_eq!(v[kind]["structural_only"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn family_full_walk_classification() {
    let d = tempfile::tempdir().unwrap();
    let g = toric(&["family", "3", "3"], d.path());
    fs::write(d.path().join("f.json"), &g.stdout).unwrap();
    let w = toric(&["family", "3", "3", "--walk", "full"], d.path());
    fs::write(d.path().join("w.json"), &w.stdout).unwrap();
    let v = json(&toric(&["classify", "f.json", "w.json"], d.path()));
    assert_eq!(v["primitive"], true);
    assert_eq!(v["mixed"], false);
    assert_eq!(v["ugb"], false);
    assert_eq!(v["degree"], 6);
}

#[test]
fn truedeg_of_longest_circuit() {
    let d = tempfile::tempdir().unwrap();
    let g = toric(&["family", "5", "5"], d.path());
    fs::write(d.path().join("f.json"), &g.stdout).unwrap();
    let w = toric(&["family", "5", "5", "--walk", "longest"], d.path());
    fs::write(d.path().join("c.json"), &w.stdout).unwrap();
    let v = json(&toric(&["truedeg", "f.json", "c.json"], d.path()));
    assert_eq!(v["degree"], 9);
    assert_eq!(v["index"], "1");
    assert_eq!(v["true_degree"], "9");
}

#[test]
fn exit_codes() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "loop.txt", "0 0\n");
    write(d.path(), "k5.txt", "");
    let k5 = toric(&["kn", "5"], d.path());
    fs::write(d.path().join("k5.json"), &k5.stdout).unwrap();
    write(d.path(), "bad.json", r#"{"plus":[[0,1]],"minus":[[1,1]]}"#);
    write(d.path(), "unknown.json", r#"{"plus":[[40,1]],"minus":[[1,1]]}"#);

    assert_eq!(toric(&["frobnicate"], d.path()).status.code(), Some(1));
    assert_eq!(
        toric(&["--candidate-budget", "0", "kn", "4"], d.path()).status.code(),
        Some(1)
    );
    assert_eq!(toric(&["graver", "loop.txt"], d.path()).status.code(), Some(2));
    assert_eq!(toric(&["graver", "missing.txt"], d.path()).status.code(), Some(2));
    assert_eq!(
        toric(&["classify", "k5.json", "bad.json"], d.path()).status.code(),
        Some(2)
    );
    assert_eq!(
        toric(&["classify", "k5.json", "unknown.json"], d.path()).status.code(),
        Some(2)
    );
    assert_eq!(toric(&["family", "3", "4"], d.path()).status.code(), Some(2));
    assert_eq!(
        toric(&["--max-cycle-len", "3", "graver", "k5.json"], d.path())
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        toric(&["--candidate-budget", "20", "graver", "k5.json"], d.path())
            .status
            .code(),
        Some(3)
    );
    assert_eq!(toric(&["--help"], d.path()).status.code(), Some(0));
}

#[test]
fn out_file_and_csv() {
    let d = tempfile::tempdir().unwrap();
    let k5 = toric(&["kn", "5"], d.path());
    fs::write(d.path().join("k5.json"), &k5.stdout).unwrap();
    let out = toric(&["ugb", "k5.json", "--out", "r.json", "--csv", "h.csv"], d.path());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(d.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(v["count"], 30);
    assert_eq!(
        fs::read_to_string(d.path().join("h.csv")).unwrap(),
        "degree,count\n2,15\n3,15\n"
    );
}

#[test]
fn deterministic_across_threads_and_cache() {
    let d = tempfile::tempdir().unwrap();
    let k6 = toric(&["kn", "6"], d.path());
    fs::write(d.path().join("k6.json"), &k6.stdout).unwrap();
    let one = toric(&["--threads", "1", "graver", "k6.json"], d.path());
    let four = toric(&["--threads", "4", "graver", "k6.json"], d.path());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);

    let cache = d.path().join("cache");
    let cache_s = cache.to_str().unwrap();
    let cold = toric(&["--cache-dir", cache_s, "graver", "k6.json"], d.path());
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
    let warm = toric(&["--cache-dir", cache_s, "graver", "k6.json"], d.path());
    assert_eq!(cold.stdout, one.stdout);
    assert_eq!(warm.stdout, one.stdout);

    // the environment variable is honored too, and a different config misses
    let env_run = Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(["--max-degree", "10", "graver", "k6.json"])
        .current_dir(d.path())
        .env("TORIC_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert_eq!(env_run.stdout, one.stdout);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 2);
}

#[test]
fn blocks_and_bench() {
    let d = tempfile::tempdir().unwrap();
    let f = toric(&["family", "3", "3"], d.path());
    fs::write(d.path().join("f.json"), &f.stdout).unwrap();
    let v = json(&toric(&["blocks", "f.json"], d.path()));
    assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
    assert_eq!(v["cut_vertices"], serde_json::json!([0, 1, 2]));
    let b = json(&toric(&["bench", "f.json", "--repeat", "1"], d.path()));
    assert_eq!(b["graver_count"], 10);
}

#[test]
fn graph_from_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(["circuits", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v = json(&out);
    assert_eq!(v["count"], 1);
}
