use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_galois-points");

fn scenarios() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios")
}

fn run(args: &[&str], out: &Path) -> (i32, Value, Vec<u8>) {
    let st = Command::new(BIN).args(args).arg("--out").arg(out).output().expect("binary runs");
    let bytes = std::fs::read(out).expect("report written");
    let v: Value = serde_json::from_slice(&bytes).expect("report is JSON");
    (st.status.code().expect("exit code"), v, bytes)
}

fn expected_exit(name: &str) -> i32 {
    match name {
        "hermitian-q2-s2-invalid.json"
        | "fermat-collinear-centers.json"
        | "outer-hermitian-q2-missing-certificate.json" => 2,
        "fermat-hermitian-model-q3-s2.json"
        | "inner-hermitian-q2-orbit-clash.json"
        | "outer-hermitian-q2-equal-groups.json" => 1,
        _ => 0,
    }
}

#[test]
fn corpus_exit_codes_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let mut names: Vec<String> = std::fs::read_dir(scenarios())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    assert_eq!(names.len(), 20);
    for name in &names {
        let path = scenarios().join(name);
        let a = dir.path().join("a.json");
        let b = dir.path().join("b.json");
        let (code, v, bytes) = run(&["run", "--scenario", path.to_str().unwrap()], &a);
        assert_eq!(code, expected_exit(name), "{name}: {}", v["status"]);
        let want = ["pass", "fail", "unverified"][code as usize];
        assert!(v["status"] == want || (code == 2 && v["status"] == "error"), "{name}: {}", v["status"]);
        assert_eq!(v["tool"]["version"], env!("CARGO_PKG_VERSION"));
        assert!(v["options"]["ext_bound"].is_u64());
        let (code2, _, bytes2) = run(&["run", "--scenario", path.to_str().unwrap()], &b);
        assert_eq!((code, &bytes), (code2, &bytes2), "{name} is not deterministic");
    }
}

#[test]
fn scan_shorthand_matches_the_census() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.json");
    let (code, v, _) = run(&["scan", "--curve", "fermat:4", "--field", "13"], &out);
    assert_eq!(code, 0);
    let s = &v["result"]["summary"];
    assert_eq!((s["candidates"].as_u64(), s["outer_galois"].as_u64()), (Some(183), Some(3)));
}

#[test]
fn fermat_check_shorthands() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fc.json");
    assert_eq!(run(&["fermat-check", "--curve", "fermat:5", "--field", "11"], &out).0, 0);
    assert_eq!(run(&["fermat-check", "--hermitian-model", "3:2"], &out).0, 1);
}

#[test]
fn seed_flag_is_recorded_and_unreadable_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let path = scenarios().join("hermitian-q2-s1.json");
    let (code, v, _) = run(&["run", "--scenario", path.to_str().unwrap(), "--seed", "7"], &out);
    assert_eq!(code, 0);
    assert_eq!(v["options"]["seed"], 7);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"version\": 1, \"scenario\": {\"kind\": \"nope\"}}").unwrap();
    let (code, v, _) = run(&["run", "--scenario", bad.to_str().unwrap()], &out);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert!(v["error"]["message"].is_string());
}

#[test]
fn ext_bound_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let path = scenarios().join("hermitian-q3-s2.json");
    let (code, v, _) = run(&["run", "--scenario", path.to_str().unwrap(), "--ext-bound", "1"], &out);
    assert_eq!(code, 2, "{v}");
}
