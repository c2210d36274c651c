use std::path::Path;
use std::process::{Command, Output};

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv")).args(args).env_remove("MZV_CACHE").output().expect("run mzv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn canonical(path: &Path) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    for c in v["checks"].as_array_mut().unwrap() {
        c["ms"] = 0.into();
    }
    v
}

#[test]
fn eval_prints_zeta_5() {
    let o = mzv(&["eval", "2,1,1,1", "--digits", "30"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "zeta(2,1,1,1) = 1.036927755143369926331365486457");
}

#[test]
fn eval_labels_regularized_values() {
    let o = mzv(&["eval", "1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("zeta*(1) = 0.000"), "{s}");
    assert!(s.contains("[regularized (T=0)]"));
}

#[test]
fn eval_rejects_zero_parts() {
    let o = mzv(&["eval", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn verify_exact_passes() {
    let o = mzv(&["verify", "exact"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 fail, 0 error"));
}

#[test]
fn verify_theorem_small_range() {
    let o = mzv(&["verify", "theorem", "--weights", "5..8", "--digits", "40", "--tol", "1e-25", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["weights"], serde_json::json!([5, 8]));
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn bad_configurations_exit_2() {
    for args in [
        &["verify", "all", "--weights", "5..4"][..],
        &["verify", "nothing"],
        &["verify", "theorem", "--digits", "10"],
        &["dump", "nothing"],
    ] {
        assert_eq!(mzv(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dumps() {
    let c = stdout(&mzv(&["dump", "constants"]));
    assert!(c.contains("P (det 1):") && c.contains("(-1,1,0,0)"), "{c}");
    assert_eq!(stdout(&mzv(&["--dump-constants"])), c);
    let o = stdout(&mzv(&["dump", "omega"]));
    assert!(o.starts_with("Omega: 104 support matrices"), "{o}");
    assert_eq!(o.lines().count(), 105);
}

#[test]
fn out_file_and_env_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.tsv");
    let run = |out: &Path| {
        Command::new(env!("CARGO_BIN_EXE_mzv"))
            .args(["verify", "theorem,corollary", "--weights", "5..7", "--format", "json", "--out"])
            .arg(out)
            .env("MZV_CACHE", &cache)
            .output()
            .unwrap()
    };
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    assert!(run(&a).status.success());
    assert!(std::fs::metadata(&cache).unwrap().len() > 0);
    assert!(run(&b).status.success());
    assert_eq!(canonical(&a), canonical(&b));

    let d = Command::new(env!("CARGO_BIN_EXE_mzv")).args(["dump", "cache"]).env("MZV_CACHE", &cache).output().unwrap();
    assert!(d.status.success());
    assert!(stdout(&d).contains("skipped lines: 0"));
}

#[test]
fn cache_flag_overrides_env() {
    let dir = tempfile::tempdir().unwrap();
    let (flag, env) = (dir.path().join("flag.tsv"), dir.path().join("env.tsv"));
    let o = Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(["eval", "3,2", "--cache"])
        .arg(&flag)
        .env("MZV_CACHE", &env)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(flag.exists());
    assert!(!env.exists());
}
