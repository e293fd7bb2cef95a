use std::process::{Command, Output};

use serde_json::Value;

fn altkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altkit")).args(args).env_remove("ALTKIT_EPS").output().expect("spawn altkit")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn quaternions_are_associative() {
    let out = altkit(&["check", "--algebra", "quaternions", "--identity", "associative", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["holds"], true);
}

#[test]
fn ak_left_alternativity_fails_with_witness() {
    let out = altkit(&[
        "check", "--algebra", "ak", "--param", "k=1", "--param", "a11=1", "--param", "a12=1", "--identity", "left-alt",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r = &json_lines(&out)[0];
    let v11 = serde_json::json!(["0", "0", "1", "0"]);
    let v12 = serde_json::json!(["0", "0", "0", "1"]);
    assert_eq!(r["witness"]["x"], v11);
    assert_eq!(r["witness"]["y"], v11);
    assert_eq!(r["witness"]["z"], v12);
    assert_eq!(r["witness"]["defect"], v12);
}

#[test]
fn classify_tn_negative_a_is_quaternions() {
    let out = altkit(&["classify", "--family", "tn", "--param", "a=-1", "--param", "g=1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["type"], "H");
    assert_eq!(r["witness_verified"], true);
    assert!(r["witness"].is_array());
}

#[test]
fn classify_tp_reports_lie_type() {
    let out = altkit(&["classify", "--family", "tp", "--param", "delta2=2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["type"], "g1_plus_g37");
}

#[test]
fn unclassifiable_tn_exits_one() {
    let out = altkit(&["classify", "--family", "tn", "--param", "a=4", "--param", "g=-1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["check", "--algebra", "octonions"],
        vec!["check", "--algebra", "tn", "--param", "zz=1"],
        vec!["check", "--algebra", "tn", "--param", "a"],
        vec!["check", "--file", "/nonexistent/algebra.json"],
        vec!["check", "--algebra", "quaternions", "--identity", "not-an-identity"],
        vec!["describe"],
        vec!["classify", "--algebra", "ak"],
        vec!["decompose", "--algebra", "quaternions", "--reflection", "1,1,-1"],
    ] {
        let out = altkit(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn describe_json_reloads_identically() {
    let dir = std::env::temp_dir().join(format!("altkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for args in [
        vec!["--algebra", "quaternions"],
        vec!["--algebra", "ak", "--param", "k=2", "--param", "a21=3/2"],
        vec!["--algebra", "tn", "--param", "a=-1/3", "--param", "g=1/3", "--param", "h=1"],
    ] {
        let mut first = vec!["describe", "--format", "json"];
        first.extend(&args);
        let out = altkit(&first);
        assert_eq!(out.status.code(), Some(0));
        let v = &json_lines(&out)[0];
        let path = dir.join("alg.json");
        std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
        let again = altkit(&["describe", "--format", "json", "--file", path.to_str().unwrap()]);
        assert_eq!(again.status.code(), Some(0));
        let w = &json_lines(&again)[0];
        assert_eq!(v["sc"], w["sc"]);
        assert_eq!(v["labels"], w["labels"]);
        assert_eq!(v["unit"], w["unit"]);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn decompose_quaternions() {
    let out = altkit(&["decompose", "--algebra", "quaternions", "--reflection", "1,1,-1,-1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["exact"], true);
    let m = altkit(&[
        "decompose", "--algebra", "quaternions", "--reflection", "[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]", "--format",
        "json",
    ]);
    assert_eq!(json_lines(&m)[0], *r);
}

#[test]
fn non_reflection_is_a_check_failure() {
    let out = altkit(&["decompose", "--algebra", "quaternions", "--reflection", "1,-1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn units_and_nucleus() {
    let out = altkit(&["units", "--algebra", "mzero", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["kind"], "parallel-planes");
    let out = altkit(&["nucleus", "--algebra", "mplus", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["dim"], 1);
}

#[test]
fn lieify_reports_jacobi() {
    let out = altkit(&["lieify", "--algebra", "quaternions", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["jacobi"], true);
    assert_eq!(r["derived_dims"], serde_json::json!([4, 3, 3]));
}

#[test]
fn verify_paper_filters_by_module() {
    let out = altkit(&["verify-paper", "--only", "structure", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    let (summary, claims) = lines.split_last().unwrap();
    assert!(claims.len() >= 5);
    assert!(claims.iter().all(|c| c["module"] == "structure" && c["status"] == "PASS"));
    assert_eq!(summary["failed"], 0);
}

#[test]
fn eps_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_altkit"))
        .args(["verify-paper", "--only", "catalog"])
        .env("ALTKIT_EPS", "1e-3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_altkit")).args(["verify-paper"]).env("ALTKIT_EPS", "tiny").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
