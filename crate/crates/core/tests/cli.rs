use std::process::{Command, Output};

fn kbsm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kbsm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_anchor() {
    let o = kbsm(&["eval", "--n", "2", "--word", "t s1 t s1^-1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.to_string(), r#"{"t^2":"-A^-2","t^0":"-A^2"}"#);
}

#[test]
fn unknot_invariant_is_one() {
    let o = kbsm(&["invariant", "--n", "1", "--word", "", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn reduce_agrees_with_eval_on_a_loop_word() {
    let e = kbsm(&["eval", "--n", "2", "--word", "t t1'"]);
    let r = kbsm(&["reduce", "--n", "2", "--word", "t t1'", "--sub", "u=-A-2"]);
    assert_eq!(stdout(&e), stdout(&r));
}

#[test]
fn exit_codes() {
    assert_eq!(kbsm(&["eval", "--n", "2", "--word", "t x"]).status.code(), Some(1));
    assert_eq!(kbsm(&["eval", "--n", "2", "--word", "s1 s1 s1", "--cap", "2"]).status.code(), Some(1));
    assert_eq!(kbsm(&["eval", "--n", "2"]).status.code(), Some(2));
    assert_eq!(kbsm(&["trace", "--n", "2", "--word", "s1", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(kbsm(&["system"]).status.code(), Some(2));
    assert_eq!(kbsm(&["eval", "--n", "2", "--word", "t", "--sub", "u=A3"]).status.code(), Some(2));
    let o = kbsm(&["eval", "--n", "2", "--word", "t x"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse"));
}

#[test]
fn csv_table() {
    let o = kbsm(&["presentation", "--N", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,diagonal,rhs_support,rhs");
    assert_eq!(lines[1], "1,A^0-A^6,,0");
    assert_eq!(lines.len(), 4);
}

#[test]
fn system_json_shape() {
    let o = kbsm(&["system", "--N", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["substitution"], "u=-A-2");
    assert_eq!(v["band_moves"].as_array().unwrap().len(), 3);
    assert_eq!(v["braid_band_moves"].as_array().unwrap().len(), 8);
    assert_eq!(v["band_moves"][0]["lhs_coeff"], "A^0-A^6");
}

#[test]
fn verify_passes() {
    let o = kbsm(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], v["total"]);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("kbsm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.json");
    let o = kbsm(&["trace", "--n", "2", "--word", "s1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v.get("1").is_some());
    std::fs::remove_dir_all(&dir).unwrap();
}
