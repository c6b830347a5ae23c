use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_klr-workbench")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out) = run(&a);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn dims_examples() {
    assert_eq!(json(&["dims", "--ell", "1", "--n", "4"]).1["total"], "24");
    assert_eq!(json(&["dims", "--ell", "1", "--beta", "2,2"]).1["dim"], "24");
    assert_eq!(json(&["dims", "--ell", "2", "--nu", "012012", "--nu2", "012012"]).1["dim"], "4");
    assert_eq!(run(&["dims", "--ell", "1", "--beta", "2"]).0, 1);
    assert_eq!(run(&["dims", "--ell", "1", "--beta", "-1,3"]).0, 1);
}

#[test]
fn weyl_finds_the_word() {
    let (code, v) = json(&["weyl", "--ell", "2", "--partition", "3,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["k"], 0);
}

#[test]
fn verify_examples() {
    let (code, v) = json(&["verify", "--zoo", "T0", "--lambda", "0"]);
    assert_eq!((code, &v["passed"]), (0, &serde_json::json!(true)));
    let (code, v) = json(&["verify", "--zoo", "T0", "--lambda", "1"]);
    assert_eq!(code, 2);
    assert!(!v["failures"].as_array().unwrap().is_empty());
    assert_eq!(run(&["verify", "--zoo", "nonsense"]).0, 1);
    assert_eq!(run(&["verify", "--zoo", "T0", "--lambda", "1/x"]).0, 1);
}

#[test]
fn exported_module_round_trips() {
    let dir = std::env::temp_dir().join(format!("klr-workbench-test-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    assert_eq!(run(&["construct", "--zoo", "M0", "--lambda", "3/2", "--out", d]).0, 0);
    let (code, _) = run(&["verify", "--file", dir.join("M0.json").to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(code, 0);
}

#[test]
fn algebra_examples() {
    assert_eq!(json(&["algebra", "--catalog", "basic-2delta", "--lambda", "1"]).1["center_dim"], 5);
    let v = json(&["algebra", "--catalog", "appendix-example"]).1;
    assert_eq!((&v["stably_biserial"]["holds"], &v["special_biserial"]["holds"]), (&true.into(), &false.into()));
    assert_eq!(json(&["algebra", "--catalog", "4a", "--exps", "1,2,2"]).1["symmetric"], true);
}

#[test]
fn strings_examples() {
    let v = json(&["strings", "--catalog", "basic-2delta", "--lambda", "1", "--bands"]).1;
    assert_eq!(v["bands"].as_array().unwrap().len(), 1);
    let (code, v) = json(&["strings", "--catalog", "2a", "--exps", "2,2", "--tau", "--maxlen", "4"]);
    assert_eq!(code, 0);
    assert!(v["statements"].as_array().unwrap().iter().all(|s| s["passed"] == true));
    let (code, v) = json(&["strings", "--catalog", "basic-2delta", "--lambda", "1", "--sosb", "--maxlen", "4"]);
    assert_eq!(code, 0);
    assert!(v["listed"].as_array().unwrap().iter().all(|s| s["found"] == true));
}

#[test]
fn report_subset_is_deterministic() {
    let a = run(&["report", "--lambda", "2/3", "--only", "dims,zoo"]);
    let b = run(&["report", "--lambda", "2/3", "--only", "dims,zoo"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert_eq!(run(&["report", "--only", "nonsense"]).0, 1);
}
