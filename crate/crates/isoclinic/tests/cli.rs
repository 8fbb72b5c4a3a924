use std::process::Command;

fn ds(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ds")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn solve_prints_a_verdict() {
    let (code, out) = ds(&["solve", "--type", "B", "--rank", "2", "--slope", "3/4", "--orbit", "[3,1,1]"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["affirmative"], true);
    assert_eq!(v["o_nu"], serde_json::json!([2, 2, 1]));
}

#[test]
fn orbit_file_and_solve_q() {
    let dir = std::env::temp_dir().join(format!("ds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbit.json");
    let orbit = r#"{"kind":"adjoint","blocks":[{"eig":"1/3","mult":2,"partition":[2]}],"zero_block":[1]}"#;
    std::fs::write(&path, orbit).unwrap();
    let p = path.to_str().unwrap();
    let (a, x) = ds(&["solve", "--type", "B2", "--slope", "3/4", "--orbit-file", p]);
    let (b, y) = ds(&["solve-q", "--type", "B2", "--slope", "3/4", "--orbit-file", p]);
    assert_eq!((a, b), (0, 0));
    let (x, y): (serde_json::Value, serde_json::Value) = (serde_json::from_str(&x).unwrap(), serde_json::from_str(&y).unwrap());
    assert_eq!(x["affirmative"], y["affirmative"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(ds(&["solve", "--type", "B", "--rank", "2", "--slope", "1/3", "--orbit", "[5]"]).0, 2);
    assert_eq!(ds(&["solve", "--type", "E6", "--slope", "7/12", "--orbit", "2A1"]).0, 3);
    assert_eq!(ds(&["oracle", "--type", "E6", "--slope", "1/12"]).0, 2);
    assert_eq!(ds(&["coxeter", "--type", "C", "--rank", "3", "--d", "5"]).0, 0);
    assert_eq!(ds(&["check"]).0, 0);
}

#[test]
fn rigid_csv_lists_rows() {
    let (code, out) = ds(&["rigid", "--family", "C", "--max-rank", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "C4,3/8,\"[3,3,2]\",yes"), "{}", out);
}
