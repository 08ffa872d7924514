use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fradkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn classify_zero_regime() {
    let o = run(&["sim", "classify", "--h", "1", "--omega-t", "1", "--a", "3/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("kappa = 0, regime = zero\n"));
}

#[test]
fn jacobi_reports_zero() {
    let o = run(&["algebra", "jacobi", "--n", "4", "--mode", "minus", "--omega", "2/3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max violation: 0\n"));
}

#[test]
fn first_f_basis_table() {
    let o = run(&[
        "algebra", "table", "--n", "2", "--mode", "plus", "--omega", "1", "--basis", "f", "--format", "csv",
    ]);
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some(",f11,f12,f21"));
    assert_eq!(lines.next(), Some("f11,0,-4w f21,4w f12"));
    assert_eq!(lines.next(), Some("f12,4w f21,0,-2w f11"));
}

#[test]
fn zero_mode_constants_match_oracle() {
    let v = json(&["algebra", "constants", "--n", "3", "--mode", "zero"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["oracle_mismatches"], 0);
    assert_eq!(v["dim"], 9);
    let e = &v["entries"][0];
    assert!(e["c"].as_str().unwrap().contains('/'));
}

#[test]
fn plus_spectrum() {
    let o = run(&["killing", "spectrum", "--n", "3", "--mode", "plus"]);
    let s = stdout(&o);
    assert!(s.contains("eigenvalue -72 x1"));
    assert!(s.contains("eigenvalue -24 x7"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn minus_signature_flags_grouping() {
    let v = json(&["killing", "signature", "--n", "3", "--mode", "minus"]);
    assert_eq!(v["signature"], serde_json::json!({"p": 5, "n": 3, "z": 0}));
    assert!(v["note"].as_str().unwrap().contains("differ"));
    let d = json(&["killing", "det", "--n", "3", "--mode", "minus", "--omega", "2/3"]);
    assert_eq!(d["det"], d["expected"]);
}

#[test]
fn su_five_verifies() {
    let o = run(&["iso", "verify", "--n", "5", "--target", "su"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn zero_matrix_dump() {
    let v = json(&["iso", "matrix", "--n", "2", "--target", "zero"]);
    assert_eq!(v["size"], 4);
    let m = &v["images"][0]["matrix"];
    // entries are (real, sqrt2, i, sqrt2 i) tuples
    assert_eq!(m[2][0], serde_json::json!(["2/1", "0/1", "0/1", "0/1"]));
    assert_eq!(v["images"].as_array().unwrap().len(), 4);
}

#[test]
fn bad_target_is_usage_error() {
    let o = run(&["iso", "verify", "--target", "so"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["iso", "verify"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invariants_drift() {
    let o = run(&[
        "sim",
        "invariants",
        "--n",
        "3",
        "--h",
        "2/3",
        "--omega-t",
        "3/2",
        "--a",
        "1/3",
        "--steps",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["sim", "invariants", "--a", "1/2,1", "--steps", "4"]);
    assert_eq!(v["pass"], false);
    let rows = v["invariants"].as_array().unwrap();
    let l12 = rows.iter().find(|r| r["invariant"] == "L12").unwrap();
    assert_eq!(l12["preserved"], false);
    assert_ne!(l12["max_drift"], "0/1");
    let o = run(&["sim", "invariants", "--a", "1/2,1", "--steps", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn trajectory_csv() {
    let o = run(&[
        "sim", "run", "--q", "1,0", "--p", "0,1", "--steps", "4", "--h", "1/2", "--format", "csv",
    ]);
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "t,q1,q2,p1,p2,F11,F12,F22,L12");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("0,1,0,0,1,"));
    let last: Vec<&str> = lines[5].split(',').collect();
    assert_eq!(last[0], "2");
    assert_eq!(last[8], "1");
}

#[test]
fn runs_are_deterministic() {
    let a = stdout(&run(&["sim", "run", "--seed", "11", "--steps", "3"]));
    let b = stdout(&run(&["sim", "run", "--seed", "11", "--steps", "3"]));
    let c = stdout(&run(&["sim", "run", "--seed", "12", "--steps", "3"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(json(&["nambu", "check", "--n", "2", "--draws", "3"])["seed"], 20240917);
}

#[test]
fn nambu_batches() {
    let o = run(&["nambu", "check", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("detJ closed form: PASS"));
    let v = json(&["nambu", "matfam", "--n", "6", "--draws", "100"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["lemmas"].as_array().unwrap().len(), 15);
}

#[test]
fn singular_point_is_named() {
    let o = run(&["nambu", "check", "--n", "2", "--q", "1,2", "--p", "2,4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("DegenerateAngularMomentum"));
    let v = json(&["nambu", "check", "--n", "2", "--q", "1,2", "--p", "3,5"]);
    assert_eq!(v["mu"], "1/4");
}

#[test]
fn singular_step_is_named() {
    // Delta = 1 + h^2 w^2 (1 - a) b vanishes for h = w = 1, a = 2, b = 1
    let o = run(&["sim", "run", "--a", "2", "--b", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SingularStep"));
}

#[test]
fn config_file_mirrors_flags() {
    let dir = std::env::temp_dir().join(format!("fradkin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.toml");
    std::fs::write(&good, "seed = 3\nh = 1\nomega-t = 1\na = \"3/2\"\nformat = \"json\"\n").unwrap();
    let o = run(&["sim", "classify", "--config", good.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kappa"], "0/1");
    assert_eq!(v["seed"], 3);
    let o = run(&[
        "sim",
        "classify",
        "--config",
        good.to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert!(stdout(&o).starts_with("kappa = 0"));
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "h = 1\n").unwrap();
    assert_eq!(
        run(&["sim", "classify", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn precision_flag_renders_decimals() {
    let o = run(&[
        "sim",
        "classify",
        "--h",
        "1",
        "--omega-t",
        "1",
        "--a",
        "1",
        "--precision",
        "4",
    ]);
    assert!(stdout(&o).starts_with("kappa = 0.7500, regime = plus"));
}
