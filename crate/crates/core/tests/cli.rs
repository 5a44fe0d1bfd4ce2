use std::process::{Command, Output};

fn fibrook(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibrook"))
        .args(args)
        .env_remove("FIBROOK_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_json_has_sf_5_1() {
    let o = fibrook(&["table", "Sf", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "Sf");
    assert_eq!(v["N"], 5);
    assert_eq!(v["entries"][5][1], "q^4");
}

#[test]
fn table_zero_and_p_family() {
    let o = fibrook(&["table", "cf", "0"]);
    assert_eq!(stdout(&o), "cf(0,0) = 1\n");
    let o = fibrook(&["table", "Sp", "4"]);
    assert!(stdout(&o).contains("Sp(3,1) = q^2\n"));
}

#[test]
fn table_csv() {
    let o = fibrook(&["table", "Lf", "2", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "n,k,poly\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,2*q\n2,2,1\n"
    );
}

#[test]
fn table_writes_output_file() {
    let path = std::env::temp_dir().join(format!("fibrook-table-{}.txt", std::process::id()));
    let o = fibrook(&["table", "Sf", "3", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.contains("Sf(3,2) = q + q^2\n"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fibrook(&["table", "SF", "3"]).status.code(), Some(2));
    assert_eq!(
        fibrook(&["table", "Sf", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fibrook(&["table", "Sf", "41"]).status.code(), Some(2));
    assert_eq!(fibrook(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(fibrook(&["sequences", "A000045"]).status.code(), Some(2));
    assert_eq!(
        fibrook(&["enumerate", "F(3,1)", "--k", "1", "--model", "rook"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fibrook(&["enumerate", "F(0,1,2,3,4,5,6,7,8,9)", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn max_n_env_raises_limit() {
    let o = Command::new(env!("CARGO_BIN_EXE_fibrook"))
        .args(["table", "Sf", "41"])
        .env("FIBROOK_MAX_N", "45")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fibrook(&["table", "Sf", "41", "--force"]).status.code(),
        Some(0)
    );
}

#[test]
fn verify_commands() {
    let o = fibrook(&["verify", "inverse", "--N", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let o = fibrook(&["verify", "involution", "--n", "5", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("domain size"));
    let o = fibrook(&["verify", "identities", "--N", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] != "fail"));
    assert_eq!(
        fibrook(&["verify", "identities", "--N", "12", "--strict"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fibrook(&["verify", "all", "--quick"]).status.code(),
        Some(0)
    );
}

#[test]
fn enumerate_examples() {
    let o = fibrook(&["enumerate", "F(0,1,2)", "--k", "1", "--model", "rook"]);
    let s = stdout(&o);
    assert!(s.contains("count: 2\n"));
    assert!(s.ends_with("total: q + q^2\n"));
    let o = fibrook(&["enumerate", "F(2)", "--k", "0"]);
    assert!(stdout(&o).ends_with("count: 1\ntotal: 1\n"));
    let o = fibrook(&[
        "enumerate",
        "F(2,3,4,4,5)",
        "--k",
        "3",
        "--model",
        "file",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["placements"]
        .as_array()
        .unwrap()
        .iter()
        .any(|p| p["weight"] == "p^2*q^7"));
}

#[test]
fn sequences_examples() {
    let o = fibrook(&["sequences", "A086602"]);
    assert_eq!(stdout(&o), "2,12,39,95,195,357,602,954 MATCH\n");
    let o = fibrook(&["sequences", "cfn1p3"]);
    assert!(stdout(&o).starts_with("9,75,331,1055,"));
    assert!(stdout(&o).ends_with(" MATCH\n"));
    let o = fibrook(&["sequences", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    assert_eq!(
        fibrook(&["sequences", "--all", "--strict"]).status.code(),
        Some(1)
    );
}

#[test]
fn series_json() {
    let o = fibrook(&["series", "--k", "2", "--order", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"][3], "q + q^2");
}

#[test]
fn output_is_deterministic() {
    let a = fibrook(&["table", "Lf", "9", "--format", "json"]);
    let b = fibrook(&["table", "Lf", "9", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
