//! CLI acceptance: determinism of the verification summary (criterion
//! 12), plus the documented exit codes and output formats.

use std::process::{Command, Output};

fn topolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_12_verify_all_is_byte_identical() {
    let args = [
        "verify", "all", "--random", "1000", "--n", "8", "--seed", "7",
    ];
    let first = topolab(&args);
    let second = topolab(&args);
    let ok = first.status.success()
        && second.status.success()
        && first.stdout == second.stdout
        && first.stderr == second.stderr;
    println!(
        "ACCEPTANCE 12 determinism: {} ({} bytes of summary, two runs identical)",
        if ok { "PASS" } else { "FAIL" },
        first.stdout.len()
    );
    assert!(ok);
    let text = String::from_utf8(first.stdout).expect("utf8 output");
    assert!(text.contains("rose: PASS"));
    assert!(text.contains("thrpre: PASS"));
    assert!(text.contains("ideals: PASS"));
    assert!(text.trim_end().ends_with("verify: PASS"));
}

#[test]
fn verify_single_suite_and_unknown_suite() {
    let out = topolab(&["verify", "rose", "--exhaustive", "3", "--random", "20"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("rose: PASS"));

    let out = topolab(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_caps() {
    for (n, expected) in [(0usize, 1usize), (1, 1), (2, 4), (3, 29), (4, 355)] {
        let out = topolab(&["enumerate", &n.to_string()]);
        assert!(out.status.success());
        let lines = String::from_utf8_lossy(&out.stdout).lines().count();
        assert_eq!(lines, expected, "n={n}");
    }
    let out = topolab(&["enumerate", "9"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn random_spaces_are_reproducible() {
    let a = topolab(&["random", "5", "10", "42"]);
    let b = topolab(&["random", "5", "10", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stdout).lines().count(), 10);
    let c = topolab(&["random", "5", "10", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn classify_json_contract() {
    let dir = std::env::temp_dir().join("topolab-cli-acceptance");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let file = dir.join("sierpinski.json");
    std::fs::write(&file, r#"{"points":["a","b"],"opens":[[0]]}"#).expect("write space");
    let out = topolab(&["classify", file.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("classify emits JSON");
    assert_eq!(v["t0"], serde_json::json!(true));
    assert_eq!(v["t1"], serde_json::json!(false));
    assert_eq!(v["extremally_disconnected"], serde_json::json!(true));
    assert_eq!(v["alpha_scattered"], serde_json::json!(true));
    assert_eq!(v["isolated_labels"], serde_json::json!(["a"]));
    assert_eq!(v["density"], serde_json::json!(1));

    // byte-identical on identical inputs
    let again = topolab(&["classify", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn lattice_exports() {
    let dir = std::env::temp_dir().join("topolab-cli-acceptance");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let file = dir.join("discrete3.json");
    std::fs::write(&file, r#"{"points":["p","q","r"],"opens":[[0],[1],[2]]}"#)
        .expect("write space");

    let dot = topolab(&["lattice", file.to_str().unwrap(), "--which", "subalg"]);
    assert!(dot.status.success());
    let text = String::from_utf8_lossy(&dot.stdout).to_string();
    assert!(text.starts_with("digraph subalg {"));
    assert_eq!(text.matches("->").count(), 6); // Hasse diagram of the 5-partition lattice

    let json = topolab(&[
        "lattice",
        file.to_str().unwrap(),
        "--which",
        "disc-w",
        "--format",
        "json",
    ]);
    assert!(json.status.success());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).expect("lattice JSON");
    assert_eq!(v["elements"].as_array().unwrap().len(), 8);
    assert_eq!(v["lattice"], serde_json::json!(true));
    assert!(v["top"].is_number() && v["bottom"].is_number());

    let comp = topolab(&[
        "lattice",
        file.to_str().unwrap(),
        "--which",
        "comp-pw",
        "--format",
        "json",
    ]);
    assert!(comp.status.success());
    let v: serde_json::Value = serde_json::from_slice(&comp.stdout).expect("lattice JSON");
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);

    let ideals = topolab(&[
        "lattice",
        file.to_str().unwrap(),
        "--which",
        "ideals",
        "--format",
        "json",
    ]);
    assert!(ideals.status.success());
    let v: serde_json::Value = serde_json::from_slice(&ideals.stdout).expect("lattice JSON");
    assert_eq!(v["elements"].as_array().unwrap().len(), 8);
}

#[test]
fn point_cap_overrides() {
    // 21 points exceeds the default cap of 20
    let out = topolab(&["random", "21", "1", "1"]);
    assert_eq!(out.status.code(), Some(4));

    let out = Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(["random", "21", "1", "1"])
        .env("TOPOLAB_CAP", "22")
        .output()
        .expect("binary runs");
    assert!(out.status.success());

    let out = topolab(&["--cap", "22", "random", "21", "1", "1"]);
    assert!(out.status.success());
}

#[test]
fn exit_codes() {
    let out = topolab(&["classify", "/nonexistent/space.json"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = std::env::temp_dir().join("topolab-cli-acceptance");
    std::fs::create_dir_all(&dir).expect("temp dir");

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "not json").expect("write");
    assert_eq!(
        topolab(&["classify", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let invalid = dir.join("invalid.json");
    std::fs::write(&invalid, r#"{"points":["a"],"opens":[[3]]}"#).expect("write");
    assert_eq!(
        topolab(&["classify", invalid.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );

    let big = dir.join("big.json");
    let points: Vec<String> = (0..25).map(|i| format!("\"p{i}\"")).collect();
    std::fs::write(
        &big,
        format!(r#"{{"points":[{}],"opens":[]}}"#, points.join(",")),
    )
    .expect("write");
    assert_eq!(
        topolab(&["classify", big.to_str().unwrap()]).status.code(),
        Some(4)
    );
}
