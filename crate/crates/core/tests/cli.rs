use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey-witness")).args(args).output().unwrap()
}

#[test]
fn generate_prints_graph6() {
    let out = run(&["generate", "--family", "clique", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Bw\n");
    let dot = run(&["generate", "--family", "path", "--n", "2", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().contains("0 -- 1"));
}

#[test]
fn extract_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("f3.g6");
    let g = run(&["generate", "--family", "friendship", "--n", "3"]);
    std::fs::write(&input, &g.stdout).unwrap();
    let out = run(&["extract", "--theorem", "induced-matching", "--n", "2", "--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let witness = &reports[0]["outcome"]["witness"];
    assert_eq!(witness["spec"]["family"], "friendship");

    let wpath = dir.path().join("w.json");
    std::fs::write(&wpath, witness.to_string()).unwrap();
    let ok = run(&["verify", "--input", input.to_str().unwrap(), "--witness", wpath.to_str().unwrap()]);
    assert!(ok.status.success());

    let bad = serde_json::json!({"spec": {"family": "clique", "n": 3}, "embedding": [1, 3, 5]});
    std::fs::write(&wpath, bad.to_string()).unwrap();
    let no = run(&["verify", "--input", input.to_str().unwrap(), "--witness", wpath.to_str().unwrap()]);
    assert_eq!(no.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));

    let garbage = dir.path().join("bad.g6");
    std::fs::write(&garbage, "Bw\n!!\n").unwrap();
    let out = run(&["invariants", "--input", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains(":2:"));

    let split = dir.path().join("split.g6");
    std::fs::write(&split, "A?\n").unwrap();
    let out = run(&["extract", "--theorem", "matching", "--n", "2", "--input", split.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalogue_counts() {
    let out = run(&["catalogue", "--max-order", "6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 1 + 2 + 6 + 21 + 112);
}
