use std::io::Write;
use std::process::{Command, Output, Stdio};

fn polar(args: &[&str], stdin: &str) -> Output {
    polar_with_env(args, stdin, None)
}

fn polar_with_env(args: &[&str], stdin: &str, catalog: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polar"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("POLAR_CATALOG");
    if let Some(path) = catalog {
        cmd.env("POLAR_CATALOG", path);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn lines(out: &Output) -> Vec<String> {
    stdout(out).lines().map(str::to_string).collect()
}

#[test]
fn c4_is_polar() {
    let out = polar(&["certify", "--format", "el"], "4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["outcome"], "polar");
    assert_eq!(v["partition"]["a_parts"], serde_json::json!([[0, 2], [1, 3]]));
    assert_eq!(v["partition"]["b_cliques"], serde_json::json!([]));
}

#[test]
fn f1_is_named() {
    let out = polar(&["certify"], "FGC?G\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), r#"{"outcome":"obstruction","id":"F1","vertices":[0,1,2,3,4,5,6]}"#);
}

#[test]
fn p4_is_not_a_cograph() {
    let out = polar(&["certify", "--format", "el"], "4\n0 1\n1 2\n2 3\n");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).trim(), r#"{"outcome":"not_cograph","p4":[0,1,2,3]}"#);
}

#[test]
fn oracle_handles_non_cographs() {
    let c5 = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    assert_eq!(polar(&["certify", "--format", "el", "--oracle"], c5).status.code(), Some(0));
    let split = polar(&["certify", "--format", "el", "--oracle", "--s", "1", "--k", "1"], c5);
    assert_eq!(split.status.code(), Some(1));
    assert_eq!(json(&split)["id"], serde_json::Value::Null);
}

#[test]
fn bad_input_exits_above_two() {
    assert_eq!(polar(&["certify"], "not graph6 !!\n").status.code(), Some(3));
    assert_eq!(polar(&["certify", "/no/such/file"], "").status.code(), Some(3));
    assert_eq!(polar(&["certify", "--s", "-1"], "Bw\n").status.code(), Some(3));
    assert_eq!(polar(&["enumerate", "14"], "").status.code(), Some(3));
    assert_eq!(polar(&["closure", "nonsense!"], "").status.code(), Some(3));
}

#[test]
fn catalog_listing() {
    let all = polar(&["catalog"], "");
    assert_eq!(all.status.code(), Some(0));
    let all = lines(&all);
    assert_eq!(all.len(), 50);
    assert!(all[0].starts_with("F1\tK_1 + (k+1)K_2\tFGC?G\t7\tF1"));
    let disconnected = lines(&polar(&["catalog", "--disconnected"], ""));
    let orders: Vec<&str> = disconnected.iter().map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(orders.iter().filter(|&&n| n == "7").count(), 5);
    assert_eq!(orders.iter().filter(|&&n| n == "8").count(), 16);
    assert_eq!(orders.iter().filter(|&&n| n == "9").count(), 4);
    let k3 = lines(&polar(&["catalog", "--k", "3"], ""));
    assert_eq!(k3.len(), 24);
    assert!(k3.iter().all(|l| l.ends_with("incomplete list")));
    let v = json(&polar(&["catalog", "--json"], ""));
    assert_eq!(v.as_array().unwrap().len(), 50);
}

#[test]
fn enumeration() {
    assert_eq!(lines(&polar(&["enumerate", "4"], "")).len(), 10);
    assert_eq!(lines(&polar(&["enumerate", "7", "--filter-obstructions"], "")).len(), 10);
    assert_eq!(lines(&polar(&["enumerate", "6", "--filter-obstructions"], "")).len(), 0);
    let split = lines(&polar(&["enumerate", "4", "--filter-obstructions", "--s", "1", "--k", "1"], ""));
    assert_eq!(split.len(), 2);
}

#[test]
fn enumerated_graphs_certify_as_cographs() {
    for g6 in lines(&polar(&["enumerate", "6"], "")) {
        let out = polar(&["certify"], &g6);
        assert!(matches!(out.status.code(), Some(0 | 1)), "{g6}");
    }
}

#[test]
fn closure_classes() {
    let f1 = lines(&polar(&["closure", "F1"], ""));
    assert_eq!(f1.iter().filter(|l| !l.starts_with('#')).count(), 10);
    let all = polar(&["closure", "F1", "F6", "F13", "F21", "--json"], "");
    let v = json(&all);
    assert_eq!(v["total"], 50);
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);
    let two_k2 = lines(&polar(&["closure", "2K_2"], ""));
    assert!(two_k2.iter().any(|l| l.split('\t').nth(1) == Some("Cr") || l.contains("\tC]\t")));
}

#[test]
fn output_is_deterministic() {
    let a = polar(&["closure", "F6", "--json"], "");
    let b = polar(&["closure", "F6", "--json"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_runs_selected_checks() {
    let out = polar(&["verify", "--check", "catalog", "--check", "A5", "--check", "A6"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("A5") && text.contains("PASS"));
    assert_eq!(polar(&["verify", "--check", "A99"], "").status.code(), Some(3));
}

#[test]
fn corrupted_catalog_names_the_invariant() {
    let dir = std::env::temp_dir().join(format!("polar-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.tsv");
    let text: String = polar_core::catalog::CATALOG_TSV.lines().take(20).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, text).unwrap();
    let out = polar_with_env(&["verify", "--check", "catalog"], "", Some(&path));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("entry count"), "{}", stdout(&out));
    let out = polar_with_env(&["certify"], "FGC?G\n", Some(&path));
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("entry count"));
    std::fs::remove_dir_all(&dir).unwrap();
}
