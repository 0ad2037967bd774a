use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dstar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn info_on_families() {
    let o = dstar(&["--family", "complete:4", "info"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["n"], 4);
    assert_eq!(v["m"], 6);
    assert_eq!(v["degrees"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(v["isolated"], 0);

    let o = dstar(&["--family", "double-star:1,2", "info"]);
    let v = json(&o);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(5), Some(4)));
}

#[test]
fn missing_file_is_usage_error() {
    let o = dstar(&["--input", "/definitely/not/here.txt", "info"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not/here.txt"));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(dstar(&["info"]).status.code(), Some(2));
    assert_eq!(dstar(&["--family", "wheel:5", "info"]).status.code(), Some(2));
    assert_eq!(dstar(&["--family", "complete:4", "--random", "n=3", "count=1", "seed=1", "info"]).status.code(), Some(2));
    assert_eq!(dstar(&["--family", "complete:4", "zagreb", "-p", "3..1"]).status.code(), Some(2));
    assert_eq!(dstar(&["--family", "complete:4", "info", "-o", "latex"]).status.code(), Some(2));
}

#[test]
fn k4_star_csv_matches_worked_example() {
    let o = dstar(&["--family", "complete:4", "triangles", "--which", "star", "-o", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "a,b,value\n0,0,6\n0,1,24\n0,2,12\n1,1,24\n1,2,24\n2,2,6\n");
}

#[test]
fn k4_both_reports_round_trip() {
    let v = json(&dstar(&["--family", "complete:4", "triangles", "--which", "both"]));
    assert_eq!(v["round_trip"], "ok");
    assert_eq!(v["frequency"]["entries"][5], serde_json::json!([2, 2, "6"]));
}

#[test]
fn edgeless_triangles_succeed() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dstar"))
        .args(["--input", "-", "triangles", "--which", "star", "-o", "plain"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"n 4\n# no edges\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0 0 0\n0 0\n0\n");
}

#[test]
fn zagreb_values() {
    let v = json(&dstar(&["--family", "complete:4", "zagreb", "-p", "0..3"]));
    let vals: Vec<&str> = v["values"].as_array().unwrap().iter().map(|x| x["value"].as_str().unwrap()).collect();
    assert_eq!(vals, ["6", "54", "486", "4374"]);

    let o = dstar(&["--family", "complete:2", "zagreb", "-p", "5", "-o", "csv"]);
    assert_eq!(stdout(&o), "p,value\n5,1\n");

    let o = dstar(&["--family", "path:3", "zagreb", "-p", "1", "--cross-check", "-o", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "p,direct,frequency,star\n1,4,4,4\n");
}

#[test]
fn gf_outputs() {
    let o = dstar(&["--family", "complete:2", "gf", "-o", "plain"]);
    assert_eq!(stdout(&o), "(1)/((1-t))\n");

    let v = json(&dstar(&["--family", "complete:4", "gf", "--terms", "5"]));
    assert_eq!(v["series"], serde_json::json!(["6", "54", "486", "4374", "39366"]));
    assert_eq!(v["denominator_roots"], serde_json::json!([0, 1, 2, 3, 4, 6, 9]));

    let o = dstar(&["--family", "complete:1", "gf", "-o", "plain"]);
    assert_eq!(stdout(&o), "0\n");
    let o = dstar(&["--family", "complete:2", "gf", "-o", "latex"]);
    assert_eq!(stdout(&o), "\\mathcal{G}(M_2,t)=\\frac{1}{(1-t)}\n");
    assert_eq!(dstar(&["--family", "complete:2", "gf", "-o", "csv"]).status.code(), Some(2));
}

#[test]
fn recurrence_command() {
    let v = json(&dstar(&["--family", "complete:4", "recurrence"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["lhs"], "28697814");
    assert_eq!(v["coefficients"][1], "1296");
}

#[test]
fn verify_family_and_random() {
    let o = dstar(&["--family", "complete:4", "verify", "--pmax", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);

    let o = dstar(&["--random", "n=6", "count=50", "seed=7", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["graphs"], 50);
    assert_eq!(v["failed"], 0);
}

#[test]
fn injected_fault_fails_with_graph6() {
    let o = dstar(&["--family", "complete:4", "verify", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph6 C~"));
}

#[test]
fn output_is_deterministic() {
    let args = ["--random", "n=5", "count=10", "seed=3", "verify", "-o", "plain"];
    let a = dstar(&args);
    let b = dstar(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut par = args.to_vec();
    par.push("--parallel");
    assert_eq!(dstar(&par).stdout, a.stdout);
}

#[test]
fn graph6_input_file() {
    let dir = std::env::temp_dir().join(format!("dstar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "C~\nA_\n").unwrap();
    let o = dstar(&["--input", path.to_str().unwrap(), "info", "-o", "plain"]);
    assert_eq!(stdout(&o), "n=4 m=6 degrees=3,3,3,3 n0=0\nn=2 m=1 degrees=1,1 n0=0\n");
    let edge = dir.join("bad.txt");
    std::fs::write(&edge, "n 2\n0 0\n").unwrap();
    let o = dstar(&["--input", edge.to_str().unwrap(), "info"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-loop"));
    std::fs::remove_dir_all(&dir).ok();
}
