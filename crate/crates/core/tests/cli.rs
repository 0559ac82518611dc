use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delrecon")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

#[test]
fn classify_prints_json() {
    let out = run(&["classify", "0010", "0100"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "TypeA");
    assert_eq!(v["size"], 2);
    assert_eq!(v["intersection"], serde_json::json!(["000", "010"]));
}

#[test]
fn ball_is_sorted_one_per_line() {
    let out = run(&["ball", "0110", "-t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "010\n011\n110\n");
}

#[test]
fn empty_word_needs_flag() {
    assert_eq!(run(&["ball", "", "-t", "0"]).status.code(), Some(2));
    let out = run(&["--allow-empty", "ball", "", "-t", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "\n");
}

#[test]
fn bad_input_and_usage_exit_two() {
    assert_eq!(run(&["ball", "01a", "-t", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["ball"]).status.code(), Some(2));
}

#[test]
fn table1_tsv_is_stable() {
    let a = run(&["--tsv", "table1"]);
    let b = run(&["--tsv", "table1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 17);
    assert!(text.lines().any(|l| l.starts_with("127\tcsvt\t6\t108\t109\t109\tmatches")));
}

#[test]
fn bounds_json() {
    let out = run(&["--json", "bounds", "-n", "12", "-t", "2", "-P", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n1"], "6");
    assert_eq!(v["n2"], "13");
    assert_eq!(v["np"], 12);
}

#[test]
fn cover_size_matches_example() {
    let out = run(&["cover", "size", "-n", "12", "-l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("exact\t2912\n"));
}

#[test]
fn simulate_is_seeded() {
    let args = ["simulate", "--family", "csvt", "-n", "8", "-P", "4", "-t", "2", "-N", "3", "--trials", "5", "--seed", "7"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["trials"], v["successes"]);
}

#[test]
fn decode_exit_codes() {
    let ok = run(&["decode", "--family", "vt", "-n", "6", "-a", "0", "--reads", "01101"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "101101\n");
    let none = run(&["decode", "--family", "vt", "-n", "6", "-a", "0", "--reads", "11111,00000"]);
    assert_eq!(none.status.code(), Some(1));
}
