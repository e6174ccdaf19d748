use std::process::{Command, Output};

use serde_json::Value;

fn qaffine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaffine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn qchar_of_a_fundamental_module() {
    let out = qaffine(&["qchar", "--snake", "1:0", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.trim().split(" + ").count(), 3, "{text}");
}

#[test]
fn qchar_json_is_well_formed() {
    let out = qaffine(&["--json", "qchar", "--snake", "1:0,2:3", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["snake"], "1:0,2:3");
    assert!(v["character"].is_array() || v["character"].is_object());
}

#[test]
fn invalid_snake_is_a_usage_error() {
    let out = qaffine(&["qchar", "--snake", "1:0,1:1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_subcommand_exits_2() {
    assert_eq!(qaffine(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn paths_dump_lists_every_path() {
    let out = qaffine(&["paths", "dump", "1:0", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn sl2_info_reports_dimension() {
    let out = qaffine(&["sl2", "info", "--r", "2", "--s", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dimension 3"));
}

#[test]
fn t_system_passes() {
    let out = qaffine(&["tsys", "--i", "1", "--k", "0", "--r", "2", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn extended_t_system_passes() {
    let out = qaffine(&["ext-tsys", "--snake", "1:0,2:3,1:6", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn cluster_run_dumps_the_seed() {
    let path = std::env::temp_dir().join(format!("qaffine-seed-{}.json", std::process::id()));
    let out = qaffine(&[
        "cluster-run",
        "--rank",
        "1",
        "--depth",
        "6",
        "--rounds",
        "2",
        "--dump-seed",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let seed: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    for key in ["vertices", "arrows", "variables"] {
        assert!(seed.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn ybe_check_sampled_passes() {
    let out = qaffine(&["ybe-check", "--rank", "2", "--mode", "sampled"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 3, "{text}");
}
