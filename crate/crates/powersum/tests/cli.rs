use std::process::Command;

use powersum::run;
use serde_json::Value;

fn json_lines(lines: &[String]) -> Vec<Value> {
    lines.iter().map(|l| serde_json::from_str(l).expect("valid JSON line")).collect()
}

#[test]
fn verify_table_row() {
    let r = run(&["verify", "--degrees", "2", "--lhs", "1,7,17,30,31,36", "--rhs", "3,4,19,27,34,35"]);
    assert_eq!(r.exit_code, 0);
    let v = json_lines(&r.lines());
    assert_eq!(v[0]["command"], "verify --degrees 2 --lhs 1,7,17,30,31,36 --rhs 3,4,19,27,34,35");
    assert_eq!(v[0]["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v[1]["pass"], true);
    assert_eq!(v[1]["residuals"]["2"], "0");
    assert_eq!(v[1]["pair"]["lhs"][5], "36");
}

#[test]
fn verify_failure_reports_residual() {
    let r = run(&["verify", "--degrees", "1,2", "--lhs", "1,2", "--rhs", "3"]);
    assert_eq!(r.exit_code, 1);
    let v = json_lines(&r.lines());
    assert_eq!(v[1]["pass"], false);
    assert_eq!(v[1]["residuals"]["1"], "0");
    assert_eq!(v[1]["residuals"]["2"], "-4");
}

#[test]
fn negative_and_rational_entries() {
    let r = run(&["verify", "--degrees", "1,3", "--lhs", "-1/2,2", "--rhs", "2,-1/2"]);
    assert_eq!(r.exit_code, 0);
    assert_eq!(json_lines(&r.lines())[1]["pair"]["lhs"][0], "-1/2");
}

#[test]
fn gen_deg8_row() {
    let r = run(&["gen", "deg8", "--x", "1", "--a", "47", "--b", "82"]);
    assert_eq!(r.exit_code, 0, "{:?}", r.diagnostics);
    assert_eq!(r.records.len(), 1);
    let mut lhs: Vec<i64> = r.records[0].pair.lhs.iter().map(|s| s.parse::<i64>().unwrap().abs()).collect();
    lhs.sort();
    let mut rhs: Vec<i64> = r.records[0].pair.rhs.iter().map(|s| s.parse::<i64>().unwrap().abs()).collect();
    rhs.sort();
    let mut a = vec![565, 459, 457, 552, 23, 116];
    let mut b = vec![493, 575, 529, 436, 93, 72];
    a.sort();
    b.sort();
    assert!((lhs == a && rhs == b) || (lhs == b && rhs == a));
}

#[test]
fn gen_deg8_from_x_only() {
    let r = run(&["gen", "deg8", "--x", "-14"]);
    assert_eq!(r.exit_code, 0, "{:?}", r.diagnostics);
    assert_eq!(r.records.len(), 2);
    assert!(r.records.iter().all(|x| x.pass));
    assert_eq!(run(&["gen", "deg8", "--x", "2"]).exit_code, 1);
}

#[test]
fn every_gen_subcommand() {
    let cases: &[&[&str]] = &[
        &["gen", "deg2", "--k", "2"],
        &["gen", "deg3-shift"],
        &["gen", "deg3-shift", "--lhs", "1,2,4,8,9,12", "--rhs", "3,5,6,7,10,11"],
        &["gen", "deg3-sym", "--coeffs", "2,5,10,6,21,22", "--x", "1"],
        &["gen", "deg4", "--k", "-3/2"],
        &["gen", "deg5", "--m", "2"],
        &["gen", "deg5", "--m", "2", "--base", "2"],
        &["gen", "deg6", "--a1", "1", "--b2", "1", "--k", "3"],
        &["gen", "deg7", "--p", "3", "--q", "2", "--a", "1", "--b", "13"],
        &["gen", "deg9", "--a", "3", "--b", "4", "--t", "27/41"],
        &["gen", "deg9", "--a", "3", "--b", "4", "--t", "27/41", "--w", "160"],
    ];
    for c in cases {
        let r = run(c);
        assert_eq!(r.exit_code, 0, "{c:?}: {:?}", r.diagnostics);
        assert!(!r.records.is_empty() && r.records.iter().all(|x| x.pass), "{c:?}");
    }
}

#[test]
fn deg7_height_scan() {
    let r = run(&["gen", "deg7", "--p", "3", "--q", "2", "--height", "20"]);
    assert_eq!(r.exit_code, 0, "{:?}", r.diagnostics);
    assert!(r.records.iter().any(|x| x.source.contains("a=1 b=13")));
}

#[test]
fn mathematical_failures_exit_1() {
    let r = run(&["gen", "deg9", "--a", "3", "--b", "4", "--t", "27/41", "--w", "2"]);
    assert_eq!(r.exit_code, 1);
    assert!(r.diagnostics[0].contains("w = 2"));
    assert_eq!(run(&["gen", "deg7", "--p", "3", "--q", "2", "--a", "1", "--b", "1"]).exit_code, 1);
    assert_eq!(run(&["gen", "deg3-sym", "--coeffs", "1,2,3,4,5,6", "--x", "1"]).exit_code, 1);
}

#[test]
fn usage_errors_exit_2() {
    for c in [
        &["verify", "--degrees", "2", "--lhs", "1,x", "--rhs", "1"][..],
        &["gen", "deg5", "--m", "1", "--base", "3"],
        &["extend", "--degree", "7"],
        &["search", "--degrees", "2", "--height", "60", "--ceiling", "1000"],
        &["gen", "deg7", "--p", "3", "--q", "2", "--a", "1"],
        &[],
    ] {
        let r = run(c);
        assert_eq!(r.exit_code, 2, "{c:?}");
        assert!(!r.diagnostics.is_empty() || r.help.is_some(), "{c:?}");
    }
}

#[test]
fn extend_both_degrees() {
    for deg in ["8", "9"] {
        let r = run(&["extend", "--degree", deg, "--steps", "2"]);
        assert_eq!(r.exit_code, 0, "{deg}: {:?}", r.diagnostics);
        assert!(r.records.len() >= 2, "{deg}");
        assert!(r.records.iter().all(|x| x.pass));
    }
}

#[test]
fn search_is_independent_of_worker_count() {
    let base = run(&["search", "--degrees", "3", "--height", "12", "--unsigned", "--workers", "1"]);
    assert_eq!(base.exit_code, 0);
    assert!(base.records.iter().any(|r| r.pair.lhs == ["12", "9", "8", "4", "2", "1"]
        || r.pair.rhs == ["12", "9", "8", "4", "2", "1"]));
    for w in ["2", "5"] {
        let r = run(&["search", "--degrees", "3", "--height", "12", "--unsigned", "--workers", w]);
        assert_eq!(r.lines()[1..], base.lines()[1..], "workers = {w}");
    }
}

#[test]
fn table_a_plain_and_audit() {
    let r = run(&["table-a"]);
    assert_eq!(r.exit_code, 0);
    assert_eq!(r.records.len(), 8);
    assert_eq!(r.errata.len(), 1);
    let a = run(&["table-a", "--audit"]);
    assert_eq!(a.exit_code, 0, "{:?}", a.records.iter().filter(|r| !r.pass).collect::<Vec<_>>());
    assert!(a.records.len() > 8);
    assert!(a.records.iter().filter(|r| r.matches_printed.is_some()).all(|r| r.matches_printed == Some(true)));
    let subjects: Vec<_> = a.errata.iter().map(|e| e.subject.as_str()).collect();
    assert!(subjects.contains(&"degree-4 table row"));
    assert!(subjects.contains(&"degree-9 Weierstrass curve"));
    assert!(subjects.contains(&"degree-3 shift root"));
    let v = json_lines(&a.lines());
    assert!(v.last().unwrap()["erratum"]["evidence"].is_object());
}

#[test]
fn output_is_deterministic() {
    let a = run(&["table-a", "--audit"]).lines();
    let b = run(&["table-a", "--audit"]).lines();
    assert_eq!(a, b);
}

#[test]
fn binary_streams_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_powersum");
    let out = Command::new(bin).args(["gen", "deg2", "--k", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| serde_json::from_str::<Value>(l).is_ok()));

    let out = Command::new(bin).args(["verify", "--degrees", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = Command::new(bin)
        .args(["search", "--degrees", "3", "--height", "12", "--unsigned"])
        .env("POWERSUM_WORKERS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
}
