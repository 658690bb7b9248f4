use std::process::Command;

use ordercert_core::report::{CertificationReport, Status};
use serde_json::Value;

fn ordercert(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ordercert"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn small_run_passes_with_exit_zero() {
    let out = ordercert(&["--r", "3", "--p", "13", "--depth", "10", "--data", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"));
    assert!(text.lines().any(|l| l.starts_with("PASS sod.vertex3")));
}

#[test]
fn json_report_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ordercert(&["--r", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let raw = std::fs::read_to_string(&path).unwrap();

    let value: Value = serde_json::from_str(&raw).unwrap();
    let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 3);
    for key in ["params", "checks", "version"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    for check in value["checks"].as_array().unwrap() {
        let obj = check.as_object().unwrap();
        assert_eq!(obj.len(), 6);
        assert!(obj["id"].is_string() && obj["anchor"].is_string() && obj["ms"].is_number());
        assert!(["pass", "fail", "skipped"].contains(&obj["status"].as_str().unwrap()));
    }

    let report: CertificationReport = serde_json::from_str(&raw).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), value);
    assert_eq!(report.params.p, 101);
    assert_eq!(report.params.depth, 8);
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn check_ids_are_unique() {
    let out = ordercert(&["--r", "4", "--format", "json"]);
    let report: CertificationReport = serde_json::from_slice(&out.stdout).unwrap();
    let mut ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    let n = ids.len();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), n);
}

#[test]
fn single_vertex_skips_the_simple_sections() {
    let out = ordercert(&["--r", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: CertificationReport = serde_json::from_slice(&out.stdout).unwrap();
    let skipped: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(skipped, ["resolution.periodic.S1", "pinfty.S1"]);
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    let run = || {
        let out = ordercert(&["--r", "3", "--seed", "5", "--format", "json"]);
        serde_json::from_slice::<CertificationReport>(&out.stdout).unwrap().without_timings()
    };
    assert_eq!(run(), run());
}

#[test]
fn invalid_parameters_exit_with_two() {
    for args in [
        &["--r", "4", "--p", "2"][..],
        &["--r", "4", "--p", "7"],
        &["--r", "3", "--p", "15"],
        &["--r", "0"],
        &["--r", "3", "--depth", "9"],
        &["--r", "3", "--trunc", "1"],
        &["--r", "3", "--data", "1,1"],
        &["--r", "3", "--data", "1,0,1"],
        &["--r", "3", "--format", "xml"],
        &["--p", "13"],
    ] {
        let out = ordercert(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn text_format_lists_failures_only_when_present() {
    let out = ordercert(&["--r", "2", "--data", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("expected:"));
    assert!(text.contains("SKIP pushforward.ext_table"));
}
