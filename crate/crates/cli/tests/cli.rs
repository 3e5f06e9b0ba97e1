//! End-to-end tests of the binary: exit codes, output formats, file
//! emission.

use std::path::PathBuf;
use std::process::{Command, Output};

fn cubepath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubepath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn solve_json_reports_the_witness() {
    let out = cubepath(&[
        "solve",
        "--source",
        "0,-0.9",
        "--target",
        "0.98,-0.8",
        "--json",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"minimizers\": [\"DRD\"]"));
    assert!(text.contains("\"length\": 2.43606239657"));
    assert!(text.contains("\"faces\": 4"));
}

#[test]
fn solve_scales_with_edge_length() {
    // Dudeney's twelve-foot cube: four half-edges of six feet each.
    let out = cubepath(&[
        "solve",
        "--source",
        "0,-0.833333333333333",
        "--target",
        "0,0.833333333333333",
        "--edge-length",
        "12",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("length      24"), "{text}");
    assert!(text.contains("faces       3"));
}

#[test]
fn solve_rejects_exterior_points_with_exit_1() {
    let out = cubepath(&["solve", "--source", "2,0", "--target", "0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn unknown_flags_exit_2() {
    let out = cubepath(&["solve", "--nonsense", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cubepath(&["no-such-verb"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cubepath(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let out = cubepath(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn regions_writes_svg_and_json() {
    let svg_path = tmp("witness_regions.svg");
    let json_path = tmp("witness_regions.json");
    let out = cubepath(&[
        "regions",
        "--source",
        "0,-0.9",
        "--svg",
        svg_path.to_str().unwrap(),
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(">DRD</text>"));
    let json = std::fs::read_to_string(&json_path).unwrap();
    assert!(json.contains("\"union_area\""));
    let summary = String::from_utf8(out.stdout).unwrap();
    assert!(summary.contains("probability"));
}

#[test]
fn heatmap_csv_to_stdout() {
    let out = cubepath(&["heatmap", "--n", "5", "--threads", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "s1,s2,probability");
    assert_eq!(lines.len(), 1 + 25);
}

#[test]
fn sampled_heatmap_writes_files() {
    let csv_path = tmp("heatmap_sampled.csv");
    let svg_path = tmp("heatmap_sampled.svg");
    let out = cubepath(&[
        "heatmap",
        "--n",
        "3",
        "--sampled",
        "--pitch",
        "0.1",
        "--csv",
        csv_path.to_str().unwrap(),
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().is_empty());
    assert_eq!(
        std::fs::read_to_string(&csv_path).unwrap().lines().count(),
        1 + 9
    );
    assert!(std::fs::read_to_string(&svg_path)
        .unwrap()
        .starts_with("<svg"));
}

#[test]
fn verify_fast_suite_exits_0() {
    let out = cubepath(&["verify", "--suite", "net-enumeration"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS net-enumeration"));
    assert!(text.contains("384"));
}

#[test]
fn nets_reports_counts_and_shapes() {
    let out = cubepath(&["nets"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("spanning trees:     384"));
    assert!(text.contains("congruence classes: 11"));
    assert_eq!(text.matches('#').count(), 11 * 6);
}
