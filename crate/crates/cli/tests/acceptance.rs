//! Acceptance suite: every criterion prints one PASS/FAIL line (visible
//! with `--nocapture`) and fails the build when not met. The same checks
//! back the `cubepath verify` command.

use std::path::PathBuf;

use cubepath_cli::verify::run_criterion;

fn out_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR"))
}

fn check(name: &str) {
    let report = run_criterion(name, &out_dir()).expect("known criterion");
    println!(
        "{} {} - {}",
        if report.passed { "PASS" } else { "FAIL" },
        report.name,
        report.detail
    );
    assert!(report.passed, "{}: {}", report.name, report.detail);
}

#[test]
fn criterion_01_oracle_equivalence() {
    check("oracle-equivalence");
}

#[test]
fn criterion_02_centroid_rule() {
    check("centroid-rule");
}

#[test]
fn criterion_03_dudeney_cube() {
    check("dudeney-cube");
}

#[test]
fn criterion_04_four_face_witness() {
    check("four-face-witness");
}

#[test]
fn criterion_05_region_feasibility() {
    check("region-feasibility");
}

#[test]
fn criterion_06_corner_anchoring() {
    check("corner-anchoring");
}

#[test]
fn criterion_07_exact_vs_sampled() {
    check("exact-vs-sampled");
}

#[test]
fn criterion_08_halfplane_anchors() {
    check("halfplane-anchors");
}

#[test]
fn criterion_09_net_enumeration() {
    check("net-enumeration");
}

#[test]
fn criterion_10_heatmap_properties() {
    check("heatmap-properties");
    let csv = out_dir().join("heatmap_exact_101.csv");
    let contents = std::fs::read_to_string(csv).expect("CSV export exists");
    assert_eq!(contents.lines().count(), 1 + 101 * 101);
    let svg = out_dir().join("heatmap_exact_101.svg");
    assert!(std::fs::read_to_string(svg).unwrap().starts_with("<svg"));
}
