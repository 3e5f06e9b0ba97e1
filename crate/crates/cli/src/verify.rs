//! The verification suites behind `cubepath verify`: randomized and
//! exhaustive checks of the solver against the brute-force oracle, of the
//! exact regions against sampling, and of the structural counting results.
//! Every suite uses fixed seeds, so a pass is reproducible.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cubepath::distribution::{estimate_probability, heatmap, probability, HeatmapMode};
use cubepath::geometry::Point;
use cubepath::oracle::BruteForceSolver;
use cubepath::regions::{diagonal_exclusion_check, halfplane_for, region_set, CanonicalTriangle};
use cubepath::solver::solve;
use cubepath::unfolding::nets::enumerate_nets;
use cubepath::unfolding::RollSequence;

use crate::render;

/// Outcome of one verification criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionReport {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        CriterionReport {
            name,
            passed,
            detail,
        }
    }
}

/// All criterion names, in report order.
pub const CRITERIA: [&str; 10] = [
    "oracle-equivalence",
    "centroid-rule",
    "dudeney-cube",
    "four-face-witness",
    "region-feasibility",
    "corner-anchoring",
    "exact-vs-sampled",
    "halfplane-anchors",
    "net-enumeration",
    "heatmap-properties",
];

/// Runs one named criterion; `out_dir` receives the heatmap exports.
pub fn run_criterion(name: &str, out_dir: &Path) -> Option<CriterionReport> {
    match name {
        "oracle-equivalence" => Some(oracle_equivalence()),
        "centroid-rule" => Some(centroid_rule()),
        "dudeney-cube" => Some(dudeney_cube()),
        "four-face-witness" => Some(four_face_witness()),
        "region-feasibility" => Some(region_feasibility()),
        "corner-anchoring" => Some(corner_anchoring()),
        "exact-vs-sampled" => Some(exact_vs_sampled()),
        "halfplane-anchors" => Some(halfplane_anchors()),
        "net-enumeration" => Some(net_enumeration()),
        "heatmap-properties" => Some(heatmap_properties(out_dir)),
        _ => None,
    }
}

/// Runs a suite: `all` or a single criterion name.
pub fn run_suite(suite: &str, out_dir: &Path) -> Option<Vec<CriterionReport>> {
    if suite == "all" {
        return Some(
            CRITERIA
                .iter()
                .map(|name| run_criterion(name, out_dir).unwrap())
                .collect(),
        );
    }
    run_criterion(suite, out_dir).map(|r| vec![r])
}

fn interior_coord(rng: &mut impl Rng) -> f64 {
    loop {
        let v: f64 = rng.gen_range(-1.0..1.0);
        if v.abs() < 1.0 - 1e-6 {
            return v;
        }
    }
}

fn interior_point(rng: &mut impl Rng) -> Point {
    Point::new(interior_coord(rng), interior_coord(rng))
}

fn off_diagonal_point(rng: &mut impl Rng) -> Point {
    loop {
        let p = interior_point(rng);
        if (p.x.abs() - p.y.abs()).abs() > 1e-6 {
            return p;
        }
    }
}

/// A source strictly inside a face diagonal, on either diagonal.
fn diagonal_point(rng: &mut impl Rng) -> Point {
    let k: f64 = loop {
        let v: f64 = rng.gen_range(-1.0..1.0);
        if v.abs() > 1e-3 && v.abs() < 1.0 - 1e-3 {
            break v;
        }
    };
    if rng.gen_bool(0.5) {
        Point::new(k, k)
    } else {
        Point::new(k, -k)
    }
}

const CORNERS: [Point; 4] = [
    Point::new(1.0, 1.0),
    Point::new(1.0, -1.0),
    Point::new(-1.0, 1.0),
    Point::new(-1.0, -1.0),
];

/// Corners anchored by each polygon of a region set: for every nonempty
/// polygon, the list of face corners within `1e-9` of one of its vertices.
fn anchored_corners(rs: &cubepath::regions::RegionSet) -> Vec<Vec<Point>> {
    rs.nonempty()
        .map(|(_, poly)| {
            CORNERS
                .iter()
                .copied()
                .filter(|corner| poly.vertices().iter().any(|v| v.dist(*corner) <= 1e-9))
                .collect()
        })
        .collect()
}

fn oracle_equivalence() -> CriterionReport {
    const PAIRS: usize = 10_000;
    let solver = BruteForceSolver::new(5).expect("five rolls");
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let pairs: Vec<(Point, Point)> = (0..PAIRS)
        .map(|_| (interior_point(&mut rng), interior_point(&mut rng)))
        .collect();
    let (failures, worst) = pairs
        .par_iter()
        .map(|&(s, t)| {
            let direct = solve(s, t).unwrap();
            let exhaustive = solver.solve(s, t).unwrap();
            let diff = (direct.length_sq - exhaustive.best_length_sq).abs();
            let ls_ok = exhaustive.ls_only && direct.minimizer_candidates().all(|c| c.is_ls());
            let best_short: f64 = [2usize, 3]
                .iter()
                .filter_map(|&r| exhaustive.best_by_rolls[r])
                .fold(f64::INFINITY, f64::min);
            let long_beats = [4usize, 5]
                .iter()
                .filter_map(|&r| exhaustive.best_by_rolls[r])
                .any(|v| v < best_short - 1e-12);
            let ok = diff <= 1e-12 && ls_ok && !long_beats;
            (usize::from(!ok), diff)
        })
        .reduce(|| (0, 0.0), |a, b| (a.0 + b.0, a.1.max(b.1)));
    CriterionReport::new(
        "oracle-equivalence",
        failures == 0,
        format!(
            "{PAIRS} random pairs vs exhaustive 5-roll search ({} candidates): {} disagreements, worst |Δlength²| = {:.2e}; no 4- or 5-roll candidate beat the 2/3-roll optimum",
            solver.candidate_count(),
            failures,
            worst
        ),
    )
}

fn centroid_rule() -> CriterionReport {
    const N: usize = 201;
    let centroid = Point::new(0.0, 0.0);
    let four_face_hits: usize = (0..N * N)
        .into_par_iter()
        .filter(|idx| {
            let t = Point::new(
                -1.0 + (2 * (idx % N) + 1) as f64 / N as f64,
                -1.0 + (2 * (idx / N) + 1) as f64 / N as f64,
            );
            solve(centroid, t).unwrap().is_4fsp()
        })
        .count();
    let union_area = region_set(centroid).union_area;
    CriterionReport::new(
        "centroid-rule",
        four_face_hits == 0 && union_area == 0.0,
        format!(
            "{N}x{N} interior targets from the centroid: {four_face_hits} four-face endpoints; exact region union area = {union_area}"
        ),
    )
}

fn dudeney_cube() -> CriterionReport {
    let r = solve(Point::new(0.0, -5.0 / 6.0), Point::new(0.0, 5.0 / 6.0)).unwrap();
    let passed = (r.length - 4.0).abs() <= 1e-12 && r.faces == 3;
    CriterionReport::new(
        "dudeney-cube",
        passed,
        format!(
            "spider/fly positions: length = {} ({} faces, minimizers {})",
            render::sig12(r.length),
            r.faces,
            r.minimizers
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
    )
}

fn four_face_witness() -> CriterionReport {
    let r = solve(Point::new(0.0, -0.9), Point::new(0.98, -0.8)).unwrap();
    let passed = r.minimizers == vec![RollSequence::DRD]
        && (r.length_sq - 5.9344).abs() <= 1e-9
        && r.faces == 4;
    CriterionReport::new(
        "four-face-witness",
        passed,
        format!(
            "(0,-0.9) -> (0.98,-0.8): length² = {} via {}",
            render::sig12(r.length_sq),
            r.minimizers
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
    )
}

fn region_feasibility() -> CriterionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let allowed_triangle: Vec<RollSequence> = vec![
        RollSequence::RUR,
        RollSequence::DRD,
        RollSequence::DLD,
        RollSequence::LUL,
    ];
    let mut bad_triangle = 0usize;
    for _ in 0..1_000 {
        // Fold a random source into the canonical triangle.
        let (_, s) = cubepath::regions::fold_into_triangle(interior_point(&mut rng));
        debug_assert!(CanonicalTriangle::contains(s));
        for (seq, _) in region_set(s).nonempty() {
            if !allowed_triangle.contains(seq) {
                bad_triangle += 1;
            }
        }
    }
    let mut bad_hypotenuse = 0usize;
    let mut failed_exclusions = 0usize;
    for _ in 0..100 {
        let k = rng.gen_range(-0.999..-0.001);
        let s = Point::new(k, k);
        for (seq, _) in region_set(s).nonempty() {
            if *seq != RollSequence::DRD && *seq != RollSequence::LUL {
                bad_hypotenuse += 1;
            }
        }
        if !diagonal_exclusion_check(s) {
            failed_exclusions += 1;
        }
    }
    CriterionReport::new(
        "region-feasibility",
        bad_triangle == 0 && bad_hypotenuse == 0 && failed_exclusions == 0,
        format!(
            "1000 triangle sources: {bad_triangle} regions outside RUR/DRD/DLD/LUL; 100 hypotenuse sources: {bad_hypotenuse} outside DRD/LUL, {failed_exclusions} failed diagonal exclusions (201 targets each)"
        ),
    )
}

fn corner_anchoring() -> CriterionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut general_failures = 0usize;
    for _ in 0..1_000 {
        let s = off_diagonal_point(&mut rng);
        let anchors = anchored_corners(&region_set(s));
        // Four regions, each touching exactly one corner, all distinct.
        let ok = anchors.len() == 4
            && anchors.iter().all(|c| c.len() == 1)
            && (0..4).all(|i| (i + 1..4).all(|j| anchors[i][0] != anchors[j][0]));
        if !ok {
            general_failures += 1;
        }
    }
    let mut diagonal_failures = 0usize;
    for _ in 0..100 {
        let s = diagonal_point(&mut rng);
        let anchors = anchored_corners(&region_set(s));
        let ok = anchors.len() == 2
            && anchors.iter().all(|c| c.len() == 1)
            && anchors[0][0] != anchors[1][0]
            // Anchored corners sit off the source's diagonal.
            && anchors
                .iter()
                .all(|c| (c[0].x * c[0].y) * (s.x * s.y) < 0.0);
        if !ok {
            diagonal_failures += 1;
        }
    }
    CriterionReport::new(
        "corner-anchoring",
        general_failures == 0 && diagonal_failures == 0,
        format!(
            "1000 off-diagonal sources: {general_failures} without four distinct single-corner regions; 100 diagonal sources: {diagonal_failures} without the two off-diagonal anchors"
        ),
    )
}

fn exact_vs_sampled() -> CriterionReport {
    const SOURCES: usize = 100;
    const PITCH: f64 = 0.005;
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let sources: Vec<Point> = (0..SOURCES).map(|_| interior_point(&mut rng)).collect();
    // estimate_probability parallelizes internally; keep the source loop
    // sequential so the worker pool is not oversubscribed.
    let worst = sources
        .iter()
        .map(|&s| (probability(s).unwrap() - estimate_probability(s, PITCH)).abs())
        .fold(0.0f64, f64::max);
    CriterionReport::new(
        "exact-vs-sampled",
        worst <= 0.01,
        format!("{SOURCES} random sources, pitch {PITCH}: worst |exact - sampled| = {worst:.6}"),
    )
}

fn halfplane_anchors() -> CriterionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let mut failures = 0usize;
    let mut worst = 0.0f64;
    for _ in 0..1_000 {
        let s = interior_point(&mut rng);
        let ulu = halfplane_for(&RollSequence::ULU, &RollSequence::LL, s).unwrap();
        let dld = halfplane_for(&RollSequence::DLD, &RollSequence::LL, s).unwrap();
        let ulu_anchor = ulu.eval(Point::new(-3.0, 1.0)).abs();
        let dld_anchor = dld.eval(Point::new(-3.0, -1.0)).abs();
        let ulu_slope = (ulu.boundary_slope() - (s.y + s.x) / (s.y - s.x - 2.0)).abs();
        let dld_slope = (dld.boundary_slope() - (s.x - s.y) / (s.x + s.y + 2.0)).abs();
        worst = worst
            .max(ulu_anchor)
            .max(dld_anchor)
            .max(ulu_slope)
            .max(dld_slope);
        if ulu_anchor > 1e-9 || dld_anchor > 1e-9 || ulu_slope > 1e-9 || dld_slope > 1e-9 {
            failures += 1;
        }
    }
    CriterionReport::new(
        "halfplane-anchors",
        failures == 0,
        format!(
            "1000 sources: boundaries through (-3,1) and (-3,-1) with the closed-form slopes; {failures} failures, worst deviation {worst:.2e}"
        ),
    )
}

/// Spanning-tree count of the face-adjacency graph by the matrix-tree
/// theorem, independent of the enumeration.
fn spanning_trees_by_determinant() -> i64 {
    // Octahedron graph: every face adjacent to the four non-opposite ones.
    // Laplacian minor determinant via fraction-free elimination.
    let mut lap = [[0i64; 6]; 6];
    for (a, row) in lap.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            if a != b && b != (a ^ 1) {
                *entry = -1;
            }
        }
        row[a] = 4;
    }
    let n = 5;
    let mut m = [[0i64; 5]; 5];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = lap[i][j];
        }
    }
    let mut prev = 1i64;
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1]
}

fn net_enumeration() -> CriterionReport {
    let nets = enumerate_nets();
    let determinant = spanning_trees_by_determinant();
    let passed = nets.tree_count == 384
        && determinant == 384
        && nets.class_count == 11
        && nets.representatives.iter().all(|r| r.cells().len() == 6);
    CriterionReport::new(
        "net-enumeration",
        passed,
        format!(
            "{} spanning trees (matrix-tree determinant {determinant}), {} hexomino classes",
            nets.tree_count, nets.class_count
        ),
    )
}

fn heatmap_properties(out_dir: &Path) -> CriterionReport {
    const N: usize = 101;
    let grid = heatmap(N, HeatmapMode::Exact);
    let mut symmetry_worst = 0.0f64;
    for j in 0..N {
        for i in 0..N {
            let v = grid.value(i, j);
            for (gi, gj) in [(N - 1 - i, j), (i, N - 1 - j), (j, i)] {
                symmetry_worst = symmetry_worst.max((grid.value(gi, gj) - v).abs());
            }
        }
    }
    let center = grid.value(N / 2, N / 2);
    let vmax = grid.max_value();
    let max_on_diagonal = (0..N * N).any(|idx| {
        let (i, j) = (idx % N, idx / N);
        grid.value(i, j) >= vmax - 1e-12
            && (grid.axis()[i].abs() - grid.axis()[j].abs()).abs() <= 1e-9
    });
    let csv_path = out_dir.join("heatmap_exact_101.csv");
    let svg_path = out_dir.join("heatmap_exact_101.svg");
    let export_ok = fs::write(&csv_path, render::heatmap_csv(&grid)).is_ok()
        && fs::write(&svg_path, render::heatmap_svg(&grid)).is_ok();
    let passed = symmetry_worst <= 1e-9 && center == 0.0 && !max_on_diagonal && export_ok;
    CriterionReport::new(
        "heatmap-properties",
        passed,
        format!(
            "exact {N}x{N} grid: symmetry deviation {symmetry_worst:.2e}, center {center}, max {vmax:.6} off the diagonals; exports {} and {}",
            csv_path.display(),
            svg_path.display()
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        let dir = std::env::temp_dir();
        for name in ["dudeney-cube", "four-face-witness", "net-enumeration"] {
            let report = run_criterion(name, &dir).unwrap();
            assert!(report.passed, "{name}: {}", report.detail);
        }
        assert!(run_criterion("no-such-criterion", &dir).is_none());
    }
}
