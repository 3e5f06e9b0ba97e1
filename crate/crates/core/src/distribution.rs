//! The probability, per source point, that a uniformly random target has a
//! four-face shortest path: exactly (region areas over the face area) or
//! estimated on a target lattice, and evaluated over source grids for
//! heatmap export.

use rayon::prelude::*;

use crate::geometry::Point;
use crate::regions::region_set;
use crate::unfolding::{squared_length, RollSequence};
use crate::{require_interior, Error, TIE_TOLERANCE};

/// Exact 4FSP probability for one source: the union area of its endpoint
/// regions divided by the base-face area.
pub fn probability(s: Point) -> Result<f64, Error> {
    require_interior(s)?;
    Ok(region_set(s).probability)
}

/// Counting rule of the lattice estimator: a target counts when some
/// three-move candidate attains the minimum over all twelve squared
/// lengths, ties included. Evaluated from the closed forms alone so that
/// boundary lattice points need no strip classification.
fn counts_as_4fsp(s: Point, t: Point) -> bool {
    let min2 = RollSequence::TWO_MOVE
        .iter()
        .map(|seq| squared_length(s, t, seq).unwrap())
        .fold(f64::INFINITY, f64::min);
    let min3 = RollSequence::THREE_MOVE
        .iter()
        .map(|seq| squared_length(s, t, seq).unwrap())
        .fold(f64::INFINITY, f64::min);
    min3 <= min2 + TIE_TOLERANCE
}

/// Estimates the 4FSP probability for `s` by scanning target lattice
/// points with pitch `h` across the closed face `[-1,1]²`, boundary
/// included. `h` must divide 2 reasonably (0.02, 0.01, 0.005, ...).
pub fn estimate_probability(s: Point, h: f64) -> f64 {
    assert!(h > 0.0 && h <= 0.1, "pitch out of range: {h}");
    let m = (2.0 / h).round() as usize;
    let count: usize = (0..=m)
        .into_par_iter()
        .map(|j| {
            let y = -1.0 + 2.0 * j as f64 / m as f64;
            (0..=m)
                .filter(|&i| {
                    let x = -1.0 + 2.0 * i as f64 / m as f64;
                    counts_as_4fsp(s, Point::new(x, y))
                })
                .count()
        })
        .sum();
    count as f64 / ((m + 1) * (m + 1)) as f64
}

/// How heatmap values are computed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HeatmapMode {
    Exact,
    Sampled { pitch: f64 },
}

/// Per-source 4FSP probabilities on an `n x n` source lattice.
///
/// Sources sit at the cell centers `-1 + (2i+1)/n`, half a pitch clear of
/// the boundary; for odd `n` the centroid is a lattice point and its value
/// is zero. Values are stored row-major with the second coordinate varying
/// slowest.
#[derive(Clone, Debug)]
pub struct ProbabilityGrid {
    n: usize,
    axis: Vec<f64>,
    values: Vec<f64>,
    mode: HeatmapMode,
}

impl ProbabilityGrid {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn axis(&self) -> &[f64] {
        &self.axis
    }

    pub fn mode(&self) -> HeatmapMode {
        self.mode
    }

    /// Value at axis indices `(i, j)` for the source `(axis[i], axis[j])`.
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.n + i]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Lattice rows in export order: `(s1, s2, value)` with `s2` slowest.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        (0..self.n).flat_map(move |j| {
            (0..self.n).map(move |i| (self.axis[i], self.axis[j], self.value(i, j)))
        })
    }
}

/// Evaluates the probability over an `n x n` source grid (`n >= 3`).
/// Fans out across worker threads; the result does not depend on the
/// thread count.
pub fn heatmap(n: usize, mode: HeatmapMode) -> ProbabilityGrid {
    assert!(n >= 3, "heatmap needs at least a 3x3 grid");
    let axis: Vec<f64> = (0..n)
        .map(|i| -1.0 + (2 * i + 1) as f64 / n as f64)
        .collect();
    let values: Vec<f64> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let s = Point::new(axis[idx % n], axis[idx / n]);
            match mode {
                HeatmapMode::Exact => region_set(s).probability,
                HeatmapMode::Sampled { pitch } => estimate_probability(s, pitch),
            }
        })
        .collect();
    ProbabilityGrid {
        n,
        axis,
        values,
        mode,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Symmetry;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn centroid_probability_is_zero() {
        assert_eq!(probability(p(0.0, 0.0)).unwrap(), 0.0);
        assert!(probability(p(1.5, 0.0)).is_err());
        // The lattice estimator scans the closed face and counts ties. At
        // each face corner the wraparound image coincides with the direct
        // image exactly, so precisely the four corner lattice points count;
        // everything interior is a strict three-face win.
        assert_eq!(estimate_probability(p(0.0, 0.0), 0.02), 4.0 / 10201.0);
    }

    #[test]
    fn probability_is_symmetry_invariant() {
        let s = p(-0.35, -0.85);
        let base = probability(s).unwrap();
        assert!(base > 0.0);
        for g in Symmetry::ALL {
            let v = probability(g.apply(s)).unwrap();
            assert!((v - base).abs() < 1e-12, "{g:?}");
        }
    }

    #[test]
    fn witness_source_has_positive_probability() {
        assert!(probability(p(0.0, -0.9)).unwrap() > 0.0);
    }

    #[test]
    fn estimate_tracks_exact_value() {
        let s = p(0.0, -0.9);
        let exact = probability(s).unwrap();
        let coarse = estimate_probability(s, 0.01);
        let fine = estimate_probability(s, 0.005);
        assert!((coarse - exact).abs() <= 0.02);
        assert!((fine - exact).abs() <= 0.01);
    }

    #[test]
    fn heatmap_center_is_zero_for_odd_n() {
        let grid = heatmap(3, HeatmapMode::Exact);
        assert_eq!(grid.axis()[1], 0.0);
        assert_eq!(grid.value(1, 1), 0.0);
        assert_eq!(grid.rows().count(), 9);
    }

    #[test]
    fn exact_heatmap_is_symmetric_under_the_square_group() {
        let n = 21;
        let grid = heatmap(n, HeatmapMode::Exact);
        for j in 0..n {
            for i in 0..n {
                let v = grid.value(i, j);
                // Axis reflections and the diagonal generate the group.
                for &(gi, gj) in &[(n - 1 - i, j), (i, n - 1 - j), (j, i)] {
                    assert!((grid.value(gi, gj) - v).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn diagonal_sources_are_depressed() {
        // The face diagonals carry less probability than neighboring
        // off-diagonal sources at a comparable distance from the center.
        let on_diag = probability(p(-0.9, -0.9)).unwrap();
        let off_diag = probability(p(-0.95, -0.5)).unwrap();
        assert!(on_diag < off_diag);
    }
}
