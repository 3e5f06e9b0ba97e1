//! Minimization over the twelve candidate paths.
//!
//! The shortest path between interior points of opposite faces traverses
//! three or four faces, so the minimum over the twelve canonical candidates
//! is the answer. Pseudopath candidates are computed too; they can never be
//! strictly shortest, and the minimizer set is filtered to locally shortest
//! candidates.

use crate::geometry::Point;
use crate::unfolding::{PathCandidate, RollSequence};
use crate::{require_interior, Error, TIE_TOLERANCE};

/// The solved instance: the shortest length, every sequence attaining it,
/// and all twelve candidate records.
#[derive(Clone, Debug)]
pub struct SolveResult {
    /// Shortest path length in half-edge units.
    pub length: f64,
    pub length_sq: f64,
    /// All sequences attaining the minimum within [`TIE_TOLERANCE`] on the
    /// squared length, locally shortest ones only. Never empty.
    pub minimizers: Vec<RollSequence>,
    /// Faces traversed: the minimum over the minimizers, 3 or 4.
    pub faces: u8,
    /// All twelve candidates, in canonical order.
    pub candidates: Vec<PathCandidate>,
}

impl SolveResult {
    /// Whether some shortest path traverses four faces.
    pub fn is_4fsp(&self) -> bool {
        self.minimizer_candidates().any(|c| c.faces() == Some(4))
    }

    pub fn minimizer_candidates(&self) -> impl Iterator<Item = &PathCandidate> {
        self.candidates
            .iter()
            .filter(|c| self.minimizers.contains(&c.sequence))
    }
}

/// Solves one instance. Both points must lie strictly inside the open face.
pub fn solve(source: Point, target: Point) -> Result<SolveResult, Error> {
    require_interior(source)?;
    require_interior(target)?;
    let candidates: Vec<PathCandidate> = RollSequence::CANONICAL
        .iter()
        .map(|seq| PathCandidate::evaluate(source, target, seq).expect("canonical sequence"))
        .collect();
    let raw_min = candidates
        .iter()
        .map(|c| c.length_sq)
        .fold(f64::INFINITY, f64::min);
    let minimizers: Vec<RollSequence> = candidates
        .iter()
        .filter(|c| c.length_sq <= raw_min + TIE_TOLERANCE && c.is_ls())
        .map(|c| c.sequence)
        .collect();
    // A pseudopath always has a strictly shorter locally shortest sibling,
    // so the tie set cannot consist of pseudopaths alone.
    assert!(
        !minimizers.is_empty(),
        "minimizer set empty for source {source}, target {target}"
    );
    let length_sq = candidates
        .iter()
        .filter(|c| minimizers.contains(&c.sequence))
        .map(|c| c.length_sq)
        .fold(f64::INFINITY, f64::min);
    let faces = candidates
        .iter()
        .filter(|c| minimizers.contains(&c.sequence))
        .filter_map(|c| c.faces())
        .min()
        .expect("minimizers are locally shortest");
    Ok(SolveResult {
        length: length_sq.sqrt(),
        length_sq,
        minimizers,
        faces,
        candidates,
    })
}

/// Whether the instance has a four-face shortest path.
pub fn is_4fsp(source: Point, target: Point) -> Result<bool, Error> {
    Ok(solve(source, target)?.is_4fsp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn centroid_to_centroid_is_a_four_way_tie() {
        let r = solve(p(0.0, 0.0), p(0.0, 0.0)).unwrap();
        assert_eq!(r.length, 4.0);
        assert_eq!(r.faces, 3);
        assert_eq!(
            r.minimizers,
            vec![
                RollSequence::RR,
                RollSequence::LL,
                RollSequence::UU,
                RollSequence::DD
            ]
        );
        assert!(!r.is_4fsp());
    }

    #[test]
    fn dudeney_positions_on_the_cube() {
        // Spider and fly each one foot from an edge on the center line of a
        // twelve-foot face, scaled to half-edge units. Up over the top and
        // down under the bottom measure exactly the same here, so the
        // minimum is an exact two-way tie of three-face paths.
        let r = solve(p(0.0, -5.0 / 6.0), p(0.0, 5.0 / 6.0)).unwrap();
        assert_eq!(r.length, 4.0);
        assert_eq!(r.length_sq, 16.0);
        assert_eq!(r.faces, 3);
        assert!(r.minimizers.contains(&RollSequence::UU));
        assert_eq!(r.minimizers, vec![RollSequence::UU, RollSequence::DD]);
    }

    #[test]
    fn four_face_witness() {
        let r = solve(p(0.0, -0.9), p(0.98, -0.8)).unwrap();
        assert_eq!(r.minimizers, vec![RollSequence::DRD]);
        assert!((r.length_sq - 5.9344).abs() < 1e-12);
        assert_eq!(r.faces, 4);
        assert!(r.is_4fsp());
        // Runner-up values for the three-face candidates.
        let by_seq = |seq: RollSequence| {
            r.candidates
                .iter()
                .find(|c| c.sequence == seq)
                .unwrap()
                .length_sq
        };
        assert!((by_seq(RollSequence::DD) - 6.2504).abs() < 1e-12);
        assert!((by_seq(RollSequence::RR) - 9.1304).abs() < 1e-12);
        assert!((by_seq(RollSequence::LL) - 24.8104).abs() < 1e-12);
        assert!((by_seq(RollSequence::UU) - 33.4504).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            solve(p(2.0, 0.0), p(0.0, 0.0)),
            Err(Error::OutsideFace(_))
        ));
        assert!(matches!(
            solve(p(0.0, 0.0), p(1.0, 0.0)),
            Err(Error::OutsideFace(_))
        ));
        assert!(matches!(
            solve(p(f64::NAN, 0.0), p(0.0, 0.0)),
            Err(Error::OutsideFace(_))
        ));
        // Within the margin of the boundary counts as the boundary.
        assert!(solve(p(1.0 - 1e-12, 0.0), p(0.0, 0.0)).is_err());
        assert!(solve(p(1.0 - 1e-6, 0.0), p(0.0, 0.0)).is_ok());
    }

    #[test]
    fn every_result_has_three_or_four_faces() {
        for &(s, t) in &[
            ((0.1, 0.2), (-0.3, 0.4)),
            ((0.85, -0.85), (0.9, 0.9)),
            ((-0.5, -0.8), (0.98, -0.97)),
        ] {
            let r = solve(p(s.0, s.1), p(t.0, t.1)).unwrap();
            assert!(r.faces == 3 || r.faces == 4);
            assert!((r.length - r.length_sq.sqrt()).abs() < 1e-12);
        }
    }
}
