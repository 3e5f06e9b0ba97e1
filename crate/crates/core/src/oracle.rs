//! Brute-force cross-checks, kept independent of the closed-form image
//! table: candidate images are produced by simulating the rigid motion of
//! the rolling cube in three dimensions, so agreement with the solver is
//! evidence rather than tautology.

use crate::geometry::Point;
use crate::orientation::{Face, Orientation};
use crate::solver;
use crate::unfolding::{classify_segment, strip_of, Move, RollSequence, UnfoldingStrip};
use crate::{require_interior, Error, TIE_TOLERANCE};

/// Best result of the exhaustive roll-sequence search.
#[derive(Clone, Debug)]
pub struct OracleResult {
    pub best_length_sq: f64,
    /// All locally shortest sequences attaining the minimum, any length.
    pub best_sequences: Vec<RollSequence>,
    /// Confirms the minimization ran over locally shortest candidates only.
    pub ls_only: bool,
    /// Best locally shortest squared length per roll count, where any
    /// candidate of that length exists.
    pub best_by_rolls: [Option<f64>; RollSequence::MAX_MOVES + 1],
}

/// A roll sequence that parks the target face on the plane, with the
/// unfolded image map extracted from the 3-D simulation. The linear part
/// and offset have small integer entries.
#[derive(Clone, Debug)]
struct SearchCandidate {
    seq: RollSequence,
    lin: [[f64; 2]; 2],
    offset: [f64; 2],
    strip: UnfoldingStrip,
}

#[derive(Clone, Copy)]
struct RollState {
    // Cube center on the plane; the cube occupies center +- 1 in x and y
    // and [0, 2] in z.
    cx: f64,
    cy: f64,
    // Current positions of three reference points of the target face.
    pts: [[f64; 3]; 3],
    orientation: Orientation,
}

impl RollState {
    fn start() -> Self {
        RollState {
            cx: 0.0,
            cy: 0.0,
            // Images of the target points (0,0), (1,0) and (0,1); the
            // target face starts at height two.
            pts: [[0.0, 0.0, 2.0], [1.0, 0.0, 2.0], [0.0, 1.0, 2.0]],
            orientation: Orientation::START,
        }
    }

    /// Tips the cube over the matching bottom edge. Quarter turns about
    /// integer axes keep every tracked coordinate exact.
    fn roll(&self, m: Move) -> RollState {
        let mut next = *self;
        match m {
            Move::R => {
                let c = self.cx + 1.0;
                for p in &mut next.pts {
                    *p = [c + p[2], p[1], c - p[0]];
                }
                next.cx += 2.0;
            }
            Move::L => {
                let c = self.cx - 1.0;
                for p in &mut next.pts {
                    *p = [c - p[2], p[1], p[0] - c];
                }
                next.cx -= 2.0;
            }
            Move::U => {
                let c = self.cy + 1.0;
                for p in &mut next.pts {
                    *p = [p[0], c + p[2], c - p[1]];
                }
                next.cy += 2.0;
            }
            Move::D => {
                let c = self.cy - 1.0;
                for p in &mut next.pts {
                    *p = [p[0], c - p[2], p[1] - c];
                }
                next.cy -= 2.0;
            }
        }
        next.orientation = self.orientation.roll(m);
        next
    }
}

/// Exhaustive searcher over all roll sequences up to a length cap. Build
/// once, then solve many instances against the same candidate set.
#[derive(Clone, Debug)]
pub struct BruteForceSolver {
    max_rolls: usize,
    candidates: Vec<SearchCandidate>,
}

impl BruteForceSolver {
    /// Enumerates every move sequence of length 1..=`max_rolls` and keeps
    /// those that land the target face on the plane.
    pub fn new(max_rolls: usize) -> Result<Self, Error> {
        if max_rolls > RollSequence::MAX_MOVES {
            return Err(Error::TooManyMoves);
        }
        let mut candidates = Vec::new();
        let mut moves = Vec::with_capacity(max_rolls);
        fn descend(
            state: RollState,
            moves: &mut Vec<Move>,
            max_rolls: usize,
            out: &mut Vec<SearchCandidate>,
        ) {
            for m in Move::ALL {
                let next = state.roll(m);
                moves.push(m);
                if next.orientation.down == Face::Top {
                    let [o, e1, e2] = next.pts;
                    debug_assert_eq!(o[2], 0.0, "target face must rest on the plane");
                    let seq = RollSequence::new(moves).unwrap();
                    out.push(SearchCandidate {
                        seq,
                        lin: [[e1[0] - o[0], e2[0] - o[0]], [e1[1] - o[1], e2[1] - o[1]]],
                        offset: [o[0], o[1]],
                        strip: strip_of(&seq),
                    });
                }
                if moves.len() < max_rolls {
                    descend(next, moves, max_rolls, out);
                }
                moves.pop();
            }
        }
        descend(RollState::start(), &mut moves, max_rolls, &mut candidates);
        Ok(BruteForceSolver {
            max_rolls,
            candidates,
        })
    }

    pub fn max_rolls(&self) -> usize {
        self.max_rolls
    }

    /// Number of sequences that land the target face.
    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    /// Unfolded image of `t` for one candidate, from the simulated motion.
    fn image(c: &SearchCandidate, t: Point) -> Point {
        Point::new(
            c.offset[0] + c.lin[0][0] * t.x + c.lin[0][1] * t.y,
            c.offset[1] + c.lin[1][0] * t.x + c.lin[1][1] * t.y,
        )
    }

    /// Minimizes squared length over locally shortest candidates.
    pub fn solve(&self, s: Point, t: Point) -> Result<OracleResult, Error> {
        require_interior(s)?;
        require_interior(t)?;
        let mut best = f64::INFINITY;
        let mut best_sequences = Vec::new();
        let mut best_by_rolls = [None::<f64>; RollSequence::MAX_MOVES + 1];
        for c in &self.candidates {
            let image = Self::image(c, t);
            if !classify_segment(s, image, &c.strip).is_ls() {
                continue;
            }
            let len_sq = s.dist_sq(image);
            let slot = &mut best_by_rolls[c.seq.len()];
            if slot.is_none_or(|v| len_sq < v) {
                *slot = Some(len_sq);
            }
            if len_sq < best - TIE_TOLERANCE {
                best = len_sq;
                best_sequences.clear();
                best_sequences.push(c.seq);
            } else if len_sq <= best + TIE_TOLERANCE {
                best = best.min(len_sq);
                best_sequences.push(c.seq);
            }
        }
        assert!(
            !best_sequences.is_empty(),
            "no locally shortest candidate for source {s}, target {t}"
        );
        Ok(OracleResult {
            best_length_sq: best,
            best_sequences,
            ls_only: true,
            best_by_rolls,
        })
    }
}

/// One-shot exhaustive search; prefer [`BruteForceSolver`] when solving
/// many instances.
pub fn brute_force_solve(s: Point, t: Point, max_rolls: usize) -> Result<OracleResult, Error> {
    BruteForceSolver::new(max_rolls)?.solve(s, t)
}

/// Lattice scan of targets for one source: counts 4FSP endpoints among
/// interior lattice points (pitch `h` across the face) using the full
/// solver per target, and returns the positive points as a mask for
/// cross-checking against the exact region polygons.
pub fn grid_region_sample(s: Point, h: f64) -> Result<(usize, usize, Vec<Point>), Error> {
    require_interior(s)?;
    assert!(h > 0.0 && h <= 0.1, "pitch out of range: {h}");
    let m = (2.0 / h).round() as usize;
    let mut count = 0usize;
    let mut total = 0usize;
    let mut mask = Vec::new();
    for j in 0..=m {
        let y = -1.0 + 2.0 * j as f64 / m as f64;
        for i in 0..=m {
            let x = -1.0 + 2.0 * i as f64 / m as f64;
            let t = Point::new(x, y);
            if !crate::is_interior(t) {
                continue;
            }
            total += 1;
            if solver::solve(s, t)?.is_4fsp() {
                count += 1;
                mask.push(t);
            }
        }
    }
    Ok((count, total, mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::region_set;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn candidate_images_match_the_closed_forms() {
        // The simulated motion must reproduce the unfolded images of the
        // twelve canonical sequences.
        let bf = BruteForceSolver::new(3).unwrap();
        let t = p(0.37, -0.62);
        for seq in RollSequence::CANONICAL {
            let c = bf
                .candidates
                .iter()
                .find(|c| c.seq == seq)
                .unwrap_or_else(|| panic!("{seq} missing"));
            let simulated = BruteForceSolver::image(c, t);
            let closed = crate::unfolding::image_of_target(t, &seq).unwrap();
            assert_eq!(simulated, closed, "{seq}");
        }
    }

    #[test]
    fn trivial_instance_matches_solver() {
        let r = brute_force_solve(p(0.0, 0.0), p(0.0, 0.0), 3).unwrap();
        assert_eq!(r.best_length_sq, 16.0);
        assert!(r.ls_only);
        let direct = solver::solve(p(0.0, 0.0), p(0.0, 0.0)).unwrap();
        assert!((r.best_length_sq - direct.length_sq).abs() < 1e-12);
    }

    #[test]
    fn dudeney_instance() {
        let r = brute_force_solve(p(0.0, -5.0 / 6.0), p(0.0, 5.0 / 6.0), 5).unwrap();
        assert!((r.best_length_sq - 16.0).abs() < 1e-12);
        assert!(r.best_sequences.contains(&RollSequence::UU));
    }

    #[test]
    fn witness_is_a_strict_four_face_minimum() {
        let r = brute_force_solve(p(0.0, -0.9), p(0.98, -0.8), 5).unwrap();
        assert_eq!(r.best_sequences, vec![RollSequence::DRD]);
        assert!((r.best_length_sq - 5.9344).abs() < 1e-9);
        // No four- or five-roll candidate ties or beats it.
        for rolls in [4, 5] {
            if let Some(v) = r.best_by_rolls[rolls] {
                assert!(v > r.best_length_sq + TIE_TOLERANCE, "{rolls} rolls: {v}");
            }
        }
    }

    #[test]
    fn search_space_size() {
        // 4 + 16 + 64 + 256 + 1024 sequences, of which 220 land the target
        // face. Within three rolls those are exactly the twelve canonical
        // sequences: nothing shorter or rearranged reaches the opposite
        // face.
        let bf = BruteForceSolver::new(5).unwrap();
        assert_eq!(bf.candidate_count(), 220);
        let bf3 = BruteForceSolver::new(3).unwrap();
        assert_eq!(bf3.candidate_count(), 12);
        for c in &bf3.candidates {
            assert!(c.seq.is_canonical(), "{}", c.seq);
        }
        assert!(BruteForceSolver::new(6).is_err());
    }

    #[test]
    fn centroid_grid_sample_is_empty() {
        let (count, total, mask) = grid_region_sample(p(0.0, 0.0), 0.1).unwrap();
        assert_eq!(count, 0);
        assert!(mask.is_empty());
        assert_eq!(total, 19 * 19);
    }

    #[test]
    fn grid_sample_tracks_exact_region_area() {
        let s = p(0.0, -0.9);
        let (count, total, mask) = grid_region_sample(s, 0.01).unwrap();
        let exact = region_set(s);
        let estimate = count as f64 / total as f64;
        assert!((estimate - exact.probability).abs() <= 0.01);
        // Every masked point lies inside or within a band of the union.
        let band = 2.0 * 0.01;
        for t in mask {
            let dist = exact
                .nonempty()
                .map(|(_, poly)| poly.distance(t))
                .fold(f64::INFINITY, f64::min);
            assert!(dist <= band, "masked point {t} at distance {dist}");
        }
    }
}
