//! Shortest surface paths between interior points of opposite faces of a cube.
//!
//! The cube has edge length 2 and the shared coordinate system is the
//! *unfolding grid*: the source face rests on the central *base face*
//! `[-1,1]²`, the target point is projected straight down onto the same
//! square ("top view"), and every way of rolling the cube off its base
//! square unfolds the target face to some other square of the grid. A
//! candidate path is the straight segment from the source point to one of
//! the twelve unfolded images of the target point; the shortest candidate
//! that stays inside its strip of squares is the shortest path on the cube
//! surface.
//!
//! Module map:
//!
//! * [`geometry`] - planar primitives: points, axis reflections, quarter-turn
//!   rotations, half-planes, convex polygons and their clipping/areas.
//! * [`unfolding`] - the twelve canonical roll sequences, target images,
//!   squared lengths, strips, path classification and corner moves.
//! * [`orientation`] - the face-orientation automaton used when rolling.
//! * [`solver`] - minimization over the twelve candidates.
//! * [`regions`] - exact 4-face-shortest-path endpoint regions.
//! * [`distribution`] - the 4FSP probability over source points.
//! * [`oracle`] - brute-force cross-checks (exhaustive roll search, grid
//!   sampling), shipped for the CLI verification suites.

pub mod distribution;
pub mod geometry;
pub mod oracle;
pub mod orientation;
pub mod regions;
pub mod solver;
pub mod unfolding;

use geometry::Point;

/// Problems are only posed for points strictly inside the open face.
pub const INTERIOR_MARGIN: f64 = 1e-9;

/// Tie tolerance on squared lengths when collecting minimizer sets.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Whether `p` lies strictly inside the open base face `(-1,1)²`, staying
/// clear of the boundary by [`INTERIOR_MARGIN`].
pub fn is_interior(p: Point) -> bool {
    p.x.is_finite()
        && p.y.is_finite()
        && p.x.abs() < 1.0 - INTERIOR_MARGIN
        && p.y.abs() < 1.0 - INTERIOR_MARGIN
}

pub(crate) fn require_interior(p: Point) -> Result<(), Error> {
    if is_interior(p) {
        Ok(())
    } else {
        Err(Error::OutsideFace(p))
    }
}

/// Errors reported by the public operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A source or target point is not strictly inside the open face.
    #[error("point {0} is not strictly inside the open face (-1,1)^2")]
    OutsideFace(Point),
    /// An operation that only supports the twelve canonical roll sequences
    /// was given something else.
    #[error("roll sequence {0} is not one of the twelve canonical sequences")]
    NonCanonical(unfolding::RollSequence),
    /// Roll sequences are capped at five moves.
    #[error(
        "roll sequences are limited to {} moves",
        unfolding::RollSequence::MAX_MOVES
    )]
    TooManyMoves,
    /// An angle query with coincident points has no defined value.
    #[error("degenerate angle: ray endpoint coincides with the vertex")]
    DegenerateAngle,
}
