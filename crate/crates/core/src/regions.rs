//! Exact 4-face-shortest-path endpoint regions.
//!
//! Fix a source point. For each three-move sequence, the target points
//! whose candidate beats all four three-face candidates form the
//! intersection of four half-planes with the base face: the squared-length
//! expressions share their quadratic part, so each comparison collapses to
//! a linear inequality. A target lies in some region exactly when it is the
//! endpoint of a four-face shortest path.
//!
//! Up to the symmetries of the square, sources can be folded into the
//! triangle with vertices (0,0), (0,-1), (-1,-1). For sources there, only
//! RUR, DRD, DLD and LUL can produce nonempty regions, and only DRD and LUL
//! when the source sits on the triangle's hypotenuse (the face diagonal).
//! The regions are computed for all eight sequences regardless, which keeps
//! that reduction under continuous test.

use std::collections::BTreeSet;

use crate::geometry::{self, ConvexPolygon, HalfPlane, Point, Symmetry};
use crate::unfolding::{image_of_target, squared_length, RollSequence};
use crate::{is_interior, Error};

/// Fundamental domain for source points under the square's symmetries:
/// the closed triangle `-1 < s2 <= s1 <= 0`, minus the origin.
#[derive(Clone, Copy, Debug, Default)]
pub struct CanonicalTriangle;

impl CanonicalTriangle {
    pub const VERTICES: [Point; 3] = [
        Point::new(0.0, 0.0),
        Point::new(0.0, -1.0),
        Point::new(-1.0, -1.0),
    ];

    pub fn contains(p: Point) -> bool {
        p.y > -1.0 && p.y <= p.x && p.x <= 0.0 && (p.x, p.y) != (0.0, 0.0)
    }
}

/// Tolerance for treating a folded source as lying on the hypotenuse.
pub const DIAGONAL_TOLERANCE: f64 = 1e-9;

/// Decomposes a canonical sequence's target image map into its orthogonal
/// part and offset; both have small integer entries, so this is exact.
fn image_affine(seq: &RollSequence) -> ([[f64; 2]; 2], Point) {
    let v = image_of_target(Point::new(0.0, 0.0), seq).expect("canonical sequence");
    let e1 = image_of_target(Point::new(1.0, 0.0), seq).unwrap();
    let e2 = image_of_target(Point::new(0.0, 1.0), seq).unwrap();
    let lin = [[e1.x - v.x, e2.x - v.x], [e1.y - v.y, e2.y - v.y]];
    (lin, v)
}

/// The open half-plane of targets where `seq_lhs` is strictly shorter than
/// `seq_rhs`, for the given source. The quadratic terms cancel, leaving an
/// inequality `alpha*x + beta*y < gamma` whose coefficients are affine in
/// the source coordinates. Comparing a sequence against itself yields the
/// degenerate "nothing" half-plane.
pub fn halfplane_for(
    seq_lhs: &RollSequence,
    seq_rhs: &RollSequence,
    s: Point,
) -> Result<HalfPlane, Error> {
    if !seq_lhs.is_canonical() {
        return Err(Error::NonCanonical(*seq_lhs));
    }
    if !seq_rhs.is_canonical() {
        return Err(Error::NonCanonical(*seq_rhs));
    }
    let (jl, vl) = image_affine(seq_lhs);
    let (jr, vr) = image_affine(seq_rhs);
    // |J t + v - s|^2 = |t|^2 + 2 t . J^T (v - s) + |v - s|^2, so the
    // comparison reduces to the difference of the linear parts.
    let (dlx, dly) = (vl.x - s.x, vl.y - s.y);
    let (drx, dry) = (vr.x - s.x, vr.y - s.y);
    let wl = (
        jl[0][0] * dlx + jl[1][0] * dly,
        jl[0][1] * dlx + jl[1][1] * dly,
    );
    let wr = (
        jr[0][0] * drx + jr[1][0] * dry,
        jr[0][1] * drx + jr[1][1] * dry,
    );
    let alpha = 2.0 * (wl.0 - wr.0);
    let beta = 2.0 * (wl.1 - wr.1);
    let gamma = (drx * drx + dry * dry) - (dlx * dlx + dly * dly);
    Ok(HalfPlane::new(alpha, beta, gamma))
}

/// The region of targets whose `seq4` candidate beats all four three-face
/// candidates: the base face clipped by the four comparison half-planes.
/// Possibly empty; always convex.
pub fn region_polygon(s: Point, seq4: &RollSequence) -> Result<ConvexPolygon, Error> {
    if !seq4.is_canonical_three_move() {
        return Err(Error::NonCanonical(*seq4));
    }
    debug_assert!(is_interior(s));
    let mut poly = ConvexPolygon::base_face();
    for seq3 in &RollSequence::TWO_MOVE {
        poly = poly.clip(&halfplane_for(seq4, seq3, s)?);
        if poly.is_empty() {
            break;
        }
    }
    Ok(poly)
}

/// Folds a point into the canonical triangle, returning the symmetry used.
/// Points on triangle boundaries take the first matching symmetry in a
/// fixed order, so the choice is deterministic.
pub fn fold_into_triangle(s: Point) -> (Symmetry, Point) {
    for g in Symmetry::ALL {
        let mapped = g.apply(s);
        if CanonicalTriangle::contains(mapped) {
            return (g, mapped);
        }
    }
    // Only the origin is in no triangle.
    (Symmetry::Identity, s)
}

/// The three-move sequences that can produce a four-face shortest path from
/// `s`: four in general, two for sources on a face diagonal, none for the
/// centroid.
pub fn feasible_sequences(s: Point) -> BTreeSet<RollSequence> {
    debug_assert!(is_interior(s));
    if s == Point::new(0.0, 0.0) {
        return BTreeSet::new();
    }
    let (g, folded) = fold_into_triangle(s);
    let base: &[RollSequence] = if (folded.x - folded.y).abs() <= DIAGONAL_TOLERANCE {
        &[RollSequence::DRD, RollSequence::LUL]
    } else {
        &[
            RollSequence::RUR,
            RollSequence::DRD,
            RollSequence::DLD,
            RollSequence::LUL,
        ]
    };
    let back = g.inverse();
    base.iter().map(|seq| seq.transformed(back)).collect()
}

/// The full region picture for one source point.
#[derive(Clone, Debug)]
pub struct RegionSet {
    pub source: Point,
    /// All eight three-move sequences with their (possibly empty) regions,
    /// in canonical order.
    polygons: Vec<(RollSequence, ConvexPolygon)>,
    /// Exact area of the union of the regions.
    pub union_area: f64,
    /// `union_area` over the base-face area.
    pub probability: f64,
}

impl RegionSet {
    pub fn polygons(&self) -> impl Iterator<Item = (&RollSequence, &ConvexPolygon)> {
        self.polygons.iter().map(|(s, p)| (s, p))
    }

    pub fn nonempty(&self) -> impl Iterator<Item = (&RollSequence, &ConvexPolygon)> {
        self.polygons().filter(|(_, p)| !p.is_empty())
    }

    pub fn polygon(&self, seq: &RollSequence) -> Option<&ConvexPolygon> {
        self.polygons.iter().find(|(s, _)| s == seq).map(|(_, p)| p)
    }

    /// Whether `t` lies strictly inside some region, by the given margin.
    pub fn contains_target(&self, t: Point, margin: f64) -> bool {
        self.polygons
            .iter()
            .any(|(_, p)| p.contains_strict(t, margin))
    }
}

/// Computes all eight region polygons and the exact union area by
/// inclusion-exclusion over the nonempty ones.
pub fn region_set(s: Point) -> RegionSet {
    debug_assert!(is_interior(s));
    let polygons: Vec<(RollSequence, ConvexPolygon)> = RollSequence::THREE_MOVE
        .iter()
        .map(|seq| (*seq, region_polygon(s, seq).expect("three-move sequence")))
        .collect();
    let nonempty: Vec<&ConvexPolygon> = polygons
        .iter()
        .map(|(_, p)| p)
        .filter(|p| !p.is_empty())
        .collect();
    let union_area = geometry::union_area(&nonempty);
    RegionSet {
        source: s,
        polygons,
        union_area,
        probability: union_area / 4.0,
    }
}

/// Number of diagonal target samples checked by [`diagonal_exclusion_check`].
pub const DIAGONAL_SAMPLES: usize = 201;

/// For a source on a face diagonal, no target on that diagonal is the
/// endpoint of a four-face shortest path: one of the matching three-face
/// candidates always wins. Verifies this on a dense sample of diagonal
/// targets; `true` means the exclusion held at every sample.
pub fn diagonal_exclusion_check(s: Point) -> bool {
    debug_assert!(is_interior(s));
    debug_assert!(
        (s.x.abs() - s.y.abs()).abs() <= DIAGONAL_TOLERANCE,
        "source {s} is not on a face diagonal"
    );
    let (_, folded) = fold_into_triangle(s);
    debug_assert!((folded.x - folded.y).abs() <= DIAGONAL_TOLERANCE);
    let feasible = [RollSequence::DRD, RollSequence::LUL];
    let direct = [RollSequence::RR, RollSequence::LL];
    for i in 0..DIAGONAL_SAMPLES {
        let x = -1.0 + 2.0 * (i + 1) as f64 / (DIAGONAL_SAMPLES + 1) as f64;
        let t = Point::new(x, x);
        let best3 = direct
            .iter()
            .map(|seq| squared_length(folded, t, seq).unwrap())
            .fold(f64::INFINITY, f64::min);
        let best4 = feasible
            .iter()
            .map(|seq| squared_length(folded, t, seq).unwrap())
            .fold(f64::INFINITY, f64::min);
        if best3 >= best4 {
            return false;
        }
    }
    true
}
