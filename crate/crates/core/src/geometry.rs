//! Planar primitives for the unfolding grid: points, axis reflections,
//! quarter-turn rotations about a pivot, half-planes, and convex polygons
//! with Sutherland-Hodgman clipping.
//!
//! Everything is plain `f64`. All boundaries that arise in this problem are
//! lines with small rational coefficients, so doubles with a 1e-9 tolerance
//! for geometric predicates and 1e-12 for algebraic identities are enough.

use std::fmt;

use crate::Error;

/// Tolerance for geometric predicates (convexity, membership, anchoring).
pub const GEOM_TOLERANCE: f64 = 1e-9;

/// Vertices closer than this are merged when polygons are rebuilt.
pub const VERTEX_MERGE_TOLERANCE: f64 = 1e-12;

/// Polygons whose area falls at or below this are treated as empty.
pub const EMPTY_AREA_TOLERANCE: f64 = 1e-15;

/// A location in the unfolding-grid plane, in half-edge units (cube edge = 2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist_sq(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(self, other: Point) -> f64 {
        self.dist_sq(other).sqrt()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A vertical (`x = c`) or horizontal (`y = c`) mirror line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Axis {
    Vertical(f64),
    Horizontal(f64),
}

/// Direction of a quarter turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotationSign {
    /// +90 degrees, counterclockwise.
    Ccw,
    /// -90 degrees, clockwise.
    Cw,
}

impl RotationSign {
    pub fn opposite(self) -> Self {
        match self {
            RotationSign::Ccw => RotationSign::Cw,
            RotationSign::Cw => RotationSign::Ccw,
        }
    }
}

/// Rotates `p` by a quarter turn about `pivot`.
///
/// With pivot `(a,b)`: a +90 turn sends `(x,y)` to `(b+a-y, b-a+x)` and a
/// -90 turn sends it to `(a-b+y, a+b-x)`.
pub fn rotate_about(p: Point, pivot: Point, sign: RotationSign) -> Point {
    let (a, b) = (pivot.x, pivot.y);
    match sign {
        RotationSign::Ccw => Point::new(b + a - p.y, b - a + p.x),
        RotationSign::Cw => Point::new(a - b + p.y, a + b - p.x),
    }
}

/// Mirror image of `p` across a vertical or horizontal line.
pub fn reflect_axis(p: Point, axis: Axis) -> Point {
    match axis {
        Axis::Vertical(c) => Point::new(2.0 * c - p.x, p.y),
        Axis::Horizontal(c) => Point::new(p.x, 2.0 * c - p.y),
    }
}

/// Interior angle at `vertex` between the rays toward `a` and `b`, in
/// degrees within `[0, 180]`.
pub fn angle_deg(vertex: Point, a: Point, b: Point) -> Result<f64, Error> {
    let (ux, uy) = (a.x - vertex.x, a.y - vertex.y);
    let (vx, vy) = (b.x - vertex.x, b.y - vertex.y);
    let nu = (ux * ux + uy * uy).sqrt();
    let nv = (vx * vx + vy * vy).sqrt();
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::DegenerateAngle);
    }
    let cos = ((ux * vx + uy * vy) / (nu * nv)).clamp(-1.0, 1.0);
    Ok(cos.acos().to_degrees())
}

/// Squared distance from `p` to the closed segment `ab`.
pub fn segment_point_dist_sq(a: Point, b: Point, p: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len_sq = dx * dx + dy * dy;
    if len_sq == 0.0 {
        return p.dist_sq(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq).clamp(0.0, 1.0);
    p.dist_sq(Point::new(a.x + t * dx, a.y + t * dy))
}

/// The open half-plane `alpha*x + beta*y < gamma`.
///
/// `alpha = beta = 0` marks a degenerate comparison whose truth no longer
/// depends on the point: it holds everywhere when `gamma > 0` and nowhere
/// otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl HalfPlane {
    pub const fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        HalfPlane { alpha, beta, gamma }
    }

    pub fn is_degenerate(&self) -> bool {
        self.alpha == 0.0 && self.beta == 0.0
    }

    /// For a degenerate half-plane: does the comparison hold everywhere?
    pub fn degenerate_covers_plane(&self) -> bool {
        self.gamma > 0.0
    }

    /// `alpha*x + beta*y - gamma`; negative strictly inside.
    pub fn eval(&self, p: Point) -> f64 {
        self.alpha * p.x + self.beta * p.y - self.gamma
    }

    /// Strict membership with a margin measured in plane units.
    pub fn contains_strict(&self, p: Point, margin: f64) -> bool {
        if self.is_degenerate() {
            return self.degenerate_covers_plane();
        }
        let norm = (self.alpha * self.alpha + self.beta * self.beta).sqrt();
        self.eval(p) < -margin * norm
    }

    /// Slope of the boundary line `alpha*x + beta*y = gamma`.
    ///
    /// Infinite for vertical boundaries, `NaN` for degenerate ones.
    pub fn boundary_slope(&self) -> f64 {
        -self.alpha / self.beta
    }
}

/// A convex polygon with counterclockwise vertices; may be empty.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds a polygon from counterclockwise vertices. The caller is
    /// responsible for convexity; duplicate consecutive vertices are merged.
    pub fn new(vertices: Vec<Point>) -> Self {
        let mut poly = ConvexPolygon { vertices };
        poly.dedupe();
        poly
    }

    pub fn empty() -> Self {
        ConvexPolygon::default()
    }

    /// The closed base face `[-1,1]²`.
    pub fn base_face() -> Self {
        ConvexPolygon {
            vertices: vec![
                Point::new(-1.0, -1.0),
                Point::new(1.0, -1.0),
                Point::new(1.0, 1.0),
                Point::new(-1.0, 1.0),
            ],
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Empty means no interior: fewer than three vertices, or a collinear
    /// sliver of vanishing area.
    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 3 || self.raw_area() <= EMPTY_AREA_TOLERANCE
    }

    fn dedupe(&mut self) {
        let mut out: Vec<Point> = Vec::with_capacity(self.vertices.len());
        for &v in &self.vertices {
            if out
                .last()
                .is_some_and(|&p| p.dist(v) <= VERTEX_MERGE_TOLERANCE)
            {
                continue;
            }
            out.push(v);
        }
        while out.len() > 1 && out[0].dist(*out.last().unwrap()) <= VERTEX_MERGE_TOLERANCE {
            out.pop();
        }
        if out.len() < 3 {
            out.clear();
        }
        self.vertices = out;
    }

    /// Clips against the closed half-plane `alpha*x + beta*y <= gamma`.
    ///
    /// Vertices within a small band of the boundary count as inside, which
    /// keeps the operation idempotent when the line passes through a
    /// vertex. The open/closed distinction of the original strict
    /// inequalities is handled downstream by area and strict-membership
    /// semantics.
    pub fn clip(&self, h: &HalfPlane) -> ConvexPolygon {
        if h.is_degenerate() {
            return if h.degenerate_covers_plane() {
                self.clone()
            } else {
                ConvexPolygon::empty()
            };
        }
        if self.is_empty() {
            return ConvexPolygon::empty();
        }
        let tol = VERTEX_MERGE_TOLERANCE * (h.alpha.abs() + h.beta.abs());
        let inside = |v: f64| v <= tol;
        let mut out = Vec::with_capacity(self.vertices.len() + 1);
        let n = self.vertices.len();
        for i in 0..n {
            let cur = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            let c_val = h.eval(cur);
            let n_val = h.eval(next);
            if inside(c_val) {
                out.push(cur);
            }
            if inside(c_val) != inside(n_val) {
                let t = c_val / (c_val - n_val);
                out.push(Point::new(
                    cur.x + t * (next.x - cur.x),
                    cur.y + t * (next.y - cur.y),
                ));
            }
        }
        ConvexPolygon::new(out)
    }

    /// Intersection with another convex polygon, by clipping against each
    /// of the other's edges.
    pub fn intersection(&self, other: &ConvexPolygon) -> ConvexPolygon {
        if self.is_empty() || other.is_empty() {
            return ConvexPolygon::empty();
        }
        let mut acc = self.clone();
        let n = other.vertices.len();
        for i in 0..n {
            let a = other.vertices[i];
            let b = other.vertices[(i + 1) % n];
            // Keep the left side of the directed edge a -> b.
            let alpha = b.y - a.y;
            let beta = -(b.x - a.x);
            let gamma = alpha * a.x + beta * a.y;
            acc = acc.clip(&HalfPlane::new(alpha, beta, gamma));
            if acc.is_empty() {
                return acc;
            }
        }
        acc
    }

    fn raw_area(&self) -> f64 {
        let n = self.vertices.len();
        let mut twice = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            twice += a.x * b.y - b.x * a.y;
        }
        twice / 2.0
    }

    /// Nonnegative area by the shoelace formula; 0 for empty polygons.
    pub fn area(&self) -> f64 {
        if self.vertices.len() < 3 {
            return 0.0;
        }
        self.raw_area().max(0.0)
    }

    /// Strict interior membership with a margin (perpendicular distance to
    /// every edge exceeds `margin`).
    pub fn contains_strict(&self, p: Point, margin: f64) -> bool {
        if self.is_empty() {
            return false;
        }
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let (ex, ey) = (b.x - a.x, b.y - a.y);
            let len = (ex * ex + ey * ey).sqrt();
            if len == 0.0 {
                continue;
            }
            let cross = ex * (p.y - a.y) - ey * (p.x - a.x);
            if cross <= margin * len {
                return false;
            }
        }
        true
    }

    /// Distance from `p` to the polygon; 0 if `p` lies inside.
    pub fn distance(&self, p: Point) -> f64 {
        if self.is_empty() {
            return f64::INFINITY;
        }
        if self.contains_strict(p, 0.0) {
            return 0.0;
        }
        let n = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            best = best.min(segment_point_dist_sq(a, b, p));
        }
        best.sqrt()
    }

    /// Vertex centroid (not the area centroid); handy for placing labels.
    pub fn vertex_centroid(&self) -> Option<Point> {
        if self.vertices.is_empty() {
            return None;
        }
        let n = self.vertices.len() as f64;
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((0.0, 0.0), |(sx, sy), v| (sx + v.x, sy + v.y));
        Some(Point::new(sx / n, sy / n))
    }
}

/// Area of the union of convex polygons by inclusion-exclusion. All
/// pairwise and higher intersections are convex, so repeated clipping is
/// exact up to floating-point rounding.
pub fn union_area(polys: &[&ConvexPolygon]) -> f64 {
    let active: Vec<&ConvexPolygon> = polys.iter().copied().filter(|p| !p.is_empty()).collect();
    let m = active.len();
    if m == 0 {
        return 0.0;
    }
    assert!(m <= 16, "inclusion-exclusion over {m} polygons");
    let mut memo: Vec<Option<ConvexPolygon>> = vec![None; 1 << m];
    let mut total = 0.0;
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let piece = if rest == 0 {
            Some(active[low].clone())
        } else {
            memo[rest]
                .as_ref()
                .map(|p| p.intersection(active[low]))
                .filter(|p| !p.is_empty())
        };
        if let Some(p) = piece {
            let sign = if mask.count_ones() % 2 == 1 {
                1.0
            } else {
                -1.0
            };
            total += sign * p.area();
            memo[mask] = Some(p);
        }
    }
    total.max(0.0)
}

/// The eight symmetries of the square `[-1,1]²` (the dihedral group D4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    /// Counterclockwise quarter turn: `(x,y) -> (-y,x)`.
    Rot90,
    Rot180,
    /// Clockwise quarter turn: `(x,y) -> (y,-x)`.
    Rot270,
    /// Reflection across the x-axis: `(x,y) -> (x,-y)`.
    MirrorX,
    /// Reflection across the y-axis: `(x,y) -> (-x,y)`.
    MirrorY,
    /// Reflection across the main diagonal `y = x`.
    MirrorDiag,
    /// Reflection across the anti-diagonal `y = -x`.
    MirrorAnti,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::MirrorX,
        Symmetry::MirrorY,
        Symmetry::MirrorDiag,
        Symmetry::MirrorAnti,
    ];

    pub fn apply(self, p: Point) -> Point {
        match self {
            Symmetry::Identity => p,
            Symmetry::Rot90 => Point::new(-p.y, p.x),
            Symmetry::Rot180 => Point::new(-p.x, -p.y),
            Symmetry::Rot270 => Point::new(p.y, -p.x),
            Symmetry::MirrorX => Point::new(p.x, -p.y),
            Symmetry::MirrorY => Point::new(-p.x, p.y),
            Symmetry::MirrorDiag => Point::new(p.y, p.x),
            Symmetry::MirrorAnti => Point::new(-p.y, -p.x),
        }
    }

    pub fn inverse(self) -> Symmetry {
        match self {
            Symmetry::Rot90 => Symmetry::Rot270,
            Symmetry::Rot270 => Symmetry::Rot90,
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_matches_closed_form() {
        let p = rotate_about(
            Point::new(4.0, 0.0),
            Point::new(3.0, 1.0),
            RotationSign::Ccw,
        );
        assert_eq!(p, Point::new(4.0, 2.0));
        let q = rotate_about(Point::new(0.0, 0.0), Point::new(1.0, 0.0), RotationSign::Cw);
        assert_eq!(q, Point::new(1.0, 1.0));
    }

    #[test]
    fn pivot_is_fixed_by_rotation() {
        let c = Point::new(-2.5, 0.75);
        assert_eq!(rotate_about(c, c, RotationSign::Ccw), c);
        assert_eq!(rotate_about(c, c, RotationSign::Cw), c);
    }

    #[test]
    fn reflections() {
        assert_eq!(
            reflect_axis(Point::new(0.3, -0.5), Axis::Vertical(2.0)),
            Point::new(3.7, -0.5)
        );
        let on_axis = Point::new(2.0, 7.0);
        assert_eq!(reflect_axis(on_axis, Axis::Vertical(2.0)), on_axis);
        let p = Point::new(0.125, -0.875);
        assert_eq!(
            reflect_axis(
                reflect_axis(p, Axis::Horizontal(-2.0)),
                Axis::Horizontal(-2.0)
            ),
            p
        );
    }

    #[test]
    fn angles() {
        let o = Point::new(0.0, 0.0);
        let right = Point::new(1.0, 0.0);
        assert!((angle_deg(o, right, Point::new(0.0, 1.0)).unwrap() - 90.0).abs() < 1e-12);
        assert!((angle_deg(o, right, Point::new(-1.0, 1.0)).unwrap() - 135.0).abs() < 1e-12);
        assert!((angle_deg(o, right, Point::new(-1.0, 0.0)).unwrap() - 180.0).abs() < 1e-12);
        assert_eq!(angle_deg(o, o, right), Err(Error::DegenerateAngle));
    }

    #[test]
    fn clip_square_by_vertical_halfplane() {
        let square = ConvexPolygon::base_face();
        // x <= 0
        let left = square.clip(&HalfPlane::new(1.0, 0.0, 0.0));
        assert_eq!(left.vertices().len(), 4);
        assert!((left.area() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn clip_no_op_and_disjoint() {
        let square = ConvexPolygon::base_face();
        let containing = square.clip(&HalfPlane::new(1.0, 0.0, 5.0));
        assert_eq!(containing.vertices(), square.vertices());
        let disjoint = square.clip(&HalfPlane::new(1.0, 0.0, -5.0));
        assert!(disjoint.is_empty());
        assert_eq!(disjoint.area(), 0.0);
    }

    #[test]
    fn degenerate_halfplanes_resolve_by_gamma_sign() {
        let square = ConvexPolygon::base_face();
        assert!(!square.clip(&HalfPlane::new(0.0, 0.0, 1.0)).is_empty());
        assert!(square.clip(&HalfPlane::new(0.0, 0.0, 0.0)).is_empty());
        assert!(square.clip(&HalfPlane::new(0.0, 0.0, -1.0)).is_empty());
    }

    #[test]
    fn areas() {
        assert!((ConvexPolygon::base_face().area() - 4.0).abs() < 1e-12);
        assert_eq!(ConvexPolygon::empty().area(), 0.0);
        let tri = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ]);
        assert!((tri.area() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn strict_membership_and_distance() {
        let square = ConvexPolygon::base_face();
        assert!(square.contains_strict(Point::new(0.0, 0.0), 1e-9));
        assert!(!square.contains_strict(Point::new(1.0, 0.0), 1e-9));
        assert!(!square.contains_strict(Point::new(2.0, 0.0), 1e-9));
        assert_eq!(square.distance(Point::new(0.5, 0.5)), 0.0);
        assert!((square.distance(Point::new(2.0, 0.0)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn union_area_of_overlapping_squares() {
        let a = ConvexPolygon::base_face();
        let shifted = ConvexPolygon::new(vec![
            Point::new(0.0, -1.0),
            Point::new(2.0, -1.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 1.0),
        ]);
        // Each has area 4, overlap 2, union 6.
        assert!((union_area(&[&a, &shifted]) - 6.0).abs() < 1e-12);
        assert_eq!(union_area(&[]), 0.0);
        assert!((union_area(&[&a]) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn symmetries_are_involutive_or_inverse_pairs() {
        let p = Point::new(0.3, -0.7);
        for g in Symmetry::ALL {
            let back = g.inverse().apply(g.apply(p));
            assert_eq!(back, p, "{g:?}");
        }
    }
}
