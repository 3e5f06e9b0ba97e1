//! The unfolding-grid model.
//!
//! Rolling the cube off its base square unfolds the target face onto some
//! other square of the grid. Twelve roll sequences matter for opposite-face
//! problems: four two-move sequences (3-face paths) and eight three-move
//! sequences (4-face paths). Each sequence sends the projected target point
//! `(t1, t2)` to a fixed affine image in the plane:
//!
//! | sequence | image            | sequence | image            |
//! |----------|------------------|----------|------------------|
//! | RR       | `(4-t1,  t2)`    | LL       | `(-4-t1,  t2)`   |
//! | RUR      | `(4-t2,  2-t1)`  | LUL      | `(-4+t2,  2+t1)` |
//! | RDR      | `(4+t2, -2+t1)`  | LDL      | `(-4-t2, -2-t1)` |
//! | UU       | `(t1,  4-t2)`    | DD       | `(t1, -4-t2)`    |
//! | URU      | `(2-t2,  4-t1)`  | DRD      | `(2+t2, -4+t1)`  |
//! | ULU      | `(-2+t2, 4+t1)`  | DLD      | `(-2-t2, -4-t1)` |
//!
//! A two-move image is the reflection of the target across the shared grid
//! line; a three-move image additionally rotates a quarter turn about the
//! corner of the strip (a *corner move*). A candidate whose segment leaves
//! its strip of squares, or that passes through a strip lattice vertex, is
//! a *pseudopath* and can never be shortest.

use std::fmt;

use crate::geometry::{self, reflect_axis, rotate_about, Axis, Point, RotationSign, Symmetry};
use crate::Error;

pub mod nets;

/// One edge-roll of the cube: right, left, up, or down in grid coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    R,
    L,
    U,
    D,
}

impl Move {
    pub const ALL: [Move; 4] = [Move::R, Move::L, Move::U, Move::D];

    /// Unit step in the grid.
    pub fn vector(self) -> (i32, i32) {
        match self {
            Move::R => (1, 0),
            Move::L => (-1, 0),
            Move::U => (0, 1),
            Move::D => (0, -1),
        }
    }

    pub fn from_vector(v: (i32, i32)) -> Option<Move> {
        Move::ALL.into_iter().find(|m| m.vector() == v)
    }

    /// The move a quarter turn counterclockwise from this one.
    pub fn ccw(self) -> Move {
        let (x, y) = self.vector();
        Move::from_vector((-y, x)).unwrap()
    }

    pub fn letter(self) -> char {
        match self {
            Move::R => 'R',
            Move::L => 'L',
            Move::U => 'U',
            Move::D => 'D',
        }
    }

    /// Image of this move under a square symmetry.
    pub fn transformed(self, g: Symmetry) -> Move {
        let (x, y) = self.vector();
        let p = g.apply(Point::new(x as f64, y as f64));
        Move::from_vector((p.x.round() as i32, p.y.round() as i32)).unwrap()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A word over `{R, L, U, D}` of at most five moves.
///
/// The twelve canonical sequences drive the solver; arbitrary sequences up
/// to five moves exist for the brute-force oracle.
#[derive(Clone, Copy, Debug)]
pub struct RollSequence {
    moves: [Move; Self::MAX_MOVES],
    len: u8,
}

impl RollSequence {
    pub const MAX_MOVES: usize = 5;

    pub fn new(moves: &[Move]) -> Result<Self, Error> {
        if moves.len() > Self::MAX_MOVES {
            return Err(Error::TooManyMoves);
        }
        let mut buf = [Move::R; Self::MAX_MOVES];
        buf[..moves.len()].copy_from_slice(moves);
        Ok(RollSequence {
            moves: buf,
            len: moves.len() as u8,
        })
    }

    const fn of2(a: Move, b: Move) -> Self {
        RollSequence {
            moves: [a, b, Move::R, Move::R, Move::R],
            len: 2,
        }
    }

    const fn of3(a: Move, b: Move, c: Move) -> Self {
        RollSequence {
            moves: [a, b, c, Move::R, Move::R],
            len: 3,
        }
    }

    pub const RR: Self = Self::of2(Move::R, Move::R);
    pub const LL: Self = Self::of2(Move::L, Move::L);
    pub const UU: Self = Self::of2(Move::U, Move::U);
    pub const DD: Self = Self::of2(Move::D, Move::D);
    pub const RUR: Self = Self::of3(Move::R, Move::U, Move::R);
    pub const RDR: Self = Self::of3(Move::R, Move::D, Move::R);
    pub const LUL: Self = Self::of3(Move::L, Move::U, Move::L);
    pub const LDL: Self = Self::of3(Move::L, Move::D, Move::L);
    pub const URU: Self = Self::of3(Move::U, Move::R, Move::U);
    pub const ULU: Self = Self::of3(Move::U, Move::L, Move::U);
    pub const DRD: Self = Self::of3(Move::D, Move::R, Move::D);
    pub const DLD: Self = Self::of3(Move::D, Move::L, Move::D);

    /// The twelve canonical sequences, in the order used everywhere.
    pub const CANONICAL: [Self; 12] = [
        Self::RR,
        Self::LL,
        Self::UU,
        Self::DD,
        Self::RUR,
        Self::RDR,
        Self::LUL,
        Self::LDL,
        Self::URU,
        Self::ULU,
        Self::DRD,
        Self::DLD,
    ];

    /// The four sequences whose paths traverse three faces.
    pub const TWO_MOVE: [Self; 4] = [Self::RR, Self::LL, Self::UU, Self::DD];

    /// The eight sequences whose paths traverse four faces.
    pub const THREE_MOVE: [Self; 8] = [
        Self::RUR,
        Self::RDR,
        Self::LUL,
        Self::LDL,
        Self::URU,
        Self::ULU,
        Self::DRD,
        Self::DLD,
    ];

    pub fn as_slice(&self) -> &[Move] {
        &self.moves[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_canonical(&self) -> bool {
        Self::CANONICAL.iter().any(|c| c == self)
    }

    /// `true` for the four two-move canonical sequences.
    pub fn is_canonical_two_move(&self) -> bool {
        Self::TWO_MOVE.iter().any(|c| c == self)
    }

    /// `true` for the eight three-move canonical sequences.
    pub fn is_canonical_three_move(&self) -> bool {
        Self::THREE_MOVE.iter().any(|c| c == self)
    }

    /// For a canonical three-move sequence `aba`, the sibling `aa` it is a
    /// corner move of.
    pub fn two_move_sibling(&self) -> Option<RollSequence> {
        if !self.is_canonical_three_move() {
            return None;
        }
        let a = self.moves[0];
        Some(RollSequence::of2(a, a))
    }

    /// Pivot vertex of the corner move relating a canonical three-move
    /// sequence `aba` to its sibling `aa`: three half-edges along the first
    /// direction, one along the second.
    pub fn corner_pivot(&self) -> Option<Point> {
        if !self.is_canonical_three_move() {
            return None;
        }
        let (ax, ay) = self.moves[0].vector();
        let (bx, by) = self.moves[1].vector();
        Some(Point::new((3 * ax + bx) as f64, (3 * ay + by) as f64))
    }

    /// Direction of the corner-move quarter turn: counterclockwise exactly
    /// when the middle move is the counterclockwise neighbor of the first.
    pub fn corner_rotation(&self) -> Option<RotationSign> {
        if !self.is_canonical_three_move() {
            return None;
        }
        Some(if self.moves[0].ccw() == self.moves[1] {
            RotationSign::Ccw
        } else {
            RotationSign::Cw
        })
    }

    /// Letterwise image under a square symmetry.
    pub fn transformed(&self, g: Symmetry) -> RollSequence {
        let mut out = *self;
        for m in &mut out.moves[..out.len as usize] {
            *m = m.transformed(g);
        }
        out
    }
}

impl PartialEq for RollSequence {
    fn eq(&self, other: &Self) -> bool {
        self.as_slice() == other.as_slice()
    }
}

impl Eq for RollSequence {}

impl PartialOrd for RollSequence {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RollSequence {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.as_slice().cmp(other.as_slice())
    }
}

impl std::hash::Hash for RollSequence {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.as_slice().hash(state);
    }
}

impl fmt::Display for RollSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        for m in self.as_slice() {
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An axis-aligned 2x2 grid square, identified by its center (even integer
/// coordinates; the base face is centered at the origin).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSquare {
    pub cx: i32,
    pub cy: i32,
}

impl GridSquare {
    pub const BASE: GridSquare = GridSquare { cx: 0, cy: 0 };

    pub fn x_range(&self) -> (f64, f64) {
        ((self.cx - 1) as f64, (self.cx + 1) as f64)
    }

    pub fn y_range(&self) -> (f64, f64) {
        ((self.cy - 1) as f64, (self.cy + 1) as f64)
    }

    pub fn corners(&self) -> [(i32, i32); 4] {
        [
            (self.cx - 1, self.cy - 1),
            (self.cx + 1, self.cy - 1),
            (self.cx + 1, self.cy + 1),
            (self.cx - 1, self.cy + 1),
        ]
    }

    pub fn contains(&self, p: Point, pad: f64) -> bool {
        (p.x - self.cx as f64).abs() <= 1.0 + pad && (p.y - self.cy as f64).abs() <= 1.0 + pad
    }
}

/// The squares a roll sequence walks over, starting at the base face. For
/// backtracking sequences (oracle use) squares may repeat; such candidates
/// classify as pseudopaths downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnfoldingStrip {
    squares: Vec<GridSquare>,
}

impl UnfoldingStrip {
    pub fn squares(&self) -> &[GridSquare] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// All distinct square corners of the strip; paths through any of them
    /// are pseudopaths.
    pub fn lattice_vertices(&self) -> Vec<(i32, i32)> {
        let mut vs: Vec<(i32, i32)> = self.squares.iter().flat_map(|sq| sq.corners()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Builds the strip of squares visited by `seq`, one step of two half-edges
/// per move.
pub fn strip_of(seq: &RollSequence) -> UnfoldingStrip {
    let mut squares = Vec::with_capacity(seq.len() + 1);
    let mut cur = GridSquare::BASE;
    squares.push(cur);
    for m in seq.as_slice() {
        let (dx, dy) = m.vector();
        cur = GridSquare {
            cx: cur.cx + 2 * dx,
            cy: cur.cy + 2 * dy,
        };
        squares.push(cur);
    }
    UnfoldingStrip { squares }
}

/// Unfolded position of the projected target point `t` for a canonical
/// sequence (the table in the module docs).
pub fn image_of_target(t: Point, seq: &RollSequence) -> Result<Point, Error> {
    use Move::{D, L, R, U};
    let (t1, t2) = (t.x, t.y);
    let p = match seq.as_slice() {
        [R, R] => Point::new(4.0 - t1, t2),
        [L, L] => Point::new(-4.0 - t1, t2),
        [U, U] => Point::new(t1, 4.0 - t2),
        [D, D] => Point::new(t1, -4.0 - t2),
        [R, U, R] => Point::new(4.0 - t2, 2.0 - t1),
        [R, D, R] => Point::new(4.0 + t2, -2.0 + t1),
        [L, U, L] => Point::new(-4.0 + t2, 2.0 + t1),
        [L, D, L] => Point::new(-4.0 - t2, -2.0 - t1),
        [U, R, U] => Point::new(2.0 - t2, 4.0 - t1),
        [U, L, U] => Point::new(-2.0 + t2, 4.0 + t1),
        [D, R, D] => Point::new(2.0 + t2, -4.0 + t1),
        [D, L, D] => Point::new(-2.0 - t2, -4.0 - t1),
        _ => return Err(Error::NonCanonical(*seq)),
    };
    Ok(p)
}

/// Reflection line for a canonical two-move sequence.
pub fn reflection_line(seq: &RollSequence) -> Option<Axis> {
    use Move::{D, L, R, U};
    match seq.as_slice() {
        [R, R] => Some(Axis::Vertical(2.0)),
        [L, L] => Some(Axis::Vertical(-2.0)),
        [U, U] => Some(Axis::Horizontal(2.0)),
        [D, D] => Some(Axis::Horizontal(-2.0)),
        _ => None,
    }
}

/// Squared candidate length for a canonical sequence, from the closed-form
/// distance expressions with source `(s1,s2)` and target `(x,y)`. Agrees
/// with `|s - image_of_target(t, seq)|²`.
pub fn squared_length(s: Point, t: Point, seq: &RollSequence) -> Result<f64, Error> {
    use Move::{D, L, R, U};
    let (s1, s2) = (s.x, s.y);
    let (x, y) = (t.x, t.y);
    let sq = |v: f64| v * v;
    let val = match seq.as_slice() {
        [R, R] => sq(x + s1 - 4.0) + sq(y - s2),
        [L, L] => sq(x + s1 + 4.0) + sq(y - s2),
        [U, U] => sq(x - s1) + sq(y + s2 - 4.0),
        [D, D] => sq(x - s1) + sq(y + s2 + 4.0),
        [R, U, R] => sq(y + s1 - 4.0) + sq(x + s2 - 2.0),
        [R, D, R] => sq(y - s1 + 4.0) + sq(x - s2 - 2.0),
        [L, U, L] => sq(y - s1 - 4.0) + sq(x - s2 + 2.0),
        [L, D, L] => sq(y + s1 + 4.0) + sq(x + s2 + 2.0),
        [U, R, U] => sq(y + s1 - 2.0) + sq(x + s2 - 4.0),
        [U, L, U] => sq(y - s1 - 2.0) + sq(x - s2 + 4.0),
        [D, R, D] => sq(y - s1 + 2.0) + sq(x - s2 - 4.0),
        [D, L, D] => sq(y + s1 + 2.0) + sq(x + s2 + 4.0),
        _ => return Err(Error::NonCanonical(*seq)),
    };
    Ok(val)
}

/// Outcome of testing a candidate segment against its strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathClass {
    /// Locally shortest: the segment crosses the strip squares in order and
    /// clears every lattice vertex. `faces` counts squares whose interior
    /// the segment meets.
    Ls { faces: u8 },
    /// Exits the strip, visits squares out of order, or passes through (or
    /// within tolerance of) a lattice vertex.
    Pseudo,
}

impl PathClass {
    pub fn is_ls(&self) -> bool {
        matches!(self, PathClass::Ls { .. })
    }

    pub fn faces(&self) -> Option<u8> {
        match self {
            PathClass::Ls { faces } => Some(*faces),
            PathClass::Pseudo => None,
        }
    }
}

/// Segments passing closer than this to a strip lattice vertex classify as
/// pseudopaths.
pub const VERTEX_MARGIN: f64 = 1e-9;

/// Overlap tolerance when checking that per-square parameter intervals
/// cover the whole segment.
const COVER_TOLERANCE: f64 = 1e-12;

fn segment_square_interval(source: Point, dx: f64, dy: f64, sq: &GridSquare) -> Option<(f64, f64)> {
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    for (p0, d, min, max) in [
        (source.x, dx, sq.x_range().0, sq.x_range().1),
        (source.y, dy, sq.y_range().0, sq.y_range().1),
    ] {
        if d == 0.0 {
            if p0 < min || p0 > max {
                return None;
            }
        } else {
            let (mut t1, mut t2) = ((min - p0) / d, (max - p0) / d);
            if t1 > t2 {
                std::mem::swap(&mut t1, &mut t2);
            }
            lo = lo.max(t1);
            hi = hi.min(t2);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Classifies the segment from `source` to `image` against a strip.
///
/// The segment parameter is clipped against each closed square; the
/// candidate is locally shortest when the clipped intervals are all
/// nonempty, run in strip order, jointly cover `[0,1]`, and the segment
/// stays at least [`VERTEX_MARGIN`] away from every lattice vertex.
pub fn classify_segment(source: Point, image: Point, strip: &UnfoldingStrip) -> PathClass {
    let dx = image.x - source.x;
    let dy = image.y - source.y;
    let mut intervals = Vec::with_capacity(strip.len());
    for sq in strip.squares() {
        match segment_square_interval(source, dx, dy, sq) {
            Some(iv) => intervals.push(iv),
            None => return PathClass::Pseudo,
        }
    }
    if intervals[0].0 > COVER_TOLERANCE {
        return PathClass::Pseudo;
    }
    if intervals.last().unwrap().1 < 1.0 - COVER_TOLERANCE {
        return PathClass::Pseudo;
    }
    for i in 1..intervals.len() {
        let (prev, cur) = (intervals[i - 1], intervals[i]);
        // Strip order and overlap.
        if cur.0 + COVER_TOLERANCE < prev.0
            || cur.1 + COVER_TOLERANCE < prev.1
            || cur.0 > prev.1 + COVER_TOLERANCE
        {
            return PathClass::Pseudo;
        }
    }
    let margin_sq = VERTEX_MARGIN * VERTEX_MARGIN;
    for (vx, vy) in strip.lattice_vertices() {
        let v = Point::new(vx as f64, vy as f64);
        if geometry::segment_point_dist_sq(source, image, v) <= margin_sq {
            return PathClass::Pseudo;
        }
    }
    let faces = intervals
        .iter()
        .filter(|(lo, hi)| hi - lo > COVER_TOLERANCE)
        .count() as u8;
    PathClass::Ls { faces }
}

/// Classifies the candidate for a canonical sequence.
pub fn classify_path(s: Point, t: Point, seq: &RollSequence) -> Result<PathClass, Error> {
    let image = image_of_target(t, seq)?;
    Ok(classify_segment(s, image, &strip_of(seq)))
}

/// One of the twelve candidates for a given problem instance.
#[derive(Clone, Copy, Debug)]
pub struct PathCandidate {
    pub sequence: RollSequence,
    pub source: Point,
    pub target: Point,
    /// Unfolded image of the target for this sequence.
    pub image: Point,
    pub length_sq: f64,
    pub class: PathClass,
}

impl PathCandidate {
    pub fn evaluate(s: Point, t: Point, seq: &RollSequence) -> Result<Self, Error> {
        let image = image_of_target(t, seq)?;
        let length_sq = squared_length(s, t, seq)?;
        let class = classify_segment(s, image, &strip_of(seq));
        Ok(PathCandidate {
            sequence: *seq,
            source: s,
            target: t,
            image,
            length_sq,
            class,
        })
    }

    pub fn is_ls(&self) -> bool {
        self.class.is_ls()
    }

    pub fn faces(&self) -> Option<u8> {
        self.class.faces()
    }
}

/// Angle at the corner-move pivot between the source and the current image;
/// the corner move shortens the path exactly when this exceeds 135 degrees.
pub fn decision_angle(s: Point, pivot: Point, image: Point) -> Result<f64, Error> {
    geometry::angle_deg(pivot, s, image)
}

/// Applies a corner move to an image point: a quarter turn about the pivot.
pub fn corner_move_image(image: Point, pivot: Point, sign: RotationSign) -> Point {
    rotate_about(image, pivot, sign)
}

/// Composes the reflect-then-rotate construction for a canonical sequence;
/// used to cross-check the closed-form images.
pub fn image_by_construction(t: Point, seq: &RollSequence) -> Result<Point, Error> {
    if seq.is_canonical_two_move() {
        return Ok(reflect_axis(t, reflection_line(seq).unwrap()));
    }
    if seq.is_canonical_three_move() {
        let sibling = seq.two_move_sibling().unwrap();
        let reflected = reflect_axis(t, reflection_line(&sibling).unwrap());
        return Ok(rotate_about(
            reflected,
            seq.corner_pivot().unwrap(),
            seq.corner_rotation().unwrap(),
        ));
    }
    Err(Error::NonCanonical(*seq))
}
