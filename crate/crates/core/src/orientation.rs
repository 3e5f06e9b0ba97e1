//! Tracks which cube face rests on the plane while the cube rolls over its
//! edges. Rolling is order-sensitive: right-then-up parks the cube on the
//! same grid square as up-then-right, but on a different face, so the full
//! orientation has to be carried along.

use crate::unfolding::Move;

/// Cube faces, named for the starting pose: the source face is `Bottom`,
/// the target face `Top`, and `North` is the back face when the grid is
/// drawn with +y pointing away from the viewer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    Bottom,
    Top,
    North,
    South,
    East,
    West,
}

impl Face {
    pub fn opposite(self) -> Face {
        match self {
            Face::Bottom => Face::Top,
            Face::Top => Face::Bottom,
            Face::North => Face::South,
            Face::South => Face::North,
            Face::East => Face::West,
            Face::West => Face::East,
        }
    }

    pub const ALL: [Face; 6] = [
        Face::Bottom,
        Face::Top,
        Face::North,
        Face::South,
        Face::East,
        Face::West,
    ];
}

/// Which face currently points which way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    pub down: Face,
    pub up: Face,
    pub north: Face,
    pub south: Face,
    pub east: Face,
    pub west: Face,
}

impl Orientation {
    /// The starting pose: source face down on the base square.
    pub const START: Orientation = Orientation {
        down: Face::Bottom,
        up: Face::Top,
        north: Face::North,
        south: Face::South,
        east: Face::East,
        west: Face::West,
    };

    /// Orientation after tipping the cube one square in the given direction.
    pub fn roll(self, m: Move) -> Orientation {
        let Orientation {
            down,
            up,
            north,
            south,
            east,
            west,
        } = self;
        match m {
            Move::R => Orientation {
                down: east,
                up: west,
                east: up,
                west: down,
                north,
                south,
            },
            Move::L => Orientation {
                down: west,
                up: east,
                west: up,
                east: down,
                north,
                south,
            },
            Move::U => Orientation {
                down: north,
                up: south,
                north: up,
                south: down,
                east,
                west,
            },
            Move::D => Orientation {
                down: south,
                up: north,
                south: up,
                north: down,
                east,
                west,
            },
        }
    }

    pub fn roll_sequence(self, moves: &[Move]) -> Orientation {
        moves.iter().fold(self, |o, &m| o.roll(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unfolding::Move::{R, U};

    #[test]
    fn rolling_order_matters() {
        // Right-then-up rests on the back face, up-then-right on the right
        // face; both park the cube on the same grid square.
        let ru = Orientation::START.roll_sequence(&[R, U]);
        let ur = Orientation::START.roll_sequence(&[U, R]);
        assert_eq!(ru.down, Face::North);
        assert_eq!(ur.down, Face::East);
        assert_ne!(ru, ur);
    }

    #[test]
    fn canonical_sequences_land_the_target_face() {
        use crate::unfolding::RollSequence;
        for seq in RollSequence::CANONICAL {
            let o = Orientation::START.roll_sequence(seq.as_slice());
            assert_eq!(o.down, Face::Top, "{seq}");
        }
    }

    #[test]
    fn four_rolls_from_any_pose_stay_consistent() {
        // Rolling right four times is a full revolution.
        let o = Orientation::START.roll_sequence(&[R, R, R, R]);
        assert_eq!(o, Orientation::START);
    }
}
