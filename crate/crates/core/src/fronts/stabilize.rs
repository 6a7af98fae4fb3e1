use super::{Direction, FrontEvent, FrontWord, OrientedFront};
use crate::Sign;

use FrontEvent::{LeftCusp as L, RightCusp as R};

/// Adds `i` zigzags of the first type (rotation +1 each) and `j` of the
/// second type (rotation -1 each) on the first traversal segment.
///
/// The zigzags are inserted right after event 0, on the upper branch of the
/// first left cusp. That strand keeps its direction, so the orientation flag
/// carries over unchanged.
pub fn stabilize(front: &OrientedFront, i: usize, j: usize) -> OrientedFront {
    if i == 0 && j == 0 {
        return front.clone();
    }
    // Traversed rightward, [L(2), R(1)] has two down cusps and [L(1), R(2)]
    // two up cusps. A leftward strand swaps the roles.
    let down_pair = [L(2), R(1)];
    let up_pair = [L(1), R(2)];
    let (positive, negative) = match front.strand_direction(0) {
        Direction::Rightward => (down_pair, up_pair),
        Direction::Leftward => (up_pair, down_pair),
    };
    let events = front.word().events();
    let mut out = Vec::with_capacity(events.len() + 2 * (i + j));
    out.push(events[0]);
    for _ in 0..i {
        out.extend_from_slice(&positive);
    }
    for _ in 0..j {
        out.extend_from_slice(&negative);
    }
    out.extend_from_slice(&events[1..]);
    OrientedFront::new(FrontWord::new(out), front.orientation())
        .expect("zigzag insertion keeps the word valid")
}

/// One zigzag: shifts the rotation number by `sign`.
pub fn insert_zigzag(front: &OrientedFront, sign: Sign) -> OrientedFront {
    match sign {
        Sign::Plus => stabilize(front, 1, 0),
        Sign::Minus => stabilize(front, 0, 1),
    }
}

/// Endpoint of the kink homotopy: one zigzag of each type, so the
/// Thurston–Bennequin number drops by two and the rotation number is kept.
pub fn kink_move(front: &OrientedFront) -> OrientedFront {
    stabilize(front, 1, 1)
}
