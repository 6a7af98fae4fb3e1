//! Fronts of Legendrian knots in the standard contact space.
//!
//! A front is encoded as an x-ordered word of events. Reading left to right,
//! a [`FrontEvent::LeftCusp`] opens two new strands, a
//! [`FrontEvent::RightCusp`] closes two adjacent strands and a
//! [`FrontEvent::Crossing`] swaps two adjacent strands. Positions are 1-based
//! and counted from the top of the current x-slice.
//!
//! At a crossing the strand that moves down (position `i` to `i + 1`) has the
//! smaller slope and is therefore in front. With this convention a crossing
//! is positive exactly when both strands are traversed in the same
//! x-direction, and
//!
//! ```text
//! tb = writhe - cusps / 2,        r = (down cusps - up cusps) / 2.
//! ```

mod moves;
mod stabilize;

use std::fmt;

use thiserror::Error;

use crate::framed::{FramedDiagram, KnotDiagram, Level, Visit};
use crate::Sign;

pub use moves::{applicable_moves, front_move, FrontMove, Side, TangencyMove};
pub use stabilize::{insert_zigzag, kink_move, stabilize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrontEvent {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
}

impl FrontEvent {
    pub fn position(self) -> usize {
        match self {
            FrontEvent::LeftCusp(p) | FrontEvent::RightCusp(p) | FrontEvent::Crossing(p) => p,
        }
    }

    pub(crate) fn with_position(self, p: usize) -> FrontEvent {
        match self {
            FrontEvent::LeftCusp(_) => FrontEvent::LeftCusp(p),
            FrontEvent::RightCusp(_) => FrontEvent::RightCusp(p),
            FrontEvent::Crossing(_) => FrontEvent::Crossing(p),
        }
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrontEvent::LeftCusp(p) => write!(f, "L({p})"),
            FrontEvent::RightCusp(p) => write!(f, "R({p})"),
            FrontEvent::Crossing(p) => write!(f, "X({p})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrontError {
    #[error("event {event}: needs two strands but only {strands} exist")]
    StrandUnderflow { event: usize, strands: usize },
    #[error("event {event}: position {position} out of range for {strands} strands")]
    PositionOutOfRange {
        event: usize,
        position: usize,
        strands: usize,
    },
    #[error("{remaining} strands still open after the last event")]
    OpenStrands { remaining: usize },
    #[error("front has {components} components (event {event} starts a second one)")]
    NotAKnot { components: usize, event: usize },
}

/// A planar front as an x-ordered event word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrontWord {
    events: Vec<FrontEvent>,
}

impl FrontWord {
    /// Wraps a word without checking it; see [`validate_front`].
    pub fn new(events: Vec<FrontEvent>) -> FrontWord {
        FrontWord { events }
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

impl fmt::Display for FrontWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }
}

/// Which of the two traversal conventions is used. `Forward` traverses the
/// upper branch of the first left cusp rightward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Reverse,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Forward => Orientation::Reverse,
            Orientation::Reverse => Orientation::Forward,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspClass {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspKind {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cusp {
    pub event: usize,
    pub kind: CuspKind,
    pub class: CuspClass,
}

/// An x-monotone arc between a left cusp and a right cusp.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Strand {
    pub left: (usize, Branch),
    pub right: (usize, Branch),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct FrontCrossing {
    pub event: usize,
    /// Strand moving down through the crossing; it is in front.
    pub over: usize,
    pub under: usize,
}

/// Strand bookkeeping for a valid single-component word.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    /// `slices[k]` lists strand ids top to bottom just before event `k`.
    pub slices: Vec<Vec<usize>>,
    pub strands: Vec<Strand>,
    pub crossings: Vec<FrontCrossing>,
    /// The other strand at the same left cusp, indexed by strand id.
    left_partner: Vec<usize>,
    right_partner: Vec<usize>,
}

impl Layout {
    fn build(word: &FrontWord) -> Result<Layout, FrontError> {
        let mut current: Vec<usize> = Vec::new();
        let mut slices = Vec::with_capacity(word.len() + 1);
        let mut lefts: Vec<(usize, Branch)> = Vec::new();
        let mut rights: Vec<Option<(usize, Branch)>> = Vec::new();
        let mut crossings = Vec::new();
        for (k, &event) in word.events.iter().enumerate() {
            slices.push(current.clone());
            let n = current.len();
            match event {
                FrontEvent::LeftCusp(p) => {
                    if p == 0 || p > n + 1 {
                        return Err(FrontError::PositionOutOfRange {
                            event: k,
                            position: p,
                            strands: n,
                        });
                    }
                    let id = lefts.len();
                    lefts.push((k, Branch::Upper));
                    lefts.push((k, Branch::Lower));
                    rights.push(None);
                    rights.push(None);
                    current.splice(p - 1..p - 1, [id, id + 1]);
                }
                FrontEvent::RightCusp(p) | FrontEvent::Crossing(p) => {
                    if n < 2 {
                        return Err(FrontError::StrandUnderflow {
                            event: k,
                            strands: n,
                        });
                    }
                    if p == 0 || p + 1 > n {
                        return Err(FrontError::PositionOutOfRange {
                            event: k,
                            position: p,
                            strands: n,
                        });
                    }
                    let (a, b) = (current[p - 1], current[p]);
                    if let FrontEvent::RightCusp(_) = event {
                        rights[a] = Some((k, Branch::Upper));
                        rights[b] = Some((k, Branch::Lower));
                        current.drain(p - 1..=p);
                    } else {
                        crossings.push(FrontCrossing {
                            event: k,
                            over: a,
                            under: b,
                        });
                        current.swap(p - 1, p);
                    }
                }
            }
        }
        if !current.is_empty() {
            return Err(FrontError::OpenStrands {
                remaining: current.len(),
            });
        }
        slices.push(current);
        if lefts.is_empty() {
            return Err(FrontError::NotAKnot {
                components: 0,
                event: 0,
            });
        }
        let strands: Vec<Strand> = lefts
            .iter()
            .zip(&rights)
            .map(|(&left, right)| Strand {
                left,
                right: right.expect("closed word has every strand ended"),
            })
            .collect();
        // Left cusps create ids in pairs, right cusps pair arbitrary ids.
        let left_partner = (0..strands.len()).map(|s| s ^ 1).collect();
        let mut right_partner = vec![usize::MAX; strands.len()];
        for (s, st) in strands.iter().enumerate() {
            for (t, other) in strands.iter().enumerate() {
                if s != t && other.right.0 == st.right.0 {
                    right_partner[s] = t;
                }
            }
        }
        let layout = Layout {
            slices,
            strands,
            crossings,
            left_partner,
            right_partner,
        };
        layout.check_single_component()?;
        Ok(layout)
    }

    fn check_single_component(&self) -> Result<(), FrontError> {
        let n = self.strands.len();
        let mut component = vec![usize::MAX; n];
        let mut count = 0;
        let mut second_start = None;
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            if count == 1 {
                second_start = Some(self.strands[start].left.0);
            }
            let mut s = start;
            let mut at_right = true;
            while component[s] == usize::MAX {
                component[s] = count;
                s = if at_right {
                    self.right_partner[s]
                } else {
                    self.left_partner[s]
                };
                at_right = !at_right;
            }
            count += 1;
        }
        match second_start {
            None => Ok(()),
            Some(event) => Err(FrontError::NotAKnot {
                components: count,
                event,
            }),
        }
    }

    /// Traverses the knot from strand 0 in the given orientation.
    fn traverse(&self, orientation: Orientation) -> (Vec<Segment>, Vec<Direction>) {
        let start_dir = match orientation {
            Orientation::Forward => Direction::Rightward,
            Orientation::Reverse => Direction::Leftward,
        };
        let mut dirs = vec![Direction::Rightward; self.strands.len()];
        let mut segments = Vec::with_capacity(self.strands.len());
        let (mut s, mut d) = (0, start_dir);
        loop {
            dirs[s] = d;
            segments.push(Segment {
                strand: s,
                direction: d,
            });
            (s, d) = match d {
                Direction::Rightward => (self.right_partner[s], Direction::Leftward),
                Direction::Leftward => (self.left_partner[s], Direction::Rightward),
            };
            if s == 0 {
                break;
            }
        }
        (segments, dirs)
    }
}

/// Summary of a validated front.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrontSummary {
    pub cusp_count: usize,
    pub crossing_count: usize,
    pub writhe: i64,
    pub rotation: i64,
    pub bennequin: i64,
}

/// One strand traversed in one direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub strand: usize,
    pub direction: Direction,
}

/// A valid front together with a traversal direction.
#[derive(Clone, Debug)]
pub struct OrientedFront {
    word: FrontWord,
    orientation: Orientation,
    layout: Layout,
    directions: Vec<Direction>,
    traversal: Vec<Segment>,
    cusps: Vec<Cusp>,
}

impl PartialEq for OrientedFront {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && self.orientation == other.orientation
    }
}

impl Eq for OrientedFront {}

impl OrientedFront {
    pub fn new(word: FrontWord, orientation: Orientation) -> Result<OrientedFront, FrontError> {
        let layout = Layout::build(&word)?;
        let (traversal, directions) = layout.traverse(orientation);
        let mut cusps = Vec::with_capacity(layout.strands.len());
        for seg in &traversal {
            let st = layout.strands[seg.strand];
            // The cusp at the end of this segment, entered on its branch.
            let (event, branch, kind) = match seg.direction {
                Direction::Rightward => (st.right.0, st.right.1, CuspKind::Right),
                Direction::Leftward => (st.left.0, st.left.1, CuspKind::Left),
            };
            let class = match branch {
                Branch::Upper => CuspClass::Down,
                Branch::Lower => CuspClass::Up,
            };
            cusps.push(Cusp { event, kind, class });
        }
        cusps.sort_by_key(|c| c.event);
        Ok(OrientedFront {
            word,
            orientation,
            layout,
            directions,
            traversal,
            cusps,
        })
    }

    pub fn word(&self) -> &FrontWord {
        &self.word
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Closed traversal starting at strand 0.
    pub fn traversal(&self) -> &[Segment] {
        &self.traversal
    }

    /// Cusps in event order with their up/down class.
    pub fn cusp_classes(&self) -> &[Cusp] {
        &self.cusps
    }

    pub fn reversed(&self) -> OrientedFront {
        OrientedFront::new(self.word.clone(), self.orientation.reversed())
            .expect("reversing keeps a valid word valid")
    }

    /// Traversal rotated to start at segment `k`.
    pub fn rerooted_traversal(&self, k: usize) -> Vec<Segment> {
        let mut t = self.traversal.clone();
        let len = t.len();
        t.rotate_left(k % len);
        t
    }

    /// Cusp classes recomputed along an arbitrary rotation of the traversal.
    pub fn cusp_classes_from(&self, traversal: &[Segment]) -> Vec<Cusp> {
        let mut cusps: Vec<Cusp> = traversal
            .iter()
            .map(|seg| {
                let st = self.layout.strands[seg.strand];
                let (event, branch, kind) = match seg.direction {
                    Direction::Rightward => (st.right.0, st.right.1, CuspKind::Right),
                    Direction::Leftward => (st.left.0, st.left.1, CuspKind::Left),
                };
                let class = if branch == Branch::Upper {
                    CuspClass::Down
                } else {
                    CuspClass::Up
                };
                Cusp { event, kind, class }
            })
            .collect();
        cusps.sort_by_key(|c| c.event);
        cusps
    }

    pub fn cusp_count(&self) -> usize {
        self.cusps.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.layout.crossings.len()
    }

    pub fn strand_direction(&self, strand: usize) -> Direction {
        self.directions[strand]
    }

    /// Direction of the strand at 1-based `position` just before event `slice`.
    pub fn direction_at(&self, slice: usize, position: usize) -> Option<Direction> {
        let s = *self
            .layout
            .slices
            .get(slice)?
            .get(position.checked_sub(1)?)?;
        Some(self.directions[s])
    }

    pub fn strands_at(&self, slice: usize) -> usize {
        self.layout.slices.get(slice).map_or(0, Vec::len)
    }

    /// Signs of the crossings in event order.
    pub fn crossing_signs(&self) -> Vec<Sign> {
        self.layout
            .crossings
            .iter()
            .map(|c| {
                if self.directions[c.over] == self.directions[c.under] {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|s| s.value()).sum()
    }

    pub fn summary(&self) -> FrontSummary {
        FrontSummary {
            cusp_count: self.cusp_count(),
            crossing_count: self.crossing_count(),
            writhe: self.writhe(),
            rotation: rotation_number(self),
            bennequin: bennequin(self),
        }
    }
}

/// Checks every structural invariant of a front word and summarizes it
/// under the forward orientation.
pub fn validate_front(word: &FrontWord) -> Result<FrontSummary, FrontError> {
    Ok(OrientedFront::new(word.clone(), Orientation::Forward)?.summary())
}

pub fn rotation_number(front: &OrientedFront) -> i64 {
    let (down, up) = front
        .cusps
        .iter()
        .fold((0i64, 0i64), |(d, u), c| match c.class {
            CuspClass::Down => (d + 1, u),
            CuspClass::Up => (d, u + 1),
        });
    debug_assert_eq!((down - up) % 2, 0);
    (down - up) / 2
}

/// Thurston–Bennequin number, `writhe - cusps / 2`.
pub fn bennequin(front: &OrientedFront) -> i64 {
    front.writhe() - front.cusp_count() as i64 / 2
}

/// The front with cusps smoothed, framed by its contact framing.
///
/// Crossings are numbered 1.. in event order and visited in traversal order.
/// The offset is `-cusps / 2`, so the self-linking number equals the
/// Thurston–Bennequin number of the front.
pub fn front_to_framed(front: &OrientedFront) -> FramedDiagram {
    let layout = &front.layout;
    let signs = front.crossing_signs();
    let mut per_strand: Vec<Vec<usize>> = vec![Vec::new(); layout.strands.len()];
    for (idx, c) in layout.crossings.iter().enumerate() {
        per_strand[c.over].push(idx);
        per_strand[c.under].push(idx);
    }
    let mut visits = Vec::with_capacity(2 * layout.crossings.len());
    for seg in &front.traversal {
        let list = &per_strand[seg.strand];
        let ordered: Box<dyn Iterator<Item = &usize>> = match seg.direction {
            Direction::Rightward => Box::new(list.iter()),
            Direction::Leftward => Box::new(list.iter().rev()),
        };
        for &idx in ordered {
            let c = layout.crossings[idx];
            let level = if c.over == seg.strand {
                Level::Over
            } else {
                Level::Under
            };
            visits.push(Visit {
                crossing: idx as u32 + 1,
                level,
                sign: signs[idx],
            });
        }
    }
    let diagram = KnotDiagram::new(visits).expect("front crossings form a valid Gauss code");
    FramedDiagram::new(diagram, -(front.cusp_count() as i64) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FrontEvent::{Crossing as X, LeftCusp as L, RightCusp as R};

    fn unknot() -> FrontWord {
        FrontWord::new(vec![L(1), R(1)])
    }

    fn trefoil() -> FrontWord {
        FrontWord::new(vec![L(1), L(1), X(2), X(2), X(2), R(1), R(1)])
    }

    #[test]
    fn unknot_summary() {
        let s = validate_front(&unknot()).unwrap();
        assert_eq!(
            s,
            FrontSummary {
                cusp_count: 2,
                crossing_count: 0,
                writhe: 0,
                rotation: 0,
                bennequin: -1
            }
        );
    }

    #[test]
    fn trefoil_summary() {
        // Hand trace: strands a1 a2 from the first cusp, b1 b2 from the
        // second; the three crossings are all between a1 and b2, which are
        // traversed in the same x-direction, so every crossing is positive.
        let s = validate_front(&trefoil()).unwrap();
        assert_eq!(s.crossing_count, 3);
        assert_eq!(s.cusp_count, 4);
        assert_eq!(s.writhe, 3);
        assert_eq!(s.bennequin, 1);
        assert_eq!(s.rotation, 0);
    }

    #[test]
    fn crossing_on_empty_slice_underflows() {
        let err = validate_front(&FrontWord::new(vec![X(1)])).unwrap_err();
        assert_eq!(
            err,
            FrontError::StrandUnderflow {
                event: 0,
                strands: 0
            }
        );
    }

    #[test]
    fn position_checks() {
        let err = validate_front(&FrontWord::new(vec![L(2)])).unwrap_err();
        assert!(matches!(
            err,
            FrontError::PositionOutOfRange {
                event: 0,
                position: 2,
                ..
            }
        ));
        let err = validate_front(&FrontWord::new(vec![L(1), L(1), R(4)])).unwrap_err();
        assert!(matches!(
            err,
            FrontError::PositionOutOfRange { event: 2, .. }
        ));
        let err = validate_front(&FrontWord::new(vec![L(1), X(0)])).unwrap_err();
        assert!(matches!(
            err,
            FrontError::PositionOutOfRange { event: 1, .. }
        ));
    }

    #[test]
    fn open_and_multi_component_words() {
        let err = validate_front(&FrontWord::new(vec![L(1)])).unwrap_err();
        assert_eq!(err, FrontError::OpenStrands { remaining: 2 });
        let two = FrontWord::new(vec![L(1), R(1), L(1), R(1)]);
        assert_eq!(
            validate_front(&two).unwrap_err(),
            FrontError::NotAKnot {
                components: 2,
                event: 2
            }
        );
        let nested = FrontWord::new(vec![L(1), L(2), R(2), R(1)]);
        assert!(matches!(
            validate_front(&nested).unwrap_err(),
            FrontError::NotAKnot { components: 2, .. }
        ));
        assert!(matches!(
            validate_front(&FrontWord::new(vec![])).unwrap_err(),
            FrontError::NotAKnot { components: 0, .. }
        ));
    }

    #[test]
    fn reversal_negates_rotation() {
        let f = OrientedFront::new(unknot(), Orientation::Forward).unwrap();
        let z = insert_zigzag(&f, Sign::Plus);
        assert_eq!(rotation_number(&z), 1);
        assert_eq!(rotation_number(&z.reversed()), -1);
        assert_eq!(bennequin(&z.reversed()), bennequin(&z));
    }

    #[test]
    fn rerooting_keeps_cusp_classes() {
        let f = OrientedFront::new(trefoil(), Orientation::Forward).unwrap();
        for k in 0..f.traversal().len() {
            let t = f.rerooted_traversal(k);
            assert_eq!(f.cusp_classes_from(&t), f.cusp_classes());
        }
    }

    #[test]
    fn up_plus_down_is_all_cusps() {
        let f = OrientedFront::new(trefoil(), Orientation::Reverse).unwrap();
        let down = f
            .cusp_classes()
            .iter()
            .filter(|c| c.class == CuspClass::Down)
            .count();
        let up = f
            .cusp_classes()
            .iter()
            .filter(|c| c.class == CuspClass::Up)
            .count();
        assert_eq!(up + down, 4);
    }

    #[test]
    fn framed_image_of_unknot_and_trefoil() {
        let u = OrientedFront::new(unknot(), Orientation::Forward).unwrap();
        assert_eq!(front_to_framed(&u).self_linking(), -1);
        let t = OrientedFront::new(trefoil(), Orientation::Forward).unwrap();
        let framed = front_to_framed(&t);
        assert_eq!(framed.self_linking(), 1);
        assert_eq!(framed.diagram().writhe(), 3);
        // Alternating over/under along the traversal, as for any trefoil
        // diagram with three crossings.
        let levels: Vec<Level> = framed.diagram().visits().iter().map(|v| v.level).collect();
        for w in levels.windows(2) {
            assert_ne!(w[0], w[1]);
        }
    }
}
