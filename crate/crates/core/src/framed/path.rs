//! Generic paths of framed knots: framed Reidemeister moves interleaved with
//! transverse passages through double points.

use super::{apply_move_with_inverse, CrossingId, FramedDiagram, FramedError, FramedMove};
use crate::topology::WordPair;
use crate::vassiliev::{resolve, ResolutionAssignment, SingularFramedDiagram};
use crate::Sign;

/// The singular knot met at a crossing change.
///
/// `loops` optionally records the two loops obtained by smoothing the double
/// point, as words in the fundamental group of the ambient manifold. Filters
/// that need them treat a missing pair as unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePointSnapshot {
    pub diagram: SingularFramedDiagram,
    pub loops: Option<WordPair>,
}

/// Passage through a double point. `sign` is the sign of the crossing after
/// the change, which is also the sign the passage contributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingChange {
    pub crossing: CrossingId,
    pub sign: Sign,
    pub snapshot: DoublePointSnapshot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathEvent {
    Move(FramedMove),
    CrossingChange(CrossingChange),
}

/// A validated path. All intermediate diagrams are recomputed on
/// construction, so a sequence that exists is consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSequence {
    start: FramedDiagram,
    events: Vec<PathEvent>,
    states: Vec<FramedDiagram>,
    inverses: Vec<Option<FramedMove>>,
}

fn invalid(index: usize, reason: impl Into<String>) -> FramedError {
    FramedError::InvalidPath {
        index,
        reason: reason.into(),
    }
}

fn apply_crossing_change(
    current: &FramedDiagram,
    change: &CrossingChange,
    index: usize,
) -> Result<FramedDiagram, FramedError> {
    let c = change.crossing;
    let before = current
        .diagram()
        .sign_of(c)
        .ok_or_else(|| invalid(index, format!("crossing {c} is not in the diagram")))?;
    if before != -change.sign {
        return Err(invalid(
            index,
            format!(
                "crossing {c} has sign {before}, a change to {} needs the opposite",
                change.sign
            ),
        ));
    }
    let snap = &change.snapshot.diagram;
    if snap.marked() != [c] {
        return Err(invalid(
            index,
            format!("snapshot must mark exactly crossing {c}"),
        ));
    }
    let old = resolve(snap, &ResolutionAssignment::new(vec![before]))
        .map_err(|e| invalid(index, e.to_string()))?;
    if &old != current {
        return Err(invalid(
            index,
            "snapshot does not resolve to the current diagram",
        ));
    }
    resolve(snap, &ResolutionAssignment::new(vec![change.sign]))
        .map_err(|e| invalid(index, e.to_string()))
}

impl MoveSequence {
    pub fn new(start: FramedDiagram, events: Vec<PathEvent>) -> Result<MoveSequence, FramedError> {
        let mut states = Vec::with_capacity(events.len() + 1);
        let mut inverses = Vec::with_capacity(events.len());
        states.push(start.clone());
        for (index, event) in events.iter().enumerate() {
            let current = states.last().expect("states start non-empty");
            let next = match event {
                PathEvent::Move(mv) => {
                    let (next, inverse) = apply_move_with_inverse(current, *mv)
                        .map_err(|e| invalid(index, e.to_string()))?;
                    inverses.push(Some(inverse));
                    next
                }
                PathEvent::CrossingChange(change) => {
                    inverses.push(None);
                    apply_crossing_change(current, change, index)?
                }
            };
            states.push(next);
        }
        Ok(MoveSequence {
            start,
            events,
            states,
            inverses,
        })
    }

    pub fn start(&self) -> &FramedDiagram {
        &self.start
    }

    pub fn end(&self) -> &FramedDiagram {
        self.states.last().expect("states start non-empty")
    }

    pub fn events(&self) -> &[PathEvent] {
        &self.events
    }

    /// Diagrams before and after every event, `events().len() + 1` of them.
    pub fn states(&self) -> &[FramedDiagram] {
        &self.states
    }

    pub fn crossing_changes(&self) -> impl Iterator<Item = &CrossingChange> {
        self.events.iter().filter_map(|e| match e {
            PathEvent::CrossingChange(c) => Some(c),
            PathEvent::Move(_) => None,
        })
    }

    /// This path followed by `other`, which must start where this one ends.
    pub fn concat(&self, other: &MoveSequence) -> Result<MoveSequence, FramedError> {
        if other.start() != self.end() {
            return Err(invalid(
                self.events.len(),
                "second path does not start where the first ends",
            ));
        }
        let mut events = self.events.clone();
        events.extend(other.events.iter().cloned());
        MoveSequence::new(self.start.clone(), events)
    }

    /// The same path traversed backwards; every crossing change flips sign.
    pub fn reversed(&self) -> MoveSequence {
        let events = self
            .events
            .iter()
            .zip(&self.inverses)
            .rev()
            .map(|(event, inverse)| match event {
                PathEvent::Move(_) => PathEvent::Move(inverse.expect("moves record an inverse")),
                PathEvent::CrossingChange(c) => PathEvent::CrossingChange(CrossingChange {
                    sign: -c.sign,
                    ..c.clone()
                }),
            })
            .collect();
        MoveSequence::new(self.end().clone(), events).expect("the reverse of a valid path is valid")
    }
}

/// Signed count of double points along the path.
pub fn delta_i(path: &MoveSequence) -> i64 {
    path.crossing_changes().map(|c| c.sign.value()).sum()
}

/// Signed count of the double points accepted by `filter`.
pub fn delta_i_filtered<F>(path: &MoveSequence, mut filter: F) -> i64
where
    F: FnMut(&DoublePointSnapshot) -> bool,
{
    path.crossing_changes()
        .filter(|c| filter(&c.snapshot))
        .map(|c| c.sign.value())
        .sum()
}
