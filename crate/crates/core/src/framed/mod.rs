//! Framed knot diagrams.
//!
//! A [`KnotDiagram`] is a cyclic signed Gauss code. Planarity is not checked,
//! so virtual codes are accepted; every quantity computed here is well defined
//! on that larger class. A [`FramedDiagram`] adds an integer framing offset
//! against the blackboard framing, so its self-linking number is
//! `writhe + offset`.

mod ladder;
mod moves;
mod path;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::Sign;

pub use ladder::{ladder_classes, FramingCount, FramingLadder, RungClass, RungClasses};
pub use moves::{apply_move, apply_move_with_inverse, random_move, FramedMove, Kink};
pub use path::{
    delta_i, delta_i_filtered, CrossingChange, DoublePointSnapshot, MoveSequence, PathEvent,
};

pub type CrossingId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Over,
    Under,
}

impl Level {
    pub fn flipped(self) -> Level {
        match self {
            Level::Over => Level::Under,
            Level::Under => Level::Over,
        }
    }
}

/// One passage of the knot through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Visit {
    pub crossing: CrossingId,
    pub level: Level,
    pub sign: Sign,
}

impl Visit {
    pub fn new(crossing: CrossingId, level: Level, sign: Sign) -> Visit {
        Visit {
            crossing,
            level,
            sign,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaussError {
    #[error("crossing {crossing} is visited {count} times")]
    VisitCount { crossing: CrossingId, count: usize },
    #[error("crossing {crossing} is visited twice on the same level")]
    SameLevel { crossing: CrossingId },
    #[error("crossing {crossing} carries different signs on its two visits")]
    SignMismatch { crossing: CrossingId },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FramedError {
    #[error("invalid Gauss code: {0}")]
    InvalidGaussCode(#[from] GaussError),
    #[error("framing obstruction needs the same underlying diagram")]
    UnderlyingMismatch,
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("number of framings must be positive and even, got {0}")]
    OddFramingCount(u64),
    #[error("path event {index}: {reason}")]
    InvalidPath { index: usize, reason: String },
}

/// A cyclic signed Gauss code.
///
/// The code is stored starting at the over visit of the smallest crossing
/// id, so two codes that differ by a rotation are stored identically and
/// positions in the stored code are well defined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotDiagram {
    visits: Vec<Visit>,
}

impl KnotDiagram {
    pub fn new(visits: Vec<Visit>) -> Result<KnotDiagram, GaussError> {
        let mut seen: BTreeMap<CrossingId, Vec<Visit>> = BTreeMap::new();
        for v in &visits {
            seen.entry(v.crossing).or_default().push(*v);
        }
        for (&crossing, vs) in &seen {
            if vs.len() != 2 {
                return Err(GaussError::VisitCount {
                    crossing,
                    count: vs.len(),
                });
            }
            if vs[0].level == vs[1].level {
                return Err(GaussError::SameLevel { crossing });
            }
            if vs[0].sign != vs[1].sign {
                return Err(GaussError::SignMismatch { crossing });
            }
        }
        Ok(KnotDiagram::canonical(visits))
    }

    fn canonical(mut visits: Vec<Visit>) -> KnotDiagram {
        let start = KnotDiagram::canonical_start(&visits);
        visits.rotate_left(start);
        KnotDiagram { visits }
    }

    /// Where the stored code of `visits` starts.
    pub(crate) fn canonical_start(visits: &[Visit]) -> usize {
        visits
            .iter()
            .enumerate()
            .filter(|(_, v)| v.level == Level::Over)
            .min_by_key(|(_, v)| v.crossing)
            .map(|(i, _)| i)
            .unwrap_or(0)
    }

    pub fn unknot() -> KnotDiagram {
        KnotDiagram { visits: Vec::new() }
    }

    pub fn visits(&self) -> &[Visit] {
        &self.visits
    }

    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.visits.len() / 2
    }

    /// Crossing ids in increasing order.
    pub fn crossings(&self) -> Vec<CrossingId> {
        let mut ids: Vec<CrossingId> = self.visits.iter().map(|v| v.crossing).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn sign_of(&self, crossing: CrossingId) -> Option<Sign> {
        self.visits
            .iter()
            .find(|v| v.crossing == crossing)
            .map(|v| v.sign)
    }

    pub fn writhe(&self) -> i64 {
        self.visits.iter().map(|v| v.sign.value()).sum::<i64>() / 2
    }

    pub(crate) fn fresh_id(&self) -> CrossingId {
        self.visits.iter().map(|v| v.crossing).max().unwrap_or(0) + 1
    }

    /// Swaps over and under at one crossing and negates its sign.
    pub fn change_crossing(&self, crossing: CrossingId) -> Option<KnotDiagram> {
        self.sign_of(crossing)?;
        let visits = self
            .visits
            .iter()
            .map(|v| {
                if v.crossing == crossing {
                    Visit::new(v.crossing, v.level.flipped(), -v.sign)
                } else {
                    *v
                }
            })
            .collect();
        Some(KnotDiagram::canonical(visits))
    }

    pub(crate) fn from_visits_unchecked(visits: Vec<Visit>) -> KnotDiagram {
        debug_assert!(KnotDiagram::new(visits.clone()).is_ok());
        KnotDiagram::canonical(visits)
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.visits.is_empty() {
            return write!(f, "()");
        }
        for (i, v) in self.visits.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let l = if v.level == Level::Over { 'O' } else { 'U' };
            write!(f, "{l}{}{}", v.crossing, v.sign)?;
        }
        Ok(())
    }
}

/// A knot diagram with a framing offset against blackboard framing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedDiagram {
    diagram: KnotDiagram,
    offset: i64,
}

impl FramedDiagram {
    pub fn new(diagram: KnotDiagram, offset: i64) -> FramedDiagram {
        FramedDiagram { diagram, offset }
    }

    pub fn diagram(&self) -> &KnotDiagram {
        &self.diagram
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn self_linking(&self) -> i64 {
        self.diagram.writhe() + self.offset
    }
}

pub fn writhe(d: &KnotDiagram) -> i64 {
    d.writhe()
}

pub fn self_linking(k: &FramedDiagram) -> i64 {
    k.self_linking()
}

/// The framed knot `K^i`: the same embedding with `i` extra twists.
pub fn shift_framing(k: &FramedDiagram, i: i64) -> FramedDiagram {
    FramedDiagram::new(k.diagram.clone(), k.offset + i)
}

/// The integer obstruction `m(k1, k2)` for two framings of one embedding.
pub fn framing_obstruction(k1: &FramedDiagram, k2: &FramedDiagram) -> Result<i64, FramedError> {
    if k1.diagram != k2.diagram {
        return Err(FramedError::UnderlyingMismatch);
    }
    Ok(k1.self_linking() - k2.self_linking())
}

/// Two framings of one embedding are homotopic through framed curves exactly
/// when their obstruction is even.
pub fn framed_homotopic_parity(
    k1: &FramedDiagram,
    k2: &FramedDiagram,
) -> Result<bool, FramedError> {
    Ok(framing_obstruction(k1, k2)?.rem_euclid(2) == 0)
}
