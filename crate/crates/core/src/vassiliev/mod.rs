//! Singular framed knots, resolutions and finite-order invariants.
//!
//! A [`SingularFramedDiagram`] is stored through its all-positive
//! resolution: every marked crossing is kept as a positive crossing and a
//! resolution only has to flip the ones assigned a negative sign.

mod group;
mod ladder;

use thiserror::Error;

use crate::framed::{CrossingId, FramedDiagram, KnotDiagram, Level, Visit};
use crate::Sign;

pub use group::{AbelianGroup, ZMod};
pub use ladder::{
    extend_invariant, ladder_from_front, restrict_to_legendrian, roundtrip_check,
    verify_main_identity, InvariantLadder,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VassilievError {
    #[error("assignment has {found} signs for {expected} double points")]
    AssignmentMismatch { expected: usize, found: usize },
    #[error("crossing {0} is not in the diagram")]
    UnknownCrossing(CrossingId),
    #[error("crossing {0} is marked twice")]
    DuplicateMark(CrossingId),
    #[error("marked crossing {0} must be stored with positive sign")]
    NegativeMark(CrossingId),
    #[error("corpus element {index} has {found} double points, expected {expected}")]
    MarkedCount {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("rung {rung} needs {needed} populated rungs below it")]
    InsufficientRungs { rung: i64, needed: usize },
    #[error("invalid ladder: {0}")]
    InvalidLadder(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularFramedDiagram {
    positive: FramedDiagram,
    marked: Vec<CrossingId>,
}

impl SingularFramedDiagram {
    /// `positive` must carry every marked crossing with sign `+1`.
    pub fn new(positive: FramedDiagram, marked: &[CrossingId]) -> Result<Self, VassilievError> {
        let marked = check_marks(positive.diagram(), marked)?;
        for &c in &marked {
            if positive.diagram().sign_of(c) != Some(Sign::Plus) {
                return Err(VassilievError::NegativeMark(c));
            }
        }
        Ok(SingularFramedDiagram { positive, marked })
    }

    /// Marks crossings of any sign; negative ones are flipped first.
    pub fn from_marked(k: &FramedDiagram, marked: &[CrossingId]) -> Result<Self, VassilievError> {
        let marked = check_marks(k.diagram(), marked)?;
        let mut d = k.diagram().clone();
        for &c in &marked {
            if d.sign_of(c) == Some(Sign::Minus) {
                d = d.change_crossing(c).expect("checked above");
            }
        }
        Ok(SingularFramedDiagram {
            positive: FramedDiagram::new(d, k.offset()),
            marked,
        })
    }

    /// The all-positive resolution.
    pub fn framed(&self) -> &FramedDiagram {
        &self.positive
    }

    pub fn offset(&self) -> i64 {
        self.positive.offset()
    }

    /// Marked crossings in increasing order.
    pub fn marked(&self) -> &[CrossingId] {
        &self.marked
    }

    pub fn double_point_count(&self) -> usize {
        self.marked.len()
    }
}

fn check_marks(d: &KnotDiagram, marked: &[CrossingId]) -> Result<Vec<CrossingId>, VassilievError> {
    let mut out = marked.to_vec();
    out.sort_unstable();
    for w in out.windows(2) {
        if w[0] == w[1] {
            return Err(VassilievError::DuplicateMark(w[0]));
        }
    }
    if let Some(&c) = out.iter().find(|&&c| d.sign_of(c).is_none()) {
        return Err(VassilievError::UnknownCrossing(c));
    }
    Ok(out)
}

/// One sign per double point, aligned with [`SingularFramedDiagram::marked`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionAssignment(Vec<Sign>);

impl ResolutionAssignment {
    pub fn new(signs: Vec<Sign>) -> Self {
        ResolutionAssignment(signs)
    }

    pub fn all_positive(d: usize) -> Self {
        ResolutionAssignment(vec![Sign::Plus; d])
    }

    /// Bit `i` of `mask` set means double point `i` is resolved negatively.
    pub fn from_mask(d: usize, mask: u64) -> Self {
        ResolutionAssignment(
            (0..d)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|s| !s.is_plus()).count()
    }
}

pub fn resolve(
    s: &SingularFramedDiagram,
    a: &ResolutionAssignment,
) -> Result<FramedDiagram, VassilievError> {
    if a.0.len() != s.marked.len() {
        return Err(VassilievError::AssignmentMismatch {
            expected: s.marked.len(),
            found: a.0.len(),
        });
    }
    let mut d = s.positive.diagram().clone();
    for (&c, &sign) in s.marked.iter().zip(&a.0) {
        if sign == Sign::Minus {
            d = d.change_crossing(c).expect("marked crossings exist");
        }
    }
    Ok(FramedDiagram::new(d, s.positive.offset()))
}

/// `+1` for an even number of negative choices.
pub fn resolution_sign(a: &ResolutionAssignment) -> Sign {
    if a.negatives().is_multiple_of(2) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Signed sum of `x` over all `2^d` resolutions, in increasing mask order.
pub fn alternating_sum<G, F>(x: F, s: &SingularFramedDiagram) -> G
where
    G: AbelianGroup,
    F: Fn(&FramedDiagram) -> G,
{
    let d = s.double_point_count();
    assert!(d < 64, "too many double points to enumerate");
    (0..1u64 << d).fold(G::zero(), |acc, mask| {
        let a = ResolutionAssignment::from_mask(d, mask);
        let value = x(&resolve(s, &a).expect("assignment has the right length"));
        acc.add(&value.scale(resolution_sign(&a).value()))
    })
}

/// Whether the alternating sum of `x` vanishes on every element of a corpus
/// of diagrams with `n + 1` double points each.
pub fn is_order_at_most<G, F>(
    x: F,
    n: usize,
    corpus: &[SingularFramedDiagram],
) -> Result<bool, VassilievError>
where
    G: AbelianGroup,
    F: Fn(&FramedDiagram) -> G,
{
    for (index, s) in corpus.iter().enumerate() {
        if s.double_point_count() != n + 1 {
            return Err(VassilievError::MarkedCount {
                index,
                expected: n + 1,
                found: s.double_point_count(),
            });
        }
    }
    Ok(corpus.iter().all(|s| alternating_sum(&x, s) == G::zero()))
}

/// Appends `d` small kinks, each marked as a double point, and lowers the
/// offset so that the all-positive resolution has the framing of `k`.
/// Resolving `i` of them negatively gives a diagram of `K^{-2i}`.
pub fn make_kinked_singular(k: &FramedDiagram, d: usize) -> SingularFramedDiagram {
    let mut visits = k.diagram().visits().to_vec();
    let first = k.diagram().fresh_id();
    let ids: Vec<CrossingId> = (first..first + d as CrossingId).collect();
    for &c in &ids {
        visits.push(Visit::new(c, Level::Over, Sign::Plus));
        visits.push(Visit::new(c, Level::Under, Sign::Plus));
    }
    let positive = FramedDiagram::new(
        KnotDiagram::from_visits_unchecked(visits),
        k.offset() - d as i64,
    );
    SingularFramedDiagram {
        positive,
        marked: ids,
    }
}
