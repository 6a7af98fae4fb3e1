//! Legendrian front moves as local rewrites of the event word.
//!
//! Each rewrite replaces a window `events[site..site + k]` by another window
//! whose strand positions agree with it on both boundary slices, so the rest
//! of the word is untouched. Besides the three Legendrian Reidemeister moves
//! a `Commute` move exchanges two adjacent events acting on disjoint strands
//! (planar isotopy).

use thiserror::Error;

use super::{FrontEvent, FrontWord, Orientation, OrientedFront};

use FrontEvent::{Crossing as X, LeftCusp as L, RightCusp as R};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TangencyMove {
    /// Remove the loop `[L, X, R]` starting at the site.
    Remove,
    /// Insert a loop on the strand at `position` of the slice before the
    /// site, hanging on the given side of it.
    Insert { position: usize, side: Side },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrontMove {
    /// Swap `events[site]` and `events[site + 1]`.
    Commute,
    /// `[X(p), X(p+1), X(p)]` and `[X(p+1), X(p), X(p+1)]` at the site.
    TriplePoint,
    /// A strand passing in front of a cusp. With `expand: None` the
    /// three-event pattern at the site contracts to a single cusp; with
    /// `Some(side)` the single cusp at the site is expanded by pulling the
    /// neighbouring strand on that side through it.
    CuspThroughStrand { expand: Option<Side> },
    /// A strand acquiring (or losing) a small loop made of two cusps and a
    /// crossing, passing through a self-tangency of the front.
    Tangency(TangencyMove),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move not applicable at event {site}: {reason}")]
    MoveNotApplicable { site: usize, reason: String },
}

fn not_applicable(site: usize, reason: impl Into<String>) -> MoveError {
    MoveError::MoveNotApplicable {
        site,
        reason: reason.into(),
    }
}

/// Applies a front move, keeping the orientation of the knot.
///
/// The result is re-validated and its orientation flag is chosen so that a
/// strand outside the rewritten window keeps its traversal direction.
pub fn front_move(
    front: &OrientedFront,
    mv: FrontMove,
    site: usize,
) -> Result<OrientedFront, MoveError> {
    let events = front.word().events();
    let (old_len, replacement) = rewrite(front, mv, site)?;
    let mut out = Vec::with_capacity(events.len() - old_len + replacement.len());
    out.extend_from_slice(&events[..site]);
    out.extend_from_slice(&replacement);
    out.extend_from_slice(&events[site + old_len..]);
    let word = FrontWord::new(out);
    let candidate = OrientedFront::new(word.clone(), Orientation::Forward)
        .map_err(|e| not_applicable(site, format!("rewrite produced an invalid word: {e}")))?;

    // A boundary slice of the window is shared by both words.
    let (old_slice, new_slice) = if front.strands_at(site) > 0 {
        (site, site)
    } else {
        (site + old_len, site + replacement.len())
    };
    let before = front
        .direction_at(old_slice, 1)
        .expect("a knot has strands on one side of any window");
    let after = candidate
        .direction_at(new_slice, 1)
        .expect("boundary slices agree");
    if before == after {
        Ok(candidate)
    } else {
        Ok(OrientedFront::new(word, Orientation::Reverse).expect("already validated"))
    }
}

fn rewrite(
    front: &OrientedFront,
    mv: FrontMove,
    site: usize,
) -> Result<(usize, Vec<FrontEvent>), MoveError> {
    let events = front.word().events();
    let window = |k: usize| -> Result<&[FrontEvent], MoveError> {
        events
            .get(site..site + k)
            .ok_or_else(|| not_applicable(site, format!("needs {k} events from the site")))
    };
    match mv {
        FrontMove::Commute => {
            let w = window(2)?;
            let (a, b) =
                commute(w[0], w[1]).ok_or_else(|| not_applicable(site, "events share strands"))?;
            Ok((2, vec![a, b]))
        }
        FrontMove::TriplePoint => match *window(3)? {
            [X(a), X(b), X(c)] if a == c && b == a + 1 => Ok((3, vec![X(b), X(a), X(b)])),
            [X(a), X(b), X(c)] if a == c && a == b + 1 => Ok((3, vec![X(b), X(a), X(b)])),
            _ => Err(not_applicable(site, "no triple point pattern")),
        },
        FrontMove::CuspThroughStrand { expand: None } => match *window(3)? {
            [L(q), X(p), X(r)] if q == p + 1 && r == p + 1 => Ok((3, vec![L(p)])),
            [L(p), X(q), X(r)] if q == p + 1 && r == p => Ok((3, vec![L(q)])),
            [X(q), X(p), R(r)] if q == p + 1 && r == p + 1 => Ok((3, vec![R(p)])),
            [X(p), X(q), R(r)] if q == p + 1 && r == p => Ok((3, vec![R(q)])),
            _ => Err(not_applicable(site, "no cusp-through-strand pattern")),
        },
        FrontMove::CuspThroughStrand { expand: Some(side) } => {
            let n = front.strands_at(site);
            match (window(1)?[0], side) {
                (L(p), Side::Below) if p <= n => Ok((1, vec![L(p + 1), X(p), X(p + 1)])),
                (L(q), Side::Above) if q >= 2 => Ok((1, vec![L(q - 1), X(q), X(q - 1)])),
                (R(q), Side::Below) if q + 2 <= n => Ok((1, vec![X(q + 1), X(q), R(q + 1)])),
                (R(q), Side::Above) if q >= 2 => Ok((1, vec![X(q - 1), X(q), R(q - 1)])),
                (X(_), _) => Err(not_applicable(site, "event is not a cusp")),
                _ => Err(not_applicable(site, "no strand on that side of the cusp")),
            }
        }
        FrontMove::Tangency(TangencyMove::Remove) => match *window(3)? {
            [L(a), X(p), R(b)] if a == p + 1 && b == p + 1 => Ok((3, vec![])),
            [L(a), X(b), R(c)] if b == a + 1 && c == a => Ok((3, vec![])),
            _ => Err(not_applicable(site, "no loop pattern")),
        },
        FrontMove::Tangency(TangencyMove::Insert { position: p, side }) => {
            if site > events.len() {
                return Err(not_applicable(site, "site past the end of the word"));
            }
            if p == 0 || p > front.strands_at(site) {
                return Err(not_applicable(site, format!("no strand at position {p}")));
            }
            let loop_events = match side {
                Side::Below => vec![L(p + 1), X(p), R(p + 1)],
                Side::Above => vec![L(p), X(p + 1), R(p)],
            };
            Ok((0, loop_events))
        }
    }
}

/// Strands an event consumes on its left and produces on its right.
fn widths(e: FrontEvent) -> (usize, usize) {
    match e {
        L(_) => (0, 2),
        R(_) => (2, 0),
        X(_) => (2, 2),
    }
}

fn shift(e: FrontEvent, by: isize) -> FrontEvent {
    e.with_position((e.position() as isize + by) as usize)
}

/// Exchanges two adjacent events when their strand footprints are disjoint.
fn commute(first: FrontEvent, second: FrontEvent) -> Option<(FrontEvent, FrontEvent)> {
    let (a, b) = (first.position(), second.position());
    let (_, first_out) = widths(first);
    let (second_in, _) = widths(second);
    let delta = |e: FrontEvent| {
        let (i, o) = widths(e);
        o as isize - i as isize
    };
    if b + second_in <= a {
        // Second event strictly above the first one.
        Some((second, shift(first, delta(second))))
    } else if b >= a + first_out {
        Some((shift(second, -delta(first)), first))
    } else {
        None
    }
}

/// Every applicable move with its site, in a canonical order.
pub fn applicable_moves(front: &OrientedFront) -> Vec<(FrontMove, usize)> {
    let len = front.word().len();
    let mut out = Vec::new();
    let mut candidates = vec![
        FrontMove::Commute,
        FrontMove::TriplePoint,
        FrontMove::CuspThroughStrand { expand: None },
        FrontMove::CuspThroughStrand {
            expand: Some(Side::Above),
        },
        FrontMove::CuspThroughStrand {
            expand: Some(Side::Below),
        },
        FrontMove::Tangency(TangencyMove::Remove),
    ];
    let max_strands = (0..=len).map(|k| front.strands_at(k)).max().unwrap_or(0);
    for position in 1..=max_strands {
        for side in [Side::Above, Side::Below] {
            candidates.push(FrontMove::Tangency(TangencyMove::Insert { position, side }));
        }
    }
    for site in 0..=len {
        for &mv in &candidates {
            if rewrite(front, mv, site).is_ok() {
                out.push((mv, site));
            }
        }
    }
    out
}
