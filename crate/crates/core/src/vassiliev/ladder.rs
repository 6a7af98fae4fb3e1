//! Extension of invariants along the framing ladder of a knot.
//!
//! Rung `r` of a ladder is the framed knot with self-linking number `r`.
//! Rungs up to the cutoff carry values of an invariant of Legendrian knots;
//! rungs above it are reached only by the recursion
//! `v(r) = sum_{i=1}^{n+1} (-1)^{i+1} C(n+1, i) v(r - 2i)`.
//! The transverse case uses the same recursion with the same ladders.

use std::collections::BTreeMap;

use super::{AbelianGroup, VassilievError};
use crate::framed::{shift_framing, FramedDiagram};
use crate::fronts::{bennequin, front_to_framed, kink_move, OrientedFront};

/// Spacing of rungs inside one framed homotopy class.
pub const STEP: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantLadder<G> {
    knot: String,
    cutoff: i64,
    values: BTreeMap<i64, G>,
    /// Highest rung [`extend_invariant`] fills. Defaults to `cutoff + 2`.
    top: Option<i64>,
}

impl<G: AbelianGroup> InvariantLadder<G> {
    /// Rungs must share the parity of `cutoff`, the cutoff must be populated
    /// and no rung between the lowest one and the cutoff may be missing.
    pub fn new(
        knot: impl Into<String>,
        cutoff: i64,
        values: BTreeMap<i64, G>,
    ) -> Result<Self, VassilievError> {
        if let Some(&r) = values.keys().find(|&&r| (r - cutoff).rem_euclid(STEP) != 0) {
            return Err(VassilievError::InvalidLadder(format!(
                "rung {r} has the wrong parity for cutoff {cutoff}"
            )));
        }
        if !values.contains_key(&cutoff) {
            return Err(VassilievError::InvalidLadder(format!(
                "cutoff rung {cutoff} has no value"
            )));
        }
        let lowest = *values.keys().next().expect("cutoff is present");
        if let Some(r) = (lowest..=cutoff)
            .step_by(STEP as usize)
            .find(|r| !values.contains_key(r))
        {
            return Err(VassilievError::InvalidLadder(format!(
                "rung {r} below the cutoff is missing"
            )));
        }
        Ok(InvariantLadder {
            knot: knot.into(),
            cutoff,
            values,
            top: None,
        })
    }

    pub fn with_top(mut self, top: i64) -> Self {
        self.top = Some(top);
        self
    }

    pub fn knot(&self) -> &str {
        &self.knot
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn top(&self) -> i64 {
        self.top.unwrap_or(self.cutoff + STEP)
    }

    pub fn explicit_top(&self) -> Option<i64> {
        self.top
    }

    pub fn values(&self) -> &BTreeMap<i64, G> {
        &self.values
    }

    pub fn value(&self, rung: i64) -> Option<&G> {
        self.values.get(&rung)
    }

    /// Right-hand side of the recursion at `rung`, if all `n + 1` rungs below
    /// are populated.
    fn predicted(&self, rung: i64, n: usize) -> Option<G> {
        let mut sum = G::zero();
        for (i, c) in binomial_row(n + 1).into_iter().enumerate().skip(1) {
            let v = self.values.get(&(rung - STEP * i as i64))?;
            let sign = if i % 2 == 1 { 1 } else { -1 };
            sum = sum.add(&v.scale(sign * c));
        }
        Some(sum)
    }
}

/// `C(m, 0), ..., C(m, m)`.
fn binomial_row(m: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for k in 0..m {
        let next = row[k] * (m - k) as i64 / (k + 1) as i64;
        row.push(next);
    }
    row
}

/// Fills every empty rung from `cutoff + 2` up to the ladder's top, lowest
/// first. Populated rungs are kept as they are.
pub fn extend_invariant<G: AbelianGroup>(
    ladder: &InvariantLadder<G>,
    n: usize,
) -> Result<InvariantLadder<G>, VassilievError> {
    let mut out = ladder.clone();
    let mut rung = ladder.cutoff + STEP;
    while rung <= ladder.top() {
        if !out.values.contains_key(&rung) {
            let v = out
                .predicted(rung, n)
                .ok_or(VassilievError::InsufficientRungs {
                    rung,
                    needed: n + 1,
                })?;
            out.values.insert(rung, v);
        }
        rung += STEP;
    }
    Ok(out)
}

/// Checks the order-`n` recursion at every populated rung that has `n + 1`
/// populated rungs below it.
pub fn verify_main_identity<G: AbelianGroup>(
    ladder: &InvariantLadder<G>,
    n: usize,
) -> Result<bool, VassilievError> {
    let mut checked = 0;
    for (&rung, value) in &ladder.values {
        if let Some(p) = ladder.predicted(rung, n) {
            checked += 1;
            if &p != value {
                return Ok(false);
            }
        }
    }
    if checked == 0 {
        let rung = *ladder.values.keys().next_back().expect("cutoff is present");
        return Err(VassilievError::InsufficientRungs {
            rung,
            needed: n + 1,
        });
    }
    Ok(true)
}

/// The invariant of fronts induced by a framed invariant.
pub fn restrict_to_legendrian<G, F>(x: F) -> impl Fn(&OrientedFront) -> G
where
    F: Fn(&FramedDiagram) -> G,
{
    move |front| x(&front_to_framed(front))
}

/// Ladder of `x` over a front and its repeated kink homotopies, down to the
/// lowest rung not below `floor`. The cutoff is the front's
/// Thurston–Bennequin number.
pub fn ladder_from_front<G, F>(
    x: F,
    front: &OrientedFront,
    knot: &str,
    floor: i64,
) -> InvariantLadder<G>
where
    G: AbelianGroup,
    F: Fn(&FramedDiagram) -> G,
{
    let phi = restrict_to_legendrian(x);
    let cutoff = bennequin(front);
    let mut values = BTreeMap::new();
    let mut f = front.clone();
    let mut rung = cutoff;
    loop {
        values.insert(rung, phi(&f));
        rung -= STEP;
        if rung < floor {
            break;
        }
        f = kink_move(&f);
    }
    InvariantLadder::new(knot, cutoff, values).expect("rungs are contiguous by construction")
}

/// Builds each front's ladder down to `floor`, extends it `above` rungs past
/// the cutoff and compares with `x`:
///
/// * below the cutoff the ladder is untouched and agrees with `x` on the
///   reframed knot (extension after restriction is the identity);
/// * above it the extended values equal `x` on the reframed knot and the
///   recursion holds everywhere (restriction after extension is the
///   identity).
pub fn roundtrip_check<G, F>(
    x: F,
    fronts: &[OrientedFront],
    n: usize,
    floor: i64,
    above: usize,
) -> Result<bool, VassilievError>
where
    G: AbelianGroup,
    F: Fn(&FramedDiagram) -> G,
{
    for front in fronts {
        let ladder = ladder_from_front(&x, front, "", floor);
        let cutoff = ladder.cutoff;
        let k = front_to_framed(front);
        let extended = extend_invariant(&ladder.clone().with_top(cutoff + STEP * above as i64), n)?;
        for (&rung, v) in &extended.values {
            let direct = x(&shift_framing(&k, rung - cutoff));
            if &direct != v {
                return Ok(false);
            }
            if rung <= cutoff && ladder.values.get(&rung) != Some(v) {
                return Ok(false);
            }
        }
        if !verify_main_identity(&extended, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framed::self_linking;

    fn ladder(f: impl Fn(i64) -> i64, cutoff: i64, depth: i64) -> InvariantLadder<i64> {
        let values = (0..depth)
            .map(|k| (cutoff - 2 * k, f(cutoff - 2 * k)))
            .collect();
        InvariantLadder::new("k", cutoff, values).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_row(2), vec![1, 2, 1]);
        assert_eq!(binomial_row(5), vec![1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn first_order_recursion() {
        let l = InvariantLadder::new("k", 0, BTreeMap::from([(0, 7i64), (-2, 3)])).unwrap();
        let e = extend_invariant(&l, 1).unwrap();
        assert_eq!(e.value(2), Some(&(2 * 7 - 3)));
    }

    #[test]
    fn linear_ladder_extends_linearly() {
        let e = extend_invariant(&ladder(|r| r, 0, 3).with_top(6), 1).unwrap();
        assert_eq!(e.value(2), Some(&2));
        assert_eq!(e.value(6), Some(&6));
        assert_eq!(verify_main_identity(&e, 1), Ok(true));
    }

    #[test]
    fn squares_fail_first_order() {
        assert_eq!(verify_main_identity(&ladder(|r| r * r, 0, 4), 1), Ok(false));
        assert_eq!(verify_main_identity(&ladder(|r| r * r, 0, 4), 2), Ok(true));
    }

    #[test]
    fn insufficient_rungs() {
        let l = ladder(|_| 1, 0, 2);
        assert_eq!(
            extend_invariant(&l, 2).unwrap_err(),
            VassilievError::InsufficientRungs { rung: 2, needed: 3 }
        );
        assert!(verify_main_identity(&l, 2).is_err());
    }

    #[test]
    fn keeps_populated_rungs() {
        let mut values: BTreeMap<i64, i64> = (0..3).map(|k| (-2 * k, 1)).collect();
        values.insert(2, 40);
        let l = InvariantLadder::new("k", 0, values).unwrap();
        assert_eq!(extend_invariant(&l, 1).unwrap(), l);
    }

    #[test]
    fn validation() {
        assert!(InvariantLadder::new("k", 0, BTreeMap::from([(0, 1i64), (-1, 1)])).is_err());
        assert!(InvariantLadder::new("k", 0, BTreeMap::from([(0, 1i64), (-4, 1)])).is_err());
        assert!(InvariantLadder::<i64>::new("k", 0, BTreeMap::new()).is_err());
    }

    #[test]
    fn self_linking_restricts_to_bennequin() {
        use crate::fronts::{FrontEvent::*, FrontWord, Orientation};
        let t = OrientedFront::new(
            FrontWord::new(vec![
                LeftCusp(1),
                LeftCusp(1),
                Crossing(2),
                Crossing(2),
                Crossing(2),
                RightCusp(1),
                RightCusp(1),
            ]),
            Orientation::Forward,
        )
        .unwrap();
        let phi = restrict_to_legendrian(self_linking);
        assert_eq!(phi(&t), bennequin(&t));
        assert_eq!(phi(&kink_move(&t)), phi(&t) - 2);
        assert_eq!(
            roundtrip_check(self_linking, std::slice::from_ref(&t), 1, -8, 3),
            Ok(true)
        );
        assert_eq!(
            roundtrip_check(|k: &FramedDiagram| self_linking(k).pow(2), &[t], 1, -8, 3),
            Ok(false)
        );
    }
}
