//! Framed Reidemeister calculus on cyclic Gauss codes.
//!
//! Insertion indices refer to gaps of the linear code (`0..=len`); since the
//! code is cyclic, gap `0` and gap `len` are the same place. Removal indices
//! refer to visit positions and wrap around the end.

use rand::Rng;

use super::{CrossingId, FramedDiagram, FramedError, KnotDiagram, Level, Visit};
use crate::Sign;

/// A one-crossing curl. `over_first` says which visit comes first along the
/// knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Kink {
    pub sign: Sign,
    pub over_first: bool,
}

impl Kink {
    fn visits(self, id: CrossingId) -> [Visit; 2] {
        let (a, b) = if self.over_first {
            (Level::Over, Level::Under)
        } else {
            (Level::Under, Level::Over)
        };
        [Visit::new(id, a, self.sign), Visit::new(id, b, self.sign)]
    }

    fn from_visits(first: Visit) -> Kink {
        Kink {
            sign: first.sign,
            over_first: first.level == Level::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
///
/// Inserting moves take optional ids for the new crossings; without them the
/// smallest unused ids above the current maximum are taken. Inverses returned
/// by [`apply_move_with_inverse`] always name the ids, so undoing a removal
/// restores the diagram exactly.
pub enum FramedMove {
    /// Push one arc over another, creating two crossings of opposite signs.
    /// The over pair goes into gap `over_at`; `under_at` is a gap of the code
    /// after the over pair is in place and may not split it.
    Reidemeister2Insert {
        over_at: usize,
        under_at: usize,
        sign: Sign,
        antiparallel: bool,
        ids: Option<[CrossingId; 2]>,
    },
    Reidemeister2Remove {
        first: CrossingId,
        second: CrossingId,
    },
    /// Reverse the order of the two visits on each side of a triangle.
    /// `crossings` lists top/middle, top/bottom and middle/bottom crossings.
    Reidemeister3 {
        crossings: [CrossingId; 3],
    },
    /// Two adjacent kinks of opposite sign.
    KinkPairInsert {
        at: usize,
        kinks: [Kink; 2],
        ids: Option<[CrossingId; 2]>,
    },
    KinkPairRemove {
        at: usize,
    },
    /// Add one kink of sign `s` and lower the offset by `s`.
    OffsetTrade {
        at: usize,
        kink: Kink,
        id: Option<CrossingId>,
    },
    /// Remove the kink at `at` and raise the offset by its sign.
    OffsetAbsorb {
        at: usize,
    },
}

fn new_ids<const N: usize>(
    d: &KnotDiagram,
    requested: Option<[CrossingId; N]>,
) -> Result<[CrossingId; N], FramedError> {
    let Some(ids) = requested else {
        let fresh = d.fresh_id();
        return Ok(std::array::from_fn(|i| fresh + i as CrossingId));
    };
    for (i, &id) in ids.iter().enumerate() {
        if d.sign_of(id).is_some() || ids[..i].contains(&id) {
            return Err(not_applicable(format!(
                "crossing id {id} is already in use"
            )));
        }
    }
    Ok(ids)
}

fn not_applicable(reason: impl Into<String>) -> FramedError {
    FramedError::MoveNotApplicable(reason.into())
}

pub fn apply_move(k: &FramedDiagram, mv: FramedMove) -> Result<FramedDiagram, FramedError> {
    apply_move_with_inverse(k, mv).map(|(out, _)| out)
}

/// Applies a move and returns a move that undoes it.
pub fn apply_move_with_inverse(
    k: &FramedDiagram,
    mv: FramedMove,
) -> Result<(FramedDiagram, FramedMove), FramedError> {
    let visits = k.diagram().visits();
    let n = visits.len();
    match mv {
        FramedMove::Reidemeister2Insert {
            over_at,
            under_at,
            sign,
            antiparallel,
            ids,
        } => {
            if over_at > n || under_at > n + 2 || under_at == over_at + 1 {
                return Err(not_applicable("R2 insertion gap out of range"));
            }
            let [a, b] = new_ids(k.diagram(), ids)?;
            let mut out = visits.to_vec();
            out.splice(
                over_at..over_at,
                [
                    Visit::new(a, Level::Over, sign),
                    Visit::new(b, Level::Over, -sign),
                ],
            );
            let under = if antiparallel {
                [
                    Visit::new(b, Level::Under, -sign),
                    Visit::new(a, Level::Under, sign),
                ]
            } else {
                [
                    Visit::new(a, Level::Under, sign),
                    Visit::new(b, Level::Under, -sign),
                ]
            };
            out.splice(under_at..under_at, under);
            let result = FramedDiagram::new(KnotDiagram::from_visits_unchecked(out), k.offset());
            Ok((
                result,
                FramedMove::Reidemeister2Remove {
                    first: a,
                    second: b,
                },
            ))
        }
        FramedMove::Reidemeister2Remove { first, second } => {
            let info = r2_pattern(visits, first, second)
                .ok_or_else(|| not_applicable(format!("no R2 bigon on {first}, {second}")))?;
            let remaining: Vec<Visit> = visits
                .iter()
                .copied()
                .filter(|v| v.crossing != first && v.crossing != second)
                .collect();
            let over_at = (0..info.over_start)
                .filter(|&j| visits[j].crossing != first && visits[j].crossing != second)
                .count();
            let over_at = stored_position(&remaining, over_at);
            let inverse = (0..=remaining.len() + 2)
                .map(|under_at| FramedMove::Reidemeister2Insert {
                    over_at,
                    under_at,
                    sign: info.sign,
                    antiparallel: info.antiparallel,
                    ids: Some([info.first, info.second]),
                })
                .find(|cand| {
                    let probe = FramedDiagram::new(
                        KnotDiagram::from_visits_unchecked(remaining.clone()),
                        k.offset(),
                    );
                    apply_move(&probe, *cand).is_ok_and(|d| &d == k)
                })
                .expect("an R2 removal can always be undone");
            let result =
                FramedDiagram::new(KnotDiagram::from_visits_unchecked(remaining), k.offset());
            Ok((result, inverse))
        }
        FramedMove::Reidemeister3 { crossings } => {
            let pairs = r3_pairs(visits, crossings)
                .ok_or_else(|| not_applicable(format!("no R3 triangle on {crossings:?}")))?;
            let mut out = visits.to_vec();
            for (i, j) in pairs {
                out.swap(i, j);
            }
            let result = FramedDiagram::new(KnotDiagram::from_visits_unchecked(out), k.offset());
            Ok((result, mv))
        }
        FramedMove::KinkPairInsert { at, kinks, ids } => {
            if at > n {
                return Err(not_applicable("kink gap out of range"));
            }
            if kinks[0].sign == kinks[1].sign {
                return Err(not_applicable("a kink pair needs opposite signs"));
            }
            let [a, b] = new_ids(k.diagram(), ids)?;
            let mut out = visits.to_vec();
            let block: Vec<Visit> = kinks[0]
                .visits(a)
                .into_iter()
                .chain(kinks[1].visits(b))
                .collect();
            out.splice(at..at, block);
            let inverse = FramedMove::KinkPairRemove {
                at: stored_position(&out, at),
            };
            let result = FramedDiagram::new(KnotDiagram::from_visits_unchecked(out), k.offset());
            Ok((result, inverse))
        }
        FramedMove::KinkPairRemove { at } => {
            if n < 4 || at >= n {
                return Err(not_applicable("no kink pair there"));
            }
            let idx: Vec<usize> = (0..4).map(|i| (at + i) % n).collect();
            let v: Vec<Visit> = idx.iter().map(|&i| visits[i]).collect();
            if v[0].crossing != v[1].crossing
                || v[2].crossing != v[3].crossing
                || v[0].crossing == v[2].crossing
                || v[0].sign == v[2].sign
            {
                return Err(not_applicable("no pair of opposite kinks there"));
            }
            let out = remove_positions(visits, &idx);
            let inverse = FramedMove::KinkPairInsert {
                at: stored_position(&out, gap_index(n, at, 4)),
                kinks: [Kink::from_visits(v[0]), Kink::from_visits(v[2])],
                ids: Some([v[0].crossing, v[2].crossing]),
            };
            let result = FramedDiagram::new(KnotDiagram::from_visits_unchecked(out), k.offset());
            Ok((result, inverse))
        }
        FramedMove::OffsetTrade { at, kink, id } => {
            if at > n {
                return Err(not_applicable("kink gap out of range"));
            }
            let [c] = new_ids(k.diagram(), id.map(|c| [c]))?;
            let mut out = visits.to_vec();
            out.splice(at..at, kink.visits(c));
            let inverse = FramedMove::OffsetAbsorb {
                at: stored_position(&out, at),
            };
            let result = FramedDiagram::new(
                KnotDiagram::from_visits_unchecked(out),
                k.offset() - kink.sign.value(),
            );
            Ok((result, inverse))
        }
        FramedMove::OffsetAbsorb { at } => {
            if n < 2 || at >= n {
                return Err(not_applicable("no kink there"));
            }
            let idx = [at, (at + 1) % n];
            let (v0, v1) = (visits[idx[0]], visits[idx[1]]);
            if v0.crossing != v1.crossing {
                return Err(not_applicable("no kink there"));
            }
            let out = remove_positions(visits, &idx);
            let inverse = FramedMove::OffsetTrade {
                at: stored_position(&out, gap_index(n, at, 2)),
                kink: Kink::from_visits(v0),
                id: Some(v0.crossing),
            };
            let result = FramedDiagram::new(
                KnotDiagram::from_visits_unchecked(out),
                k.offset() + v0.sign.value(),
            );
            Ok((result, inverse))
        }
    }
}

/// Position `x` of a freshly built code after it is rotated into stored
/// form. Works for gaps as well, with the last gap wrapping to `0`.
fn stored_position(raw: &[Visit], x: usize) -> usize {
    if raw.is_empty() {
        return 0;
    }
    (x + raw.len() - KnotDiagram::canonical_start(raw)) % raw.len()
}

/// Gap of the shortened code where a block of `width` visits starting at
/// position `start` used to be.
fn gap_index(n: usize, start: usize, width: usize) -> usize {
    if start + width > n {
        n - width
    } else {
        start
    }
}

fn remove_positions(visits: &[Visit], idx: &[usize]) -> Vec<Visit> {
    visits
        .iter()
        .enumerate()
        .filter(|(i, _)| !idx.contains(i))
        .map(|(_, v)| *v)
        .collect()
}

struct R2Info {
    /// Crossing met first along the over arc.
    first: CrossingId,
    second: CrossingId,
    sign: Sign,
    over_start: usize,
    antiparallel: bool,
}

fn position(visits: &[Visit], crossing: CrossingId, level: Level) -> Option<usize> {
    visits
        .iter()
        .position(|v| v.crossing == crossing && v.level == level)
}

fn r2_pattern(visits: &[Visit], a: CrossingId, b: CrossingId) -> Option<R2Info> {
    let n = visits.len();
    if a == b || n < 4 {
        return None;
    }
    let (ao, bo) = (
        position(visits, a, Level::Over)?,
        position(visits, b, Level::Over)?,
    );
    let (au, bu) = (
        position(visits, a, Level::Under)?,
        position(visits, b, Level::Under)?,
    );
    if visits[ao].sign == visits[bo].sign {
        return None;
    }
    let next = |i: usize| (i + 1) % n;
    let (first, second, over_start) = if next(ao) == bo {
        (a, b, ao)
    } else if next(bo) == ao {
        (b, a, bo)
    } else {
        return None;
    };
    let (fu, su) = if first == a { (au, bu) } else { (bu, au) };
    let antiparallel = if next(fu) == su {
        false
    } else if next(su) == fu {
        true
    } else {
        return None;
    };
    Some(R2Info {
        first,
        second,
        sign: visits[over_start].sign,
        over_start,
        antiparallel,
    })
}

fn adjacent_pair(
    visits: &[Visit],
    x: (CrossingId, Level),
    y: (CrossingId, Level),
) -> Option<(usize, usize)> {
    let n = visits.len();
    let i = position(visits, x.0, x.1)?;
    let j = position(visits, y.0, y.1)?;
    ((i + 1) % n == j || (j + 1) % n == i).then_some((i, j))
}

/// Positions of the three sides of an R3 triangle. With crossings
/// `[p, q, r]` where the top strand crosses the middle one at `p` and the
/// bottom one at `q`, and the middle crosses the bottom at `r`, the sides are
/// `{p over, q over}`, `{p under, r over}` and `{q under, r under}`, each a
/// pair of consecutive visits.
fn r3_pairs(visits: &[Visit], crossings: [CrossingId; 3]) -> Option<[(usize, usize); 3]> {
    let [p, q, r] = crossings;
    if p == q || q == r || p == r {
        return None;
    }
    Some([
        adjacent_pair(visits, (p, Level::Over), (q, Level::Over))?,
        adjacent_pair(visits, (p, Level::Under), (r, Level::Over))?,
        adjacent_pair(visits, (q, Level::Under), (r, Level::Under))?,
    ])
}

fn r3_candidates(visits: &[Visit]) -> Vec<[CrossingId; 3]> {
    let n = visits.len();
    let mut out = Vec::new();
    // Each top side fixes p and q; r is read off the neighbours of p under.
    for i in 0..n {
        let (v, w) = (visits[i], visits[(i + 1) % n]);
        if v.level != Level::Over || w.level != Level::Over || v.crossing == w.crossing {
            continue;
        }
        for (p, q) in [(v.crossing, w.crossing), (w.crossing, v.crossing)] {
            let Some(pu) = position(visits, p, Level::Under) else {
                continue;
            };
            for nb in [(pu + 1) % n, (pu + n - 1) % n] {
                let r = visits[nb];
                if r.level == Level::Over && r.crossing != p && r.crossing != q {
                    let triple = [p, q, r.crossing];
                    if r3_pairs(visits, triple).is_some() && !out.contains(&triple) {
                        out.push(triple);
                    }
                }
            }
        }
    }
    out
}

fn r2_candidates(visits: &[Visit]) -> Vec<(CrossingId, CrossingId)> {
    let n = visits.len();
    let mut out = Vec::new();
    for i in 0..n {
        let (v, w) = (visits[i], visits[(i + 1) % n]);
        if v.level == Level::Over
            && w.level == Level::Over
            && v.crossing != w.crossing
            && r2_pattern(visits, v.crossing, w.crossing).is_some()
        {
            out.push((v.crossing, w.crossing));
        }
    }
    out
}

fn kink_candidates(visits: &[Visit]) -> Vec<usize> {
    let n = visits.len();
    (0..n)
        .filter(|&i| n >= 2 && visits[i].crossing == visits[(i + 1) % n].crossing)
        .collect()
}

fn random_kink<R: Rng + ?Sized>(rng: &mut R) -> Kink {
    Kink {
        sign: if rng.random_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        },
        over_first: rng.random_bool(0.5),
    }
}

/// Draws an applicable framed move: first a move kind uniformly among the
/// kinds that apply, then its parameters uniformly.
pub fn random_move<R: Rng + ?Sized>(k: &FramedDiagram, rng: &mut R) -> FramedMove {
    let visits = k.diagram().visits();
    let n = visits.len();
    let r2 = r2_candidates(visits);
    let r3 = r3_candidates(visits);
    let kinks = kink_candidates(visits);
    let kink_pairs: Vec<usize> = (0..n)
        .filter(|&at| apply_move(k, FramedMove::KinkPairRemove { at }).is_ok())
        .collect();
    let mut kinds = vec![0u8, 1, 2];
    if !r2.is_empty() {
        kinds.push(3);
    }
    if !r3.is_empty() {
        kinds.push(4);
    }
    if !kinks.is_empty() {
        kinds.push(5);
    }
    if !kink_pairs.is_empty() {
        kinds.push(6);
    }
    match kinds[rng.random_range(0..kinds.len())] {
        0 => {
            let over_at = rng.random_range(0..=n);
            let mut under_at = rng.random_range(0..=n + 1);
            if under_at > over_at {
                under_at += 1;
            }
            FramedMove::Reidemeister2Insert {
                over_at,
                under_at,
                sign: if rng.random_bool(0.5) {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
                antiparallel: rng.random_bool(0.5),
                ids: None,
            }
        }
        1 => {
            let first = random_kink(rng);
            let second = Kink {
                sign: -first.sign,
                over_first: rng.random_bool(0.5),
            };
            FramedMove::KinkPairInsert {
                at: rng.random_range(0..=n),
                kinks: [first, second],
                ids: None,
            }
        }
        2 => FramedMove::OffsetTrade {
            at: rng.random_range(0..=n),
            kink: random_kink(rng),
            id: None,
        },
        3 => {
            let (first, second) = r2[rng.random_range(0..r2.len())];
            FramedMove::Reidemeister2Remove { first, second }
        }
        4 => FramedMove::Reidemeister3 {
            crossings: r3[rng.random_range(0..r3.len())],
        },
        5 => FramedMove::OffsetAbsorb {
            at: kinks[rng.random_range(0..kinks.len())],
        },
        _ => FramedMove::KinkPairRemove {
            at: kink_pairs[rng.random_range(0..kink_pairs.len())],
        },
    }
}
