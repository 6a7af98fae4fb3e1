//! JSON file formats. Every document may carry `"format": 1`; documents
//! written by this crate always do.

use std::collections::BTreeMap;

use knotframe::framed::{
    apply_move, CrossingChange, DoublePointSnapshot, FramedDiagram, FramedError, FramedMove, Kink,
    KnotDiagram, Level, MoveSequence, PathEvent, Visit,
};
use knotframe::fronts::{FrontError, FrontEvent, FrontWord, Orientation, OrientedFront};
use knotframe::topology::{
    Alphabet, BundleGroupElement, FgAbelianGroup, ManifoldDescriptor, ManifoldFlags, TopologyError,
    TorusRecord, Word, WordPair,
};
use knotframe::vassiliev::{InvariantLadder, SingularFramedDiagram, VassilievError};
use knotframe::Sign;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT: u32 = 1;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0}, expected {FORMAT}")]
    Format(u32),
    #[error("unknown front event {0:?}")]
    FrontEvent(String),
    #[error("unknown level {0:?}, expected \"o\" or \"u\"")]
    Level(String),
    #[error("sign must be 1 or -1, got {0}")]
    Sign(i64),
    #[error("ladder step must be 2, got {0}")]
    Step(i64),
    #[error("ladder rung {0:?} is not an integer")]
    RungKey(String),
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error(transparent)]
    Framed(#[from] FramedError),
    #[error(transparent)]
    Vassiliev(#[from] VassilievError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

fn check_format(format: Option<u32>) -> Result<(), SchemaError> {
    match format {
        None | Some(FORMAT) => Ok(()),
        Some(v) => Err(SchemaError::Format(v)),
    }
}

fn sign(v: i64) -> Result<Sign, SchemaError> {
    Sign::from_i64(v).ok_or(SchemaError::Sign(v))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationJson {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrontJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub events: Vec<(String, usize)>,
    #[serde(default)]
    pub orientation: OrientationJson,
}

impl FrontJson {
    pub fn from_front(f: &OrientedFront) -> FrontJson {
        let events = f
            .word()
            .events()
            .iter()
            .map(|e| {
                let tag = match e {
                    FrontEvent::LeftCusp(_) => "L",
                    FrontEvent::RightCusp(_) => "R",
                    FrontEvent::Crossing(_) => "X",
                };
                (tag.to_string(), e.position())
            })
            .collect();
        let orientation = match f.orientation() {
            Orientation::Forward => OrientationJson::Forward,
            Orientation::Reverse => OrientationJson::Reverse,
        };
        FrontJson {
            format: Some(FORMAT),
            events,
            orientation,
        }
    }

    pub fn to_front(&self) -> Result<OrientedFront, SchemaError> {
        check_format(self.format)?;
        let events = self
            .events
            .iter()
            .map(|(tag, p)| match tag.as_str() {
                "L" => Ok(FrontEvent::LeftCusp(*p)),
                "R" => Ok(FrontEvent::RightCusp(*p)),
                "X" => Ok(FrontEvent::Crossing(*p)),
                _ => Err(SchemaError::FrontEvent(tag.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let orientation = match self.orientation {
            OrientationJson::Forward => Orientation::Forward,
            OrientationJson::Reverse => Orientation::Reverse,
        };
        Ok(OrientedFront::new(FrontWord::new(events), orientation)?)
    }
}

/// One Gauss code visit: `[crossing, "o" | "u", sign]`.
pub type VisitJson = (u32, String, i64);

fn visits_from_json(gauss: &[VisitJson]) -> Result<KnotDiagram, SchemaError> {
    let visits = gauss
        .iter()
        .map(|(c, level, s)| {
            let level = match level.as_str() {
                "o" => Level::Over,
                "u" => Level::Under,
                _ => return Err(SchemaError::Level(level.clone())),
            };
            Ok(Visit::new(*c, level, sign(*s)?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    KnotDiagram::new(visits).map_err(|e| SchemaError::Framed(e.into()))
}

fn visits_to_json(d: &KnotDiagram) -> Vec<VisitJson> {
    d.visits()
        .iter()
        .map(|v| {
            let level = if v.level == Level::Over { "o" } else { "u" };
            (v.crossing, level.to_string(), v.sign.value())
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramedJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub gauss: Vec<VisitJson>,
    #[serde(default)]
    pub offset: i64,
}

impl FramedJson {
    pub fn from_framed(k: &FramedDiagram) -> FramedJson {
        FramedJson {
            format: Some(FORMAT),
            gauss: visits_to_json(k.diagram()),
            offset: k.offset(),
        }
    }

    pub fn to_framed(&self) -> Result<FramedDiagram, SchemaError> {
        check_format(self.format)?;
        Ok(FramedDiagram::new(
            visits_from_json(&self.gauss)?,
            self.offset,
        ))
    }
}

/// A singular diagram. Marked crossings may be given with either sign; they
/// are stored positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub gauss: Vec<VisitJson>,
    #[serde(default)]
    pub offset: i64,
    pub marked: Vec<u32>,
}

impl SingularJson {
    pub fn from_singular(s: &SingularFramedDiagram) -> SingularJson {
        SingularJson {
            format: Some(FORMAT),
            gauss: visits_to_json(s.framed().diagram()),
            offset: s.offset(),
            marked: s.marked().to_vec(),
        }
    }

    pub fn to_singular(&self) -> Result<SingularFramedDiagram, SchemaError> {
        check_format(self.format)?;
        let k = FramedDiagram::new(visits_from_json(&self.gauss)?, self.offset);
        Ok(SingularFramedDiagram::from_marked(&k, &self.marked)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KinkJson {
    pub sign: i64,
    #[serde(default = "over_first_default")]
    pub over_first: bool,
}

fn over_first_default() -> bool {
    true
}

impl KinkJson {
    fn from_kink(k: Kink) -> KinkJson {
        KinkJson {
            sign: k.sign.value(),
            over_first: k.over_first,
        }
    }

    fn to_kink(self) -> Result<Kink, SchemaError> {
        Ok(Kink {
            sign: sign(self.sign)?,
            over_first: self.over_first,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MoveJson {
    R2Insert {
        over_at: usize,
        under_at: usize,
        sign: i64,
        #[serde(default)]
        antiparallel: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ids: Option<[u32; 2]>,
    },
    R2Remove {
        first: u32,
        second: u32,
    },
    R3 {
        crossings: [u32; 3],
    },
    KinkPairInsert {
        at: usize,
        kinks: [KinkJson; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ids: Option<[u32; 2]>,
    },
    KinkPairRemove {
        at: usize,
    },
    OffsetTrade {
        at: usize,
        kink: KinkJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<u32>,
    },
    OffsetAbsorb {
        at: usize,
    },
}

impl MoveJson {
    pub fn from_move(mv: FramedMove) -> MoveJson {
        match mv {
            FramedMove::Reidemeister2Insert {
                over_at,
                under_at,
                sign,
                antiparallel,
                ids,
            } => MoveJson::R2Insert {
                over_at,
                under_at,
                sign: sign.value(),
                antiparallel,
                ids,
            },
            FramedMove::Reidemeister2Remove { first, second } => {
                MoveJson::R2Remove { first, second }
            }
            FramedMove::Reidemeister3 { crossings } => MoveJson::R3 { crossings },
            FramedMove::KinkPairInsert { at, kinks, ids } => MoveJson::KinkPairInsert {
                at,
                kinks: kinks.map(KinkJson::from_kink),
                ids,
            },
            FramedMove::KinkPairRemove { at } => MoveJson::KinkPairRemove { at },
            FramedMove::OffsetTrade { at, kink, id } => MoveJson::OffsetTrade {
                at,
                kink: KinkJson::from_kink(kink),
                id,
            },
            FramedMove::OffsetAbsorb { at } => MoveJson::OffsetAbsorb { at },
        }
    }

    pub fn to_move(self) -> Result<FramedMove, SchemaError> {
        Ok(match self {
            MoveJson::R2Insert {
                over_at,
                under_at,
                sign: s,
                antiparallel,
                ids,
            } => FramedMove::Reidemeister2Insert {
                over_at,
                under_at,
                sign: sign(s)?,
                antiparallel,
                ids,
            },
            MoveJson::R2Remove { first, second } => {
                FramedMove::Reidemeister2Remove { first, second }
            }
            MoveJson::R3 { crossings } => FramedMove::Reidemeister3 { crossings },
            MoveJson::KinkPairInsert { at, kinks, ids } => FramedMove::KinkPairInsert {
                at,
                kinks: [kinks[0].to_kink()?, kinks[1].to_kink()?],
                ids,
            },
            MoveJson::KinkPairRemove { at } => FramedMove::KinkPairRemove { at },
            MoveJson::OffsetTrade { at, kink, id } => FramedMove::OffsetTrade {
                at,
                kink: kink.to_kink()?,
                id,
            },
            MoveJson::OffsetAbsorb { at } => FramedMove::OffsetAbsorb { at },
        })
    }
}

/// A crossing change. Without `snapshot` the singular diagram is taken from
/// the state the change is applied to, with the changed crossing marked.
/// `loops` are the two smoothing loops as words (`"1"` is trivial).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChangeJson {
    pub crossing: u32,
    pub sign: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshot: Option<SingularJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loops: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum EventJson {
    Move(MoveJson),
    CrossingChange(ChangeJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub start: FramedJson,
    pub events: Vec<EventJson>,
}

impl PathJson {
    pub fn from_path(path: &MoveSequence) -> PathJson {
        let events = path
            .events()
            .iter()
            .map(|e| match e {
                PathEvent::Move(mv) => EventJson::Move(MoveJson::from_move(*mv)),
                PathEvent::CrossingChange(c) => EventJson::CrossingChange(ChangeJson {
                    crossing: c.crossing,
                    sign: c.sign.value(),
                    snapshot: Some(SingularJson::from_singular(&c.snapshot.diagram)),
                    loops: c
                        .snapshot
                        .loops
                        .as_ref()
                        .map(|p| (p.0.to_string(), p.1.to_string())),
                }),
            })
            .collect();
        PathJson {
            format: Some(FORMAT),
            start: FramedJson::from_framed(path.start()),
            events,
        }
    }

    pub fn to_path(&self) -> Result<MoveSequence, SchemaError> {
        check_format(self.format)?;
        let start = self.start.to_framed()?;
        let mut current = start.clone();
        let mut events = Vec::with_capacity(self.events.len());
        for (index, e) in self.events.iter().enumerate() {
            let event = match e {
                EventJson::Move(mv) => {
                    let mv = mv.to_move()?;
                    current = apply_move(&current, mv).map_err(|err| FramedError::InvalidPath {
                        index,
                        reason: err.to_string(),
                    })?;
                    PathEvent::Move(mv)
                }
                EventJson::CrossingChange(c) => {
                    let diagram = match &c.snapshot {
                        Some(s) => s.to_singular()?,
                        None => SingularFramedDiagram::from_marked(&current, &[c.crossing])?,
                    };
                    let loops = match &c.loops {
                        Some((a, b)) => Some(WordPair(a.parse::<Word>()?, b.parse::<Word>()?)),
                        None => None,
                    };
                    if let Some(next) = current.diagram().change_crossing(c.crossing) {
                        current = FramedDiagram::new(next, current.offset());
                    }
                    PathEvent::CrossingChange(CrossingChange {
                        crossing: c.crossing,
                        sign: sign(c.sign)?,
                        snapshot: DoublePointSnapshot { diagram, loops },
                    })
                }
            };
            events.push(event);
        }
        Ok(MoveSequence::new(start, events)?)
    }
}

fn ladder_step() -> i64 {
    2
}

/// Ladder values keyed by rung, as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LadderJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub knot: String,
    pub cutoff: i64,
    #[serde(default = "ladder_step")]
    pub step: i64,
    pub values: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<i64>,
}

impl LadderJson {
    pub fn from_ladder(l: &InvariantLadder<i64>) -> LadderJson {
        LadderJson {
            format: Some(FORMAT),
            knot: l.knot().to_string(),
            cutoff: l.cutoff(),
            step: ladder_step(),
            values: l
                .values()
                .iter()
                .map(|(r, v)| (r.to_string(), *v))
                .collect(),
            top: l.explicit_top(),
        }
    }

    pub fn to_ladder(&self) -> Result<InvariantLadder<i64>, SchemaError> {
        check_format(self.format)?;
        if self.step != 2 {
            return Err(SchemaError::Step(self.step));
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| {
                k.parse::<i64>()
                    .map(|r| (r, *v))
                    .map_err(|_| SchemaError::RungKey(k.clone()))
            })
            .collect::<Result<BTreeMap<_, _>, _>>()?;
        let ladder = InvariantLadder::new(self.knot.clone(), self.cutoff, values)?;
        Ok(match self.top {
            Some(t) => ladder.with_top(t),
            None => ladder,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub factors: Vec<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi2_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub no_injective_torus: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallelizable_contact: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusJson {
    pub class: Vec<i64>,
    pub realizable: bool,
    pub pairing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub h2: GroupJson,
    pub euler: Vec<i64>,
    #[serde(default)]
    pub flags: FlagsJson,
    #[serde(default)]
    pub tori: Vec<TorusJson>,
}

impl DescriptorJson {
    pub fn from_descriptor(d: &ManifoldDescriptor) -> DescriptorJson {
        let f = d.flags();
        DescriptorJson {
            format: Some(FORMAT),
            h2: GroupJson {
                factors: d.h2().factors().to_vec(),
            },
            euler: d.euler().to_vec(),
            flags: FlagsJson {
                tight: f.tight,
                pi2_zero: f.pi2_zero,
                no_injective_torus: f.no_injective_torus,
                parallelizable_contact: f.parallelizable_contact,
            },
            tori: d
                .tori()
                .iter()
                .map(|t| TorusJson {
                    class: t.class.clone(),
                    realizable: t.realizable,
                    pairing: t.pairing,
                })
                .collect(),
        }
    }

    pub fn group(&self) -> FgAbelianGroup {
        FgAbelianGroup::new(self.h2.factors.clone())
    }

    pub fn to_descriptor(&self) -> Result<ManifoldDescriptor, SchemaError> {
        check_format(self.format)?;
        let flags = ManifoldFlags {
            tight: self.flags.tight,
            pi2_zero: self.flags.pi2_zero,
            no_injective_torus: self.flags.no_injective_torus,
            parallelizable_contact: self.flags.parallelizable_contact,
        };
        let tori = self
            .tori
            .iter()
            .map(|t| TorusRecord {
                class: t.class.clone(),
                realizable: t.realizable,
                pairing: t.pairing,
            })
            .collect();
        Ok(ManifoldDescriptor::new(
            self.group(),
            self.euler.clone(),
            flags,
            tori,
        )?)
    }
}

/// A bundle group element `f^k w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub k: i64,
    pub w: String,
}

impl ElementJson {
    pub fn from_element(e: &BundleGroupElement) -> ElementJson {
        ElementJson {
            k: e.fiber_exponent(),
            w: e.base().to_string(),
        }
    }

    pub fn to_element(&self, alphabet: &Alphabet) -> Result<BundleGroupElement, SchemaError> {
        Ok(BundleGroupElement::new(self.k, self.w.parse()?, alphabet)?)
    }
}

/// Input of `topo bundle-mul`: the product of `elements` in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub alphabet: String,
    pub elements: Vec<ElementJson>,
}

/// Input of `topo ttt-witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutingPairJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub alphabet: String,
    pub alpha: ElementJson,
    pub beta: ElementJson,
}

/// Input of `topo alpha-nu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub loops: (String, String),
}

impl LoopsJson {
    pub fn to_pair(&self) -> Result<WordPair, SchemaError> {
        check_format(self.format)?;
        Ok(WordPair(self.loops.0.parse()?, self.loops.1.parse()?))
    }
}

pub fn parse_alphabet(s: &str, format: Option<u32>) -> Result<Alphabet, SchemaError> {
    check_format(format)?;
    Ok(s.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn front_round_trip() {
        let text = r#"{"events":[["L",1],["R",1]],"orientation":"reverse"}"#;
        let f: FrontJson = serde_json::from_str(text).unwrap();
        let front = f.to_front().unwrap();
        let back = FrontJson::from_front(&front);
        assert_eq!(back.events, f.events);
        assert_eq!(back.orientation, OrientationJson::Reverse);
        assert_eq!(back.format, Some(FORMAT));
    }

    #[test]
    fn rejects_other_versions_and_bad_tokens() {
        let f: FrontJson = serde_json::from_str(r#"{"format":2,"events":[]}"#).unwrap();
        assert!(matches!(f.to_front(), Err(SchemaError::Format(2))));
        let g: FramedJson = serde_json::from_str(r#"{"gauss":[[1,"x",1],[1,"u",1]]}"#).unwrap();
        assert!(matches!(g.to_framed(), Err(SchemaError::Level(_))));
        let g: FramedJson = serde_json::from_str(r#"{"gauss":[[1,"o",2],[1,"u",2]]}"#).unwrap();
        assert!(matches!(g.to_framed(), Err(SchemaError::Sign(2))));
    }

    #[test]
    fn move_tags() {
        let m: MoveJson =
            serde_json::from_str(r#"{"type":"offset_trade","at":0,"kink":{"sign":-1}}"#).unwrap();
        let mv = m.to_move().unwrap();
        assert_eq!(
            mv,
            FramedMove::OffsetTrade {
                at: 0,
                kink: Kink {
                    sign: Sign::Minus,
                    over_first: true
                },
                id: None
            }
        );
        assert_eq!(MoveJson::from_move(mv), m);
    }

    #[test]
    fn ladder_keys() {
        let l: LadderJson =
            serde_json::from_str(r#"{"knot":"t","cutoff":1,"step":2,"values":{"1":1,"-1":-1}}"#)
                .unwrap();
        let ladder = l.to_ladder().unwrap();
        assert_eq!(ladder.value(-1), Some(&-1));
        let bad: LadderJson =
            serde_json::from_str(r#"{"knot":"t","cutoff":1,"step":3,"values":{"1":1}}"#).unwrap();
        assert!(matches!(bad.to_ladder(), Err(SchemaError::Step(3))));
    }
}
