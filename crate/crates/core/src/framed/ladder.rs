use super::{framing_obstruction, shift_framing, FramedDiagram, FramedError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FramingCount {
    /// `m` framings of the base knot, `m` even and positive.
    Finite(u64),
    Infinite,
}

/// The framings `K^i` of a base knot. With `m` framings, rungs `i` and
/// `i + m` are the same framed knot up to isotopy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramingLadder {
    base: FramedDiagram,
    count: FramingCount,
}

impl FramingLadder {
    pub fn new(base: FramedDiagram, count: FramingCount) -> Result<FramingLadder, FramedError> {
        if let FramingCount::Finite(m) = count {
            if m == 0 || m % 2 == 1 {
                return Err(FramedError::OddFramingCount(m));
            }
        }
        Ok(FramingLadder { base, count })
    }

    pub fn base(&self) -> &FramedDiagram {
        &self.base
    }

    pub fn count(&self) -> FramingCount {
        self.count
    }

    /// The rung `K^i`.
    pub fn rung(&self, i: i64) -> FramedDiagram {
        shift_framing(&self.base, i)
    }

    /// Rung index of a framing of the base, if it sits on the ladder.
    pub fn rung_index(&self, k: &FramedDiagram) -> Option<i64> {
        framing_obstruction(k, &self.base).ok()
    }

    /// Class of rung `i` among the distinct framed isotopy classes.
    pub fn class_of(&self, i: i64) -> RungClass {
        match self.count {
            FramingCount::Finite(m) => RungClass::Residue(i.rem_euclid(m as i64) as u64),
            FramingCount::Infinite => RungClass::Index(i),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RungClass {
    Residue(u64),
    Index(i64),
}

/// Shape of the set of rungs up to framed isotopy: `Z/m` with `m` framings,
/// otherwise all rungs differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RungClasses {
    Cyclic(u64),
    Free,
}

pub fn ladder_classes(ladder: &FramingLadder) -> RungClasses {
    match ladder.count {
        FramingCount::Finite(m) => RungClasses::Cyclic(m),
        FramingCount::Infinite => RungClasses::Free,
    }
}
