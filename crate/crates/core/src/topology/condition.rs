//! Rule engine deciding, from declared facts, whether a contact manifold has
//! infinitely many Legendrian isotopy classes inside some framed class.

use std::fmt;

use super::{FgAbelianGroup, TopologyError};

/// Facts about the manifold; `None` means not known.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ManifoldFlags {
    pub tight: Option<bool>,
    pub pi2_zero: Option<bool>,
    pub no_injective_torus: Option<bool>,
    pub parallelizable_contact: Option<bool>,
}

/// A map of the torus. `class` is its homology class, `pairing` the value of
/// the Euler class on it, `realizable` whether the circle factor is freely
/// homotopic to curves of the component in question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusRecord {
    pub class: Vec<i64>,
    pub realizable: bool,
    pub pairing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldDescriptor {
    h2: FgAbelianGroup,
    euler: Vec<i64>,
    flags: ManifoldFlags,
    tori: Vec<TorusRecord>,
}

impl ManifoldDescriptor {
    /// Checks dimensions and, for `H^2 = Z`, that every pairing equals
    /// `euler * class`.
    pub fn new(
        h2: FgAbelianGroup,
        euler: Vec<i64>,
        flags: ManifoldFlags,
        tori: Vec<TorusRecord>,
    ) -> Result<Self, TopologyError> {
        h2.check(&euler)?;
        for (i, t) in tori.iter().enumerate() {
            h2.check(&t.class)?;
            if h2.factors() == [0] && t.pairing != euler[0] * t.class[0] {
                return Err(TopologyError::InvalidDescriptor(format!(
                    "torus {i} declares pairing {} but the Euler class gives {}",
                    t.pairing,
                    euler[0] * t.class[0]
                )));
            }
        }
        Ok(ManifoldDescriptor {
            h2,
            euler,
            flags,
            tori,
        })
    }

    pub fn h2(&self) -> &FgAbelianGroup {
        &self.h2
    }

    pub fn euler(&self) -> &[i64] {
        &self.euler
    }

    pub fn flags(&self) -> &ManifoldFlags {
        &self.flags
    }

    pub fn tori(&self) -> &[TorusRecord] {
        &self.tori
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A realizable torus with nonzero Euler pairing.
    InterpretationII,
    Tight,
    /// Euler class of finite order.
    Torsion,
    /// `pi_2 = 0` and no torus injects on `pi_1`.
    Atoroidal,
    Parallelizable,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::InterpretationII => "InterpretationII",
            Rule::Tight => "Tight",
            Rule::Torsion => "Torsion",
            Rule::Atoroidal => "Atoroidal",
            Rule::Parallelizable => "Parallelizable",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarOutcome {
    Holds(Rule),
    /// Fails, with the index of the witnessing torus record.
    Fails {
        rule: Rule,
        torus: usize,
    },
    Unknown,
}

fn holding_rules(d: &ManifoldDescriptor) -> Result<Vec<Rule>, TopologyError> {
    let f = &d.flags;
    let mut rules = Vec::new();
    if f.tight == Some(true) {
        rules.push(Rule::Tight);
    }
    if d.h2.is_torsion(&d.euler)? {
        rules.push(Rule::Torsion);
    }
    if f.pi2_zero == Some(true) && f.no_injective_torus == Some(true) {
        rules.push(Rule::Atoroidal);
    }
    if f.parallelizable_contact == Some(true) {
        rules.push(Rule::Parallelizable);
    }
    Ok(rules)
}

/// Applies the rules in a fixed order: a failing torus first, then tight,
/// torsion, atoroidal and parallelizable. A failing torus together with any
/// holding rule is a contradiction and is reported as an error.
pub fn condition_star(d: &ManifoldDescriptor) -> Result<StarOutcome, TopologyError> {
    let witness = d.tori.iter().position(|t| t.realizable && t.pairing != 0);
    let holds = holding_rules(d)?;
    match (witness, holds.first()) {
        (Some(torus), Some(rule)) => Err(TopologyError::InconsistentDescriptor(format!(
            "torus {torus} has nonzero Euler pairing but rule {rule} holds"
        ))),
        (Some(torus), None) => Ok(StarOutcome::Fails {
            rule: Rule::InterpretationII,
            torus,
        }),
        (None, Some(&rule)) => Ok(StarOutcome::Holds(rule)),
        (None, None) => Ok(StarOutcome::Unknown),
    }
}
