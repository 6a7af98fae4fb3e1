//! Fundamental groups of circle bundles over surfaces with free fundamental
//! group, in the normal form `f^k w` with `f` the fiber.

use std::fmt;

use super::{Alphabet, TopologyError, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleGroupElement {
    k: i64,
    w: Word,
    alphabet: Alphabet,
}

impl BundleGroupElement {
    pub fn new(k: i64, w: Word, alphabet: &Alphabet) -> Result<Self, TopologyError> {
        alphabet.check(&w)?;
        Ok(BundleGroupElement {
            k,
            w,
            alphabet: alphabet.clone(),
        })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        BundleGroupElement {
            k: 0,
            w: Word::identity(),
            alphabet: alphabet.clone(),
        }
    }

    /// The fiber `f`.
    pub fn fiber(alphabet: &Alphabet) -> Self {
        BundleGroupElement {
            k: 1,
            w: Word::identity(),
            alphabet: alphabet.clone(),
        }
    }

    pub fn fiber_exponent(&self) -> i64 {
        self.k
    }

    pub fn base(&self) -> &Word {
        &self.w
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn inverse(&self) -> Self {
        BundleGroupElement {
            k: -self.alphabet.epsilon(&self.w).value() * self.k,
            w: self.w.inverse(),
            alphabet: self.alphabet.clone(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(&self.alphabet), |acc, _| {
            bundle_mul(&acc, &base).expect("same alphabet")
        })
    }
}

impl fmt::Display for BundleGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.k, self.w)
    }
}

/// `(f^a u)(f^b v) = f^(a + eps(u) b) uv`: moving the fiber past `u`
/// inverts it when `u` reverses orientation.
pub fn bundle_mul(
    a: &BundleGroupElement,
    b: &BundleGroupElement,
) -> Result<BundleGroupElement, TopologyError> {
    if a.alphabet != b.alphabet {
        return Err(TopologyError::AlphabetMismatch);
    }
    Ok(BundleGroupElement {
        k: a.k + a.alphabet.epsilon(&a.w).value() * b.k,
        w: a.w.mul(&b.w),
        alphabet: a.alphabet.clone(),
    })
}

/// Exponents with `beta^n = alpha^i f^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TtWitness {
    pub n: i64,
    pub i: i64,
    pub j: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TtOutcome {
    Witness(TtWitness),
    NoWitnessFound { bound: u32 },
}

/// Signed exponents ordered by absolute value, positive first.
fn exponents(bound: u32, include_zero: bool) -> impl Iterator<Item = i64> {
    let start = if include_zero { 0 } else { 1 };
    (start..=bound as i64).flat_map(|m| if m == 0 { vec![0] } else { vec![m, -m] })
}

/// Searches `0 < |n| <= bound`, `|i| <= bound` for `beta^n = alpha^i f^j`,
/// given that `alpha` and `beta` commute and `alpha` has nontrivial image in
/// the base. The first hit in the order of increasing `|n|`, then `|i|`, is
/// returned.
pub fn check_toughandtechnical(
    alpha: &BundleGroupElement,
    beta: &BundleGroupElement,
    bound: u32,
) -> Result<TtOutcome, TopologyError> {
    if alpha.alphabet != beta.alphabet {
        return Err(TopologyError::AlphabetMismatch);
    }
    if alpha.w.is_empty() {
        return Err(TopologyError::TrivialBase);
    }
    if bundle_mul(alpha, beta)? != bundle_mul(beta, alpha)? {
        return Err(TopologyError::NotCommuting);
    }
    let eps = |w: &Word| alpha.alphabet.epsilon(w).value();
    for n in exponents(bound, false) {
        let bn = beta.pow(n);
        for i in exponents(bound, true) {
            let ai = alpha.pow(i);
            if ai.w != bn.w {
                continue;
            }
            // alpha^i f^j = f^(k + eps(w) j) w
            let j = (bn.k - ai.k) * eps(&ai.w);
            return Ok(TtOutcome::Witness(TtWitness { n, i, j }));
        }
    }
    Ok(TtOutcome::NoWitnessFound { bound })
}
