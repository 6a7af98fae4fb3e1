//! Free-group words. Generators are the letters `a..z`; the uppercase letter
//! is the inverse. `1` or the empty string is the identity.

use std::fmt;
use std::str::FromStr;

use super::TopologyError;
use crate::Sign;

/// A freely reduced word. Letter `g > 0` is generator `g`, `-g` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<i32>);

impl Word {
    /// Reduces the letters freely. Letters must be nonzero.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Word {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(g: u32) -> Word {
        Word(vec![g as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `g w g^-1`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    /// Strips letters that cancel around the cyclic word.
    pub fn cyclic_reduce(&self) -> Word {
        let mut s = &self.0[..];
        while s.len() >= 2 && s[0] == -s[s.len() - 1] {
            s = &s[1..s.len() - 1];
        }
        Word(s.to_vec())
    }

    /// Canonical representative of the conjugacy class: the least rotation
    /// of the cyclic reduction.
    pub fn conjugacy_class(&self) -> Word {
        let c = self.cyclic_reduce().0;
        let n = c.len();
        (0..n.max(1))
            .map(|r| {
                let mut v = c.clone();
                v.rotate_left(r % n.max(1));
                v
            })
            .min()
            .map(Word)
            .unwrap_or_default()
    }
}

impl FromStr for Word {
    type Err = TopologyError;

    fn from_str(s: &str) -> Result<Word, TopologyError> {
        if s == "1" {
            return Ok(Word::identity());
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'a'..='z' => Ok(c as i32 - 'a' as i32 + 1),
                'A'..='Z' => Ok(-(c as i32 - 'A' as i32 + 1)),
                _ => Err(TopologyError::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<i32>, _>>()?;
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &l in &self.0 {
            let base = if l > 0 { b'a' } else { b'A' };
            write!(f, "{}", (base + (l.unsigned_abs() - 1) as u8) as char)?;
        }
        Ok(())
    }
}

/// Orientation character of a free group: one sign per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    epsilon: Vec<Sign>,
}

impl Alphabet {
    pub fn new(epsilon: Vec<Sign>) -> Alphabet {
        assert!(epsilon.len() <= 26, "at most 26 generators");
        Alphabet { epsilon }
    }

    /// All generators orientation preserving.
    pub fn orientable(rank: usize) -> Alphabet {
        Alphabet::new(vec![Sign::Plus; rank])
    }

    pub fn rank(&self) -> usize {
        self.epsilon.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.epsilon
    }

    pub fn check(&self, w: &Word) -> Result<(), TopologyError> {
        match w.0.iter().find(|l| l.unsigned_abs() as usize > self.rank()) {
            Some(&l) => Err(TopologyError::RankExceeded {
                letter: Word(vec![l])
                    .to_string()
                    .chars()
                    .next()
                    .expect("one letter"),
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// The character extended multiplicatively.
    pub fn epsilon(&self, w: &Word) -> Sign {
        w.0.iter().fold(Sign::Plus, |acc, &l| {
            acc * self.epsilon[l.unsigned_abs() as usize - 1]
        })
    }
}

impl FromStr for Alphabet {
    type Err = TopologyError;

    /// One `+` or `-` per generator.
    fn from_str(s: &str) -> Result<Alphabet, TopologyError> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(TopologyError::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if signs.len() > 26 {
            return Err(TopologyError::InvalidWord(s.to_string()));
        }
        Ok(Alphabet::new(signs))
    }
}

/// The two loops at a double point, `d1 + d2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordPair(pub Word, pub Word);

impl WordPair {
    pub fn swapped(&self) -> WordPair {
        WordPair(self.1.clone(), self.0.clone())
    }

    pub fn conjugated(&self, g: &Word) -> WordPair {
        WordPair(self.0.conjugate(g), self.1.conjugate(g))
    }
}

/// `0` when one of the loops is trivial, `1` otherwise. Conjugation and
/// swapping both preserve this.
pub fn alpha_nu(p: &WordPair) -> u8 {
    if p.0.is_empty() || p.1.is_empty() {
        0
    } else {
        1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuOutcome {
    Equal,
    Distinct,
    UnknownAtBound,
}

/// Reduced words of length at most `max_len` over `rank` generators, by
/// length and then lexicographically.
fn words_up_to(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|g| [g, -g]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.0.last() != Some(&-l) {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Decides whether `q` is in the orbit of `p` under simultaneous conjugation
/// and swapping. The search tries conjugators of length up to `bound`; the
/// conjugacy classes of the two coordinates separate pairs that no
/// conjugator can relate.
pub fn nu_equivalent(p: &WordPair, q: &WordPair, rank: usize, bound: usize) -> NuOutcome {
    if p == q {
        return NuOutcome::Equal;
    }
    let classes = |w: &WordPair| {
        let mut c = [w.0.conjugacy_class(), w.1.conjugacy_class()];
        c.sort();
        c
    };
    if classes(p) != classes(q) {
        return NuOutcome::Distinct;
    }
    let swapped = q.swapped();
    let hit = words_up_to(rank, bound).into_iter().any(|g| {
        let c = p.conjugated(&g);
        c == *q || c == swapped
    });
    if hit {
        NuOutcome::Equal
    } else {
        NuOutcome::UnknownAtBound
    }
}
