use super::TopologyError;

/// A finitely generated abelian group `Z/f_1 + ... + Z/f_k`, where a factor
/// of `0` stands for `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    factors: Vec<u64>,
}

impl FgAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        FgAbelianGroup { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|&f| f != 0)
    }

    pub fn check(&self, e: &[i64]) -> Result<(), TopologyError> {
        if e.len() != self.factors.len() {
            return Err(TopologyError::DimensionMismatch {
                expected: self.factors.len(),
                found: e.len(),
            });
        }
        Ok(())
    }

    /// Reduces finite coordinates into `0..f`.
    pub fn reduce(&self, e: &[i64]) -> Result<Vec<i64>, TopologyError> {
        self.check(e)?;
        Ok(e.iter()
            .zip(&self.factors)
            .map(|(&x, &f)| if f == 0 { x } else { x.rem_euclid(f as i64) })
            .collect())
    }

    pub fn equal(&self, a: &[i64], b: &[i64]) -> Result<bool, TopologyError> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>, TopologyError> {
        self.check(b)?;
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&sum)
    }

    /// Whether `e` has finite order, i.e. vanishes on every `Z` factor.
    pub fn is_torsion(&self, e: &[i64]) -> Result<bool, TopologyError> {
        let r = self.reduce(e)?;
        Ok(r.iter().zip(&self.factors).all(|(&x, &f)| f != 0 || x == 0))
    }

    /// All elements of a finite group in lexicographic order; `None` if the
    /// group is infinite.
    pub fn elements(&self) -> Option<Vec<Vec<i64>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &f in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..f as i64).map(move |x| {
                        let mut e = prefix.clone();
                        e.push(x);
                        e
                    })
                })
                .collect();
        }
        Some(out)
    }
}

/// Whether `e = 2a` for some `a`, solved one coordinate at a time: a `Z`
/// coordinate must be even, and `2x = e (mod m)` is solvable exactly when
/// `m` is odd or `e` is even.
pub fn euler_realizable(e: &[i64], h2: &FgAbelianGroup) -> Result<bool, TopologyError> {
    let e = h2.reduce(e)?;
    Ok(e.iter().zip(h2.factors()).all(|(&x, &f)| match f {
        0 => x % 2 == 0,
        m if m % 2 == 1 => true,
        _ => x % 2 == 0,
    }))
}
