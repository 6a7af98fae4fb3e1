use std::fmt::Debug;

/// Values of an invariant.
pub trait AbelianGroup: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `k`-fold sum, negative `k` allowed.
    fn scale(&self, k: i64) -> Self {
        let base = if k < 0 { self.neg() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::zero(), |acc, _| acc.add(&base))
    }
}

impl AbelianGroup for i64 {
    fn zero() -> Self {
        0
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn scale(&self, k: i64) -> Self {
        self * k
    }
}

/// Integers modulo `N`, kept in `0..N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZMod<const N: u64>(u64);

impl<const N: u64> ZMod<N> {
    pub fn new(v: i64) -> Self {
        ZMod(v.rem_euclid(N as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const N: u64> AbelianGroup for ZMod<N> {
    fn zero() -> Self {
        ZMod(0)
    }

    fn add(&self, other: &Self) -> Self {
        ZMod((self.0 + other.0) % N)
    }

    fn neg(&self) -> Self {
        ZMod((N - self.0) % N)
    }

    fn scale(&self, k: i64) -> Self {
        ZMod::new((self.0 as i128 * k as i128).rem_euclid(N as i128) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_arithmetic() {
        let a = ZMod::<6>::new(-1);
        assert_eq!(a.value(), 5);
        assert_eq!(a.add(&ZMod::new(2)).value(), 1);
        assert_eq!(a.neg().value(), 1);
        assert_eq!(a.scale(-3).value(), 3);
        assert_eq!(ZMod::<6>::zero().neg(), ZMod::zero());
    }

    #[test]
    fn default_scale_matches_multiplication() {
        #[derive(Clone, PartialEq, Debug)]
        struct Plain(i64);
        impl AbelianGroup for Plain {
            fn zero() -> Self {
                Plain(0)
            }
            fn add(&self, o: &Self) -> Self {
                Plain(self.0 + o.0)
            }
            fn neg(&self) -> Self {
                Plain(-self.0)
            }
        }
        for k in -4..=4 {
            assert_eq!(Plain(3).scale(k), Plain(3 * k));
        }
    }
}
