//! Arithmetic in the prime field F_p.
//!
//! Elements are canonical representatives in `[0, p)` stored as `u64`.
//! The characteristic is capped at 31 bits so products fit in a `u64`
//! without intermediate reduction.

use crate::error::{EngineError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_CHARACTERISTIC {
            return Err(EngineError::CharTooLarge(p));
        }
        if !is_prime(p) {
            return Err(EngineError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    /// Canonical representative of a possibly negative integer.
    pub fn reduce_signed(&self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        // p is prime, so a^(p-2) = a^{-1}
        self.pow(a, self.p - 2)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(PrimeField::new(1), Err(EngineError::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(EngineError::NotPrime(4)));
        assert_eq!(PrimeField::new(32001), Err(EngineError::NotPrime(32001)));
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn field_axioms_mod_32003() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u64, 2, 17, 32002, 15001] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
        assert_eq!(f.reduce_signed(-1), 32002);
        assert_eq!(f.reduce_signed(-32003), 0);
        assert_eq!(f.sub(3, 5), 32001);
    }
}
