//! Prime-field scalars with an element-carried modulus.

use std::fmt;

use num::bigint::BigInt;
use num::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{is_prime, Rational};

/// An element of F_p, reduced to [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn new(residue: i64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let r = residue.rem_euclid(p as i64) as u64;
        Ok(PrimeFieldElement { residue: r, modulus: p })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(0, p)
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::new(1, p)
    }

    fn same(self, other: Self) -> (u64, u64, u64) {
        assert_eq!(self.modulus, other.modulus, "mixed prime-field moduli");
        (self.residue, other.residue, self.modulus)
    }

    pub fn add(self, other: Self) -> Self {
        let (a, b, p) = self.same(other);
        PrimeFieldElement { residue: (a + b) % p, modulus: p }
    }

    pub fn sub(self, other: Self) -> Self {
        let (a, b, p) = self.same(other);
        PrimeFieldElement { residue: (a + p - b) % p, modulus: p }
    }

    pub fn mul(self, other: Self) -> Self {
        let (a, b, p) = self.same(other);
        PrimeFieldElement {
            residue: ((a as u128 * b as u128) % p as u128) as u64,
            modulus: p,
        }
    }

    pub fn neg(self) -> Self {
        PrimeFieldElement {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::ZeroDenominator(format!("1/0 mod {}", self.modulus)));
        }
        // Fermat: a^(p-2) mod p
        let mut base = self;
        let mut exp = self.modulus - 2;
        let mut acc = PrimeFieldElement { residue: 1, modulus: self.modulus };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn from_small(n: i64, p: u64) -> Self {
        PrimeFieldElement {
            residue: n.rem_euclid(p as i64) as u64,
            modulus: p,
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

/// Reduce a rational mod p; errors when p divides the denominator.
pub fn reduce_rational(r: &Rational, p: u64, name: &str) -> Result<PrimeFieldElement> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (r.denom() % BigInt::from(p)).is_zero() {
        return Err(Error::NonUnitDenominator { name: name.to_string(), p });
    }
    let n = PrimeFieldElement { residue: bigint_mod(r.numer(), p), modulus: p };
    let d = PrimeFieldElement { residue: bigint_mod(r.denom(), p), modulus: p };
    Ok(n.mul(d.inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_7() {
        let a = PrimeFieldElement::new(10, 7).unwrap();
        let b = PrimeFieldElement::new(-3, 7).unwrap();
        assert_eq!(a.residue(), 3);
        assert_eq!(b.residue(), 4);
        assert_eq!(a.add(b).residue(), 0);
        assert_eq!(a.mul(b).residue(), 5);
        assert_eq!(a.inv().unwrap().mul(a).residue(), 1);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeFieldElement::new(1, 6).is_err());
        assert!(PrimeFieldElement::new(1, 1).is_err());
    }

    #[test]
    fn rational_reduction() {
        // 1/2 mod 3 = 2 (since 2*2 = 4 = 1)
        let r = Rational::ratio(1, 2);
        assert_eq!(reduce_rational(&r, 3, "x").unwrap().residue(), 2);
        assert!(matches!(
            reduce_rational(&r, 2, "x"),
            Err(Error::NonUnitDenominator { .. })
        ));
    }
}
