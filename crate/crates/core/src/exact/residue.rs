use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::pow_big;
use crate::error::{Error, Result};

/// An element of `Z/p^N Z`, stored as its least nonnegative representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePowerResidue {
    value: BigInt,
    p: u64,
    exponent: u32,
}

impl PrimePowerResidue {
    pub fn new(value: impl Into<BigInt>, p: u64, exponent: u32) -> Self {
        assert!(exponent > 0, "residue precision must be positive");
        let modulus = pow_big(p, exponent);
        PrimePowerResidue {
            value: value.into().mod_floor(&modulus),
            p,
            exponent,
        }
    }

    /// Image of a p-integral rational.
    pub fn from_rational(x: &BigRational, p: u64, exponent: u32) -> Result<Self> {
        let den = unit_inverse(x.denom(), p, exponent)?;
        Ok(PrimePowerResidue::new(x.numer().clone(), p, exponent) * den)
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> BigInt {
        pow_big(self.p, self.exponent)
    }

    pub fn is_unit(&self) -> bool {
        !(&self.value % self.p).is_zero()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = PrimePowerResidue::new(1, self.p, self.exponent);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        unit_inverse(&self.value, self.p, self.exponent)
    }

    /// Reduce to a lower precision.
    pub fn truncate(&self, exponent: u32) -> Self {
        assert!(exponent <= self.exponent);
        PrimePowerResidue::new(self.value.clone(), self.p, exponent)
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.p == other.p && self.exponent == other.exponent,
            "mixing residues modulo {}^{} and {}^{}",
            self.p,
            self.exponent,
            other.p,
            other.exponent
        );
    }
}

impl fmt::Display for PrimePowerResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.p, self.exponent)
    }
}

impl Mul for &PrimePowerResidue {
    type Output = PrimePowerResidue;
    fn mul(self, rhs: Self) -> PrimePowerResidue {
        self.check_compatible(rhs);
        PrimePowerResidue::new(&self.value * &rhs.value, self.p, self.exponent)
    }
}

impl Mul for PrimePowerResidue {
    type Output = PrimePowerResidue;
    fn mul(self, rhs: Self) -> PrimePowerResidue {
        &self * &rhs
    }
}

impl Add for &PrimePowerResidue {
    type Output = PrimePowerResidue;
    fn add(self, rhs: Self) -> PrimePowerResidue {
        self.check_compatible(rhs);
        PrimePowerResidue::new(&self.value + &rhs.value, self.p, self.exponent)
    }
}

impl Sub for &PrimePowerResidue {
    type Output = PrimePowerResidue;
    fn sub(self, rhs: Self) -> PrimePowerResidue {
        self.check_compatible(rhs);
        PrimePowerResidue::new(&self.value - &rhs.value, self.p, self.exponent)
    }
}

impl Neg for &PrimePowerResidue {
    type Output = PrimePowerResidue;
    fn neg(self) -> PrimePowerResidue {
        PrimePowerResidue::new(-&self.value, self.p, self.exponent)
    }
}

/// Inverse of `a` modulo `p^exponent`; `a` must be prime to `p`.
pub fn unit_inverse(a: &BigInt, p: u64, exponent: u32) -> Result<PrimePowerResidue> {
    let modulus = pow_big(p, exponent);
    let a_red = a.mod_floor(&modulus);
    let eg = a_red.extended_gcd(&modulus);
    if !eg.gcd.is_one() {
        return Err(Error::NotUnit {
            value: a.to_string(),
            p,
        });
    }
    Ok(PrimePowerResidue::new(eg.x, p, exponent))
}
