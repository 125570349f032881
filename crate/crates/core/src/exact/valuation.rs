use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A p-adic valuation; `Infinite` stands for the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self >= bound`, with infinity exceeding every bound.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }

    pub fn min(self, cap: i64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v.min(cap)),
            Valuation::Infinite => Valuation::Finite(cap),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use Valuation::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Valuation;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or \"inf\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Valuation, E> {
                Ok(Valuation::Finite(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Valuation, E> {
                i64::try_from(v)
                    .map(Valuation::Finite)
                    .map_err(|_| E::custom("valuation out of range"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Valuation, E> {
                if v == "inf" {
                    Ok(Valuation::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}

fn vp_mag(x: &BigUint, p: u64) -> u64 {
    debug_assert!(!x.is_zero());
    let p_big = BigUint::from(p);
    // strip p^8 at a time first, then single factors
    let chunk = BigUint::from(p).pow(8);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&chunk);
        if !r.is_zero() {
            break;
        }
        x = q;
        v += 8;
    }
    loop {
        let (q, r) = x.div_rem(&p_big);
        if !r.is_zero() {
            break;
        }
        x = q;
        v += 1;
    }
    v
}

/// Exponent of `p` in a nonzero integer.
pub fn vp_int(x: &BigInt, p: u64) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if let Some(small) = x.magnitude().to_u64() {
        let mut small = small;
        let mut v = 0;
        while small % p == 0 {
            small /= p;
            v += 1;
        }
        return Ok(v);
    }
    Ok(vp_mag(x.magnitude(), p))
}

/// p-adic valuation of a nonzero rational; negative when `p` divides the denominator.
pub fn vp(x: &BigRational, p: u64) -> Result<i64> {
    let num = vp_int(x.numer(), p)? as i64;
    let den = vp_int(x.denom(), p)? as i64;
    Ok(num - den)
}

/// Valuation of any integer, zero mapping to [`Valuation::Infinite`].
pub fn valuation_int(x: &BigInt, p: u64) -> Valuation {
    match vp_int(x, p) {
        Ok(v) => Valuation::Finite(v as i64),
        Err(_) => Valuation::Infinite,
    }
}

/// Valuation of any rational, zero mapping to [`Valuation::Infinite`].
pub fn valuation(x: &BigRational, p: u64) -> Valuation {
    match vp(x, p) {
        Ok(v) => Valuation::Finite(v),
        Err(_) => Valuation::Infinite,
    }
}

/// `v_p(a - b)`; how "a ≡ b (mod p^t)" is decided throughout.
pub fn valuation_diff(a: &BigInt, b: &BigInt, p: u64) -> Valuation {
    valuation_int(&(a - b), p)
}
