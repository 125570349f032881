use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{pow_big, PrimePowerResidue};

/// Value of Morita's p-adic gamma function modulo `p^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicGammaValue {
    pub residue: PrimePowerResidue,
}

/// `Γ_p(x) mod p^N` for p-integral rational `x` and odd `p`.
///
/// `x` is first replaced by its residue `x̄ ∈ [0, p^N)`; by continuity
/// `Γ_p(x) ≡ Γ_p(x̄) = (-1)^x̄ ∏_{0<j<x̄, p∤j} j (mod p^N)`.
pub fn padic_gamma(x: &BigRational, p: u64, precision: u32) -> Result<PadicGammaValue> {
    if p == 2 {
        return Err(Error::HypothesisViolated(
            "p-adic gamma for p = 2 is not supported".into(),
        ));
    }
    if precision == 0 {
        return Err(Error::HypothesisViolated(
            "precision must be positive".into(),
        ));
    }
    if (x.denom() % p).is_zero() {
        return Err(Error::HypothesisViolated(format!(
            "{p} divides the denominator of {x}"
        )));
    }
    let modulus = pow_big(p, precision);
    let reduced = PrimePowerResidue::from_rational(x, p, precision)?;
    let xbar = reduced.value().clone();
    let product = match (modulus.to_u64(), xbar.to_u64()) {
        (Some(m), Some(xb)) if m < (1 << 63) => {
            let m = m as u128;
            let mut acc: u128 = 1 % m;
            for j in 1..xb {
                if j % p != 0 {
                    acc = acc * j as u128 % m;
                }
            }
            BigInt::from(acc)
        }
        _ => {
            let mut acc = BigInt::from(1);
            let mut j = BigInt::from(1);
            while j < xbar {
                if !(&j % p).is_zero() {
                    acc = (acc * &j).mod_floor(&modulus);
                }
                j += 1;
            }
            acc
        }
    };
    let signed = if xbar.is_odd() { -product } else { product };
    Ok(PadicGammaValue {
        residue: PrimePowerResidue::new(signed, p, precision),
    })
}
