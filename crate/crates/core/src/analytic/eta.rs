use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::congruence::Assertion;
use crate::error::{Error, Result};
use crate::exact::{valuation_diff, Prime, Valuation};
use crate::sequences::{eval_catalog, SequenceId};

/// Coefficients `a(0..=limit)` of a truncated q-series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    coefficients: Vec<BigInt>,
}

impl QExpansion {
    pub fn limit(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficient of `q^n`; panics past the truncation point.
    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coefficients[n]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }
}

fn mul_one_minus_power(series: &mut [BigInt], step: usize) {
    for i in (step..series.len()).rev() {
        let (lo, hi) = series.split_at_mut(i);
        hi[0] -= &lo[i - step];
    }
}

/// `q ∏_{n>=1} (1 - q^(2n))^4 (1 - q^(4n))^4` through `q^limit`.
///
/// The product only involves even powers, so it is computed as a series
/// in `Q = q^2` of length `(limit - 1)/2 + 1`, then spread onto odd indices.
pub fn eta_q_expansion(limit: usize) -> QExpansion {
    assert!(limit >= 1, "limit must be positive");
    let len = (limit - 1) / 2 + 1;
    let mut f = vec![BigInt::zero(); len];
    f[0] = BigInt::one();
    for n in 1..len {
        for _ in 0..4 {
            mul_one_minus_power(&mut f, n);
        }
        if 2 * n < len {
            for _ in 0..4 {
                mul_one_minus_power(&mut f, 2 * n);
            }
        }
    }
    let mut coefficients = vec![BigInt::zero(); limit + 1];
    for (i, c) in f.into_iter().enumerate() {
        coefficients[2 * i + 1] = c;
    }
    QExpansion { coefficients }
}

/// `A((p-1)/2)` against the `p`-th coefficient of the eta product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeukersCheck {
    pub p: u64,
    #[serde(with = "crate::exact::decimal")]
    pub apery_value: BigInt,
    #[serde(with = "crate::exact::decimal")]
    pub coefficient: BigInt,
    pub claimed_exponent: i64,
    pub observed_valuation: Valuation,
    pub pass: bool,
    pub assertion: Assertion,
}

/// Check `A((p-1)/2) ≡ a(p) (mod p^2)`.
///
/// Asserted for `p >= 5`; at `p = 3` the valuation is only reported.
pub fn beukers_check(p: Prime, expansion: &QExpansion) -> Result<BeukersCheck> {
    let pv = p.get();
    if pv == 2 {
        return Err(Error::HypothesisViolated("needs an odd prime".into()));
    }
    if pv as usize > expansion.limit() {
        return Err(Error::HypothesisViolated(format!(
            "expansion truncated at q^{}, need q^{pv}",
            expansion.limit()
        )));
    }
    let apery_value = eval_catalog(SequenceId::Apery, (pv - 1) / 2);
    let coefficient = expansion.coefficient(pv as usize).clone();
    let v = valuation_diff(&apery_value, &coefficient, pv);
    Ok(BeukersCheck {
        p: pv,
        apery_value,
        coefficient,
        claimed_exponent: 2,
        observed_valuation: v,
        pass: v.at_least(2),
        assertion: if pv >= 5 {
            Assertion::Proven
        } else {
            Assertion::Observed
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let e = eta_q_expansion(11);
        let a: Vec<i64> = e
            .coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(a, [0, 1, 0, -4, 0, -2, 0, 24, 0, -11, 0, -44]);
        assert_eq!(eta_q_expansion(1).coefficients().len(), 2);
    }

    #[test]
    fn beukers_examples() {
        let e = eta_q_expansion(20);
        let c = beukers_check(Prime::new(5).unwrap(), &e).unwrap();
        assert_eq!(c.apery_value, 73.into());
        assert_eq!(c.coefficient, (-2).into());
        assert_eq!(c.observed_valuation, Valuation::Finite(2));
        let c = beukers_check(Prime::new(3).unwrap(), &e).unwrap();
        assert_eq!(c.observed_valuation, Valuation::Finite(2));
        assert_eq!(c.assertion, Assertion::Observed);
        assert!(beukers_check(Prime::new(7).unwrap(), &e).unwrap().pass);
        assert!(beukers_check(Prime::new(23).unwrap(), &e).is_err());
        assert!(beukers_check(Prime::new(2).unwrap(), &e).is_err());
    }
}
