use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{pow_u64, valuation_diff, Prime, Valuation};
use crate::sequences::{eval_catalog, SequenceId};

/// How strongly a check is claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Assertion {
    /// A theorem; failure is a bug.
    Proven,
    /// Believed but unproven; failures are reported, not fatal by default.
    Conjectural,
    /// Outside any claimed range; only the valuation is of interest.
    Observed,
}

/// One instance of `a(m p^r) ≡ a(m p^(r-1)) (mod p^claimed_exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCheck {
    pub sequence: SequenceId,
    pub p: u64,
    pub m: u64,
    pub r: u32,
    pub claimed_exponent: i64,
    pub observed_valuation: Valuation,
    pub pass: bool,
    pub assertion: Assertion,
}

impl CongruenceCheck {
    /// `observed - claimed`, `None` for a zero difference.
    pub fn margin(&self) -> Option<i64> {
        self.observed_valuation
            .finite()
            .map(|v| v - self.claimed_exponent)
    }

    /// Failed and the failure counts against the run.
    pub fn is_fatal(&self, strict: bool) -> bool {
        !self.pass
            && match self.assertion {
                Assertion::Proven => true,
                Assertion::Conjectural => strict,
                Assertion::Observed => false,
            }
    }

    pub fn sort_key(&self) -> (SequenceId, u64, u64, u32, i64) {
        (self.sequence, self.p, self.m, self.r, self.claimed_exponent)
    }
}

/// Sort checks by sequence, prime, `m`, `r`.
pub fn sort_checks(checks: &mut [CongruenceCheck]) {
    checks.sort_by_key(|c| c.sort_key());
}

/// A claimed exponent `per_r * r + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentRule {
    pub per_r: i64,
    pub offset: i64,
}

impl ExponentRule {
    pub const fn linear(per_r: i64, offset: i64) -> Self {
        ExponentRule { per_r, offset }
    }

    pub fn exponent(&self, r: u32) -> i64 {
        self.per_r * r as i64 + self.offset
    }
}

/// The primes, multipliers `m` and powers `r` a grid runs over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub primes: Vec<Prime>,
    pub m_values: Vec<u64>,
    pub r_values: Vec<u32>,
}

impl GridSpec {
    pub fn new(primes: Vec<Prime>, m_values: Vec<u64>, r_values: Vec<u32>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::EmptyGrid("primes"));
        }
        if m_values.is_empty() {
            return Err(Error::EmptyGrid("m values"));
        }
        if r_values.is_empty() {
            return Err(Error::EmptyGrid("r values"));
        }
        if m_values.contains(&0) {
            return Err(Error::HypothesisViolated("m must be positive".into()));
        }
        if r_values.contains(&0) {
            return Err(Error::HypothesisViolated("r must be positive".into()));
        }
        Ok(GridSpec {
            primes,
            m_values,
            r_values,
        })
    }

    /// Convenience constructor from raw integers.
    pub fn from_raw(primes: &[u64], m_values: &[u64], r_values: &[u32]) -> Result<Self> {
        let primes = primes
            .iter()
            .map(|&p| Prime::new(p))
            .collect::<Result<Vec<_>>>()?;
        GridSpec::new(primes, m_values.to_vec(), r_values.to_vec())
    }

    /// Every `(p, m, r)` in canonical order.
    pub fn points(&self) -> Vec<(Prime, u64, u32)> {
        let mut out = Vec::new();
        for &p in &self.primes {
            for &m in &self.m_values {
                for &r in &self.r_values {
                    out.push((p, m, r));
                }
            }
        }
        out
    }

    /// Reject primes below `min`.
    pub fn require_min_prime(&self, min: u64, why: &str) -> Result<()> {
        match self.primes.iter().find(|p| p.get() < min) {
            Some(p) => Err(Error::HypothesisViolated(format!(
                "prime {p} < {min} ({why})"
            ))),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.primes.len() * self.m_values.len() * self.r_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `v_p(a(m p^r) - a(m p^(r-1)))` compared with `claimed_exponent`.
pub fn check_two_term(
    id: SequenceId,
    p: Prime,
    m: u64,
    r: u32,
    claimed_exponent: i64,
) -> CongruenceCheck {
    check_two_term_as(id, p, m, r, claimed_exponent, Assertion::Proven)
}

/// [`check_two_term`] with an explicit assertion level.
pub fn check_two_term_as(
    id: SequenceId,
    p: Prime,
    m: u64,
    r: u32,
    claimed_exponent: i64,
    assertion: Assertion,
) -> CongruenceCheck {
    assert!(m >= 1 && r >= 1, "m and r must be positive");
    let lower = m * pow_u64(p.get(), r - 1);
    let upper = lower * p.get();
    let v = valuation_diff(&eval_catalog(id, upper), &eval_catalog(id, lower), p.get());
    CongruenceCheck {
        sequence: id,
        p: p.get(),
        m,
        r,
        claimed_exponent,
        observed_valuation: v,
        pass: v.at_least(claimed_exponent),
        assertion,
    }
}
