use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Parameters of the two three-term recurrences, both started from
/// `s(-1) = 0, s(0) = 1`:
///
/// * cubic: `(n+1)^3 s(n+1) = (2n+1)(a n^2 + a n + b) s(n) - n (c n^2 + d) s(n-1)`
/// * quadratic: `(n+1)^2 t(n+1) = (a n^2 + a n + b) t(n) - c n^2 t(n-1)`
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum RecurrenceParams {
    Cubic { a: i64, b: i64, c: i64, d: i64 },
    Quadratic { a: i64, b: i64, c: i64 },
}

/// The three integer coefficient polynomials of one recurrence step,
/// `lead * s(n+1) = mid * s(n) - back * s(n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepCoefficients {
    pub lead: i128,
    pub mid: i128,
    pub back: i128,
}

impl RecurrenceParams {
    pub const fn cubic(a: i64, b: i64, c: i64, d: i64) -> Self {
        RecurrenceParams::Cubic { a, b, c, d }
    }

    pub const fn quadratic(a: i64, b: i64, c: i64) -> Self {
        RecurrenceParams::Quadratic { a, b, c }
    }

    /// Coefficients of the step producing `s(n+1)`.
    pub fn step(&self, n: u64) -> StepCoefficients {
        let n = n as i128;
        match *self {
            RecurrenceParams::Cubic { a, b, c, d } => {
                let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
                StepCoefficients {
                    lead: (n + 1).pow(3),
                    mid: (2 * n + 1) * (a * n * n + a * n + b),
                    back: n * (c * n * n + d),
                }
            }
            RecurrenceParams::Quadratic { a, b, c } => {
                let (a, b, c) = (a as i128, b as i128, c as i128);
                StepCoefficients {
                    lead: (n + 1).pow(2),
                    mid: a * n * n + a * n + b,
                    back: c * n * n,
                }
            }
        }
    }
}

impl fmt::Display for RecurrenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurrenceParams::Cubic { a, b, c, d } => write!(f, "cubic({a}, {b}, {c}, {d})"),
            RecurrenceParams::Quadratic { a, b, c } => write!(f, "quadratic({a}, {b}, {c})"),
        }
    }
}

/// `s(0), ..., s(n_max)` as exact rationals; integrality is not assumed.
pub fn recur_eval(params: RecurrenceParams, n_max: u64) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let mut prev = BigRational::zero();
    let mut cur = BigRational::one();
    out.push(cur.clone());
    for n in 0..n_max {
        let st = params.step(n);
        let next =
            (&cur * BigInt::from(st.mid) - &prev * BigInt::from(st.back)) / BigInt::from(st.lead);
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}
