//! Integrality search over the parameters of the cubic and quadratic
//! three-term recurrences.
//!
//! A tuple is a hit when `s(1), ..., s(n_max)` are all integers. Each tuple
//! is first stepped in checked `i128` arithmetic, where the overwhelming
//! majority fail within a few terms; survivors whose values outgrow `i128`
//! continue in big integers. Either way a step is accepted only if the
//! leading coefficient divides the numerator exactly, so a rejection means
//! the rational value of `s(n)` is genuinely non-integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::sequences::catalog;
use crate::sequences::RecurrenceParams;

/// Inclusive integer interval, written `lo..hi` (or a single integer).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Parse(format!("empty range {lo}..{hi}")));
        }
        Ok(IntRange { lo, hi })
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |e: std::num::ParseIntError| Error::Parse(format!("bad range `{s}`: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                IntRange::new(
                    lo.trim().parse().map_err(bad)?,
                    hi.trim().parse().map_err(bad)?,
                )
            }
            None => {
                let v = s.trim().parse().map_err(bad)?;
                IntRange::new(v, v)
            }
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// A tuple whose recurrence stayed integral through `n_checked`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub params: RecurrenceParams,
    pub n_checked: u64,
    pub known_label: Option<String>,
}

/// Result of stepping one recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrality {
    Integral,
    /// `s(n)` is the first non-integral value.
    FailsAt(u64),
}

fn big_tail(
    params: RecurrenceParams,
    from: u64,
    n_max: u64,
    prev: BigInt,
    cur: BigInt,
) -> Integrality {
    let (mut prev, mut cur) = (prev, cur);
    for n in from..n_max {
        let st = params.step(n);
        let num = &cur * st.mid - &prev * st.back;
        let (q, rem) = num.div_rem(&BigInt::from(st.lead));
        if !rem.is_zero() {
            return Integrality::FailsAt(n + 1);
        }
        prev = std::mem::replace(&mut cur, q);
    }
    Integrality::Integral
}

/// Whether `s(1..=n_max)` are all integers.
pub fn integrality(params: RecurrenceParams, n_max: u64) -> Integrality {
    let (mut prev, mut cur): (i128, i128) = (0, 1);
    for n in 0..n_max {
        let st = params.step(n);
        let num = cur
            .checked_mul(st.mid)
            .and_then(|x| prev.checked_mul(st.back).and_then(|y| x.checked_sub(y)));
        match num {
            Some(num) => {
                if num % st.lead != 0 {
                    return Integrality::FailsAt(n + 1);
                }
                prev = cur;
                cur = num / st.lead;
            }
            None => return big_tail(params, n, n_max, prev.into(), cur.into()),
        }
    }
    Integrality::Integral
}

fn hit_for(params: RecurrenceParams, n_max: u64, deep: bool) -> Option<SearchHit> {
    if integrality(params, n_max) != Integrality::Integral {
        return None;
    }
    let n_checked = if deep {
        if integrality(params, 2 * n_max) != Integrality::Integral {
            return None;
        }
        2 * n_max
    } else {
        n_max
    };
    Some(SearchHit {
        params,
        n_checked,
        known_label: catalog::label_for(params).map(str::to_string),
    })
}

fn check_depth(n_max: u64) -> Result<()> {
    if n_max < 10 {
        return Err(Error::HypothesisViolated(format!("n_max = {n_max} < 10")));
    }
    Ok(())
}

/// All `(a, b, c, d)` in the box for which the cubic recurrence is integral
/// through `n_max` (through `2 n_max` when `deep`), sorted.
pub fn search_cubic(
    a: IntRange,
    b: IntRange,
    c: IntRange,
    d: IntRange,
    n_max: u64,
    deep: bool,
    exec: Exec,
) -> Result<Vec<SearchHit>> {
    check_depth(n_max)?;
    let slabs: Vec<(i64, i64, i64)> = a
        .iter()
        .flat_map(|a| b.iter().flat_map(move |b| c.iter().map(move |c| (a, b, c))))
        .collect();
    let per_slab = exec.map(&slabs, |&(a, b, c)| {
        d.iter()
            .filter_map(|d| hit_for(RecurrenceParams::cubic(a, b, c, d), n_max, deep))
            .collect::<Vec<_>>()
    });
    let mut hits: Vec<SearchHit> = per_slab.into_iter().flatten().collect();
    hits.sort_by_key(|h| h.params);
    Ok(hits)
}

/// All `(a, b, c)` in the box for which the quadratic recurrence is integral.
pub fn search_quadratic(
    a: IntRange,
    b: IntRange,
    c: IntRange,
    n_max: u64,
    deep: bool,
    exec: Exec,
) -> Result<Vec<SearchHit>> {
    check_depth(n_max)?;
    let slabs: Vec<(i64, i64)> = a
        .iter()
        .flat_map(|a| b.iter().map(move |b| (a, b)))
        .collect();
    let per_slab = exec.map(&slabs, |&(a, b)| {
        c.iter()
            .filter_map(|c| hit_for(RecurrenceParams::quadratic(a, b, c), n_max, deep))
            .collect::<Vec<_>>()
    });
    let mut hits: Vec<SearchHit> = per_slab.into_iter().flatten().collect();
    hits.sort_by_key(|h| h.params);
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::recur_eval;

    fn r(s: &str) -> IntRange {
        s.parse().unwrap()
    }

    #[test]
    fn ranges_parse() {
        assert_eq!(r("-3..4"), IntRange { lo: -3, hi: 4 });
        assert_eq!(r("-3..=4"), IntRange { lo: -3, hi: 4 });
        assert_eq!(r("7"), IntRange { lo: 7, hi: 7 });
        assert!("4..3".parse::<IntRange>().is_err());
        assert!("x..3".parse::<IntRange>().is_err());
        assert_eq!(r("-2..2").len(), 5);
    }

    #[test]
    fn integrality_matches_rational_recurrence() {
        let p = RecurrenceParams::cubic(14, 6, -192, 12);
        assert_eq!(integrality(p, 20), Integrality::FailsAt(4));
        assert!(!recur_eval(p, 4)[4].is_integer());
        assert_eq!(
            integrality(RecurrenceParams::cubic(17, 5, 1, 0), 120),
            Integrality::Integral
        );
    }

    #[test]
    fn finds_known_tuples() {
        let hits = search_cubic(
            r("13"),
            r("4"),
            r("-30..-20"),
            r("0..5"),
            30,
            false,
            Exec::default(),
        )
        .unwrap();
        let s7 = hits
            .iter()
            .find(|h| h.params == RecurrenceParams::cubic(13, 4, -27, 3))
            .expect("s7 tuple");
        assert_eq!(s7.known_label.as_deref(), Some("s7"));
        let hits =
            search_quadratic(r("7"), r("2"), r("-10..10"), 30, true, Exec::default()).unwrap();
        let a = hits
            .iter()
            .find(|h| h.params == RecurrenceParams::quadratic(7, 2, -8))
            .expect("Zagier A");
        assert_eq!(a.n_checked, 60);
        assert_eq!(a.known_label.as_deref(), Some("Zagier A"));
        assert!(search_quadratic(r("7"), r("2"), r("-8"), 5, false, Exec::default()).is_err());
    }
}
