//! Closed-form (binomial sum) evaluation of every sequence.
//!
//! All binomials use the combinatorial convention: zero unless
//! `0 <= k <= n`, including for negative `n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SequenceId;
use crate::exact::{binom_zero, factorial};

fn c(n: i64, k: i64) -> BigInt {
    binom_zero(n, k)
}

fn pw(x: BigInt, e: u32) -> BigInt {
    num_traits::pow(x, e as usize)
}

fn sign(k: u64) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(3k)! / k!^3`
fn trinomial(k: u64) -> BigInt {
    factorial(3 * k) / pw(factorial(k), 3)
}

/// Summand `C(n,k)^A C(n+k,k)^B C(2k,n)^C` of the S-family.
pub fn s_family_term(n: u64, k: u64, a: u32, b: u32, cc: u32) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let mut t = pw(c(n, k), a);
    if t.is_zero() {
        return t;
    }
    if cc > 0 {
        t *= pw(c(2 * k, n), cc);
        if t.is_zero() {
            return t;
        }
    }
    t * pw(c(n + k, k), b)
}

/// Summand of the T-family; `D(n,k)` of s18 when every exponent is 1.
pub fn t_family_term(n: u64, k: u64, a: u32, b: u32, cc: u32, d: u32, e: u32) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let head = pw(c(n, k), a);
    if head.is_zero() {
        return head;
    }
    let bracket = pw(c(2 * n - 3 * k - 1, n), d) + pw(c(2 * n - 3 * k, n), e);
    let t = head * pw(c(2 * k, k), b) * pw(c(2 * (n - k), n - k), cc) * bracket;
    if k % 2 == 0 {
        t
    } else {
        -t
    }
}

/// Summand `D(n,k)` of s18.
pub fn s18_term(n: u64, k: u64) -> BigInt {
    t_family_term(n, k, 1, 1, 1, 1, 1)
}

/// Summand of `Z(n)`, the sequence labelled (η).
pub fn z_term(n: u64, k: u64) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let head = pw(c(n, k), 3);
    if head.is_zero() {
        return head;
    }
    let t = head * (c(4 * n - 5 * k - 1, 3 * n) + c(4 * n - 5 * k, 3 * n));
    if k % 2 == 0 {
        t
    } else {
        -t
    }
}

/// `S(n; A, B, C) = sum_k C(n,k)^A C(n+k,k)^B C(2k,n)^C`.
pub fn eval_s(n: u64, a: u32, b: u32, cc: u32) -> BigInt {
    (0..=n).map(|k| s_family_term(n, k, a, b, cc)).sum()
}

/// `T(n; A, B, C, D, E)`, summed over `0 <= k <= n/3`, with `T(0) = 1`.
pub fn eval_t(n: u64, a: u32, b: u32, cc: u32, d: u32, e: u32) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (0..=n / 3)
        .map(|k| t_family_term(n, k, a, b, cc, d, e))
        .sum()
}

/// `u^eps_{a,b}(n) = sum_k (-1)^(eps k) C(n,k)^a C(2n,k)^b`.
pub fn eval_u(n: u64, eps: u8, a: u32, b: u32) -> BigInt {
    let ni = n as i64;
    (0..=ni)
        .map(|k| {
            let t = pw(c(ni, k), a) * pw(c(2 * ni, k), b);
            if eps == 1 && k % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `Z(n)` with `Z(0) = 1`.
pub fn eval_z(n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (0..=n).map(|k| z_term(n, k)).sum()
}

fn franel(n: u64) -> BigInt {
    eval_s(n, 3, 0, 0)
}

fn eval_s_simple(n: u64, term: impl Fn(u64) -> BigInt) -> BigInt {
    (0..=n).map(term).sum()
}

/// `sum_k (-1)^k 3^(n-3k) C(n,3k) C(n+k,n)^shift (3k)!/k!^3`.
fn cubic_trinomial_sum(n: u64, with_shift: bool) -> BigInt {
    let ni = n as i64;
    (0..=n / 3)
        .map(|k| {
            let ki = k as i64;
            let mut t = pw(BigInt::from(3), (n - 3 * k) as u32) * c(ni, 3 * ki) * trinomial(k);
            if with_shift {
                t *= c(ni + ki, ni);
            }
            t * sign(k)
        })
        .sum()
}

fn zeta_sum(n: u64) -> BigInt {
    let ni = n as i64;
    let mut acc = BigInt::zero();
    for k in 0..=ni {
        let head = pw(c(ni, k), 2);
        // C(k,l) vanishes for l > k and C(k+l,n) for k + l < n
        for l in (ni - k).max(0)..=k {
            acc += &head * c(ni, l) * c(k, l) * c(k + l, ni);
        }
    }
    acc
}

/// Exact value of sequence `id` at `n`.
pub fn eval_catalog(id: SequenceId, n: u64) -> BigInt {
    let ni = n as i64;
    match id {
        SequenceId::Apery | SequenceId::AvszGamma => eval_s(n, 2, 2, 0),
        SequenceId::ZagierA => franel(n),
        SequenceId::ZagierB => cubic_trinomial_sum(n, false),
        SequenceId::ZagierC => eval_s_simple(n, |k| {
            let k = k as i64;
            pw(c(ni, k), 2) * c(2 * k, k)
        }),
        SequenceId::ZagierD => eval_s(n, 2, 1, 0),
        SequenceId::ZagierE => eval_s_simple(n, |k| {
            let k = k as i64;
            c(ni, k) * c(2 * k, k) * c(2 * (ni - k), ni - k)
        }),
        SequenceId::ZagierF => eval_s_simple(n, |k| {
            let t = pw(BigInt::from(8), (n - k) as u32) * c(ni, k as i64) * franel(k);
            t * sign(k)
        }),
        SequenceId::AvszDelta => cubic_trinomial_sum(n, true),
        SequenceId::AvszEta => eval_z(n),
        SequenceId::AvszAlpha => eval_s_simple(n, |k| {
            let k = k as i64;
            pw(c(ni, k), 2) * c(2 * k, k) * c(2 * (ni - k), ni - k)
        }),
        SequenceId::AvszEpsilon => eval_s(n, 2, 0, 2),
        SequenceId::AvszZeta => zeta_sum(n),
        SequenceId::S10 => eval_s(n, 4, 0, 0),
        SequenceId::S7 => eval_s(n, 2, 1, 1),
        SequenceId::S18 => eval_t(n, 1, 1, 1, 1, 1),
        SequenceId::SFamily { a, b, c } => eval_s(n, a, b, c),
        SequenceId::TFamily { a, b, c, d, e } => eval_t(n, a, b, c, d, e),
        SequenceId::UFamily { eps, a, b } => eval_u(n, eps, a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::super_catalan;

    fn vals(id: SequenceId, upto: u64) -> Vec<i64> {
        (0..=upto)
            .map(|n| i64::try_from(&eval_catalog(id, n)).unwrap())
            .collect()
    }

    #[test]
    fn catalog_examples() {
        assert_eq!(vals(SequenceId::Apery, 3), [1, 5, 73, 1445]);
        assert_eq!(vals(SequenceId::S18, 4), [1, 6, 54, 564, 6390]);
        assert_eq!(eval_catalog(SequenceId::ZagierA, 2), 10.into());
        assert_eq!(vals(SequenceId::S7, 3), [1, 4, 48, 760]);
        assert_eq!(vals(SequenceId::ZagierB, 5), [1, 3, 9, 21, 9, -297]);
        assert_eq!(vals(SequenceId::AvszDelta, 5), [1, 3, 9, 3, -279, -2997]);
        assert_eq!(vals(SequenceId::AvszEta, 4), [1, 5, 35, 275, 2275]);
        assert_eq!(vals(SequenceId::AvszZeta, 4), [1, 3, 27, 309, 4059]);
        assert_eq!(vals(SequenceId::ZagierF, 4), [1, 6, 42, 312, 2394]);
    }

    #[test]
    fn family_examples() {
        assert_eq!(eval_s(1, 2, 1, 1), 4.into());
        assert_eq!(eval_s(0, 5, 3, 7), 1.into());
        assert_eq!(eval_t(1, 1, 1, 1, 1, 1), 6.into());
        assert_eq!(eval_t(0, 3, 0, 2, 0, 0), 1.into());
        assert_eq!(eval_u(1, 1, 1, 1), (-1).into());
        assert_eq!(eval_u(2, 1, 1, 1), (-1).into());
        assert_eq!(eval_u(0, 0, 4, 2), 1.into());
    }

    #[test]
    fn s18_summand_through_super_catalan() {
        // C(2k,k) C(2(n-k),n-k) = C(n,k) S(n-k,k)
        for n in 1..30u64 {
            for k in 0..=n / 3 {
                let ni = n as i64;
                let ki = k as i64;
                let alt = pw(c(ni, ki), 2)
                    * super_catalan(n - k, k)
                    * (c(2 * ni - 3 * ki - 1, ni) + c(2 * ni - 3 * ki, ni))
                    * sign(k);
                assert_eq!(s18_term(n, k), alt, "n={n} k={k}");
            }
        }
    }
}
