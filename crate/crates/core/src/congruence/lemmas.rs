//! Checkable forms of the binomial congruences behind the main theorems.
//!
//! Each predicate evaluates both sides exactly and reports the p-adic
//! valuation of their difference against the claimed exponent. Ratio
//! congruences `x / y ≡ 1 (mod p^t)` are checked as
//! `v_p(x - y) >= t + v_p(y)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    binom_gen_int, binom_zero, pow_big, pow_u64, valuation, valuation_diff, vp_int, Prime,
    Valuation,
};
use crate::par::Exec;
use crate::sequences::{s18_term, s_family_term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// `C(p^r a, p^s b) / C(p^(r-1) a, p^(s-1) b) ≡ 1 (mod p^(r+s+min(r,s)))`
    Jacobsthal,
    /// `sum' k^n ≡ 0 (mod p^r)` over `1 <= k < p^r`
    PowerSum,
    /// `sum' k^(-n) ≡ 0 (mod p^r)` over `1 <= k <= (p^r - 1)/2`
    PowerSumHalf,
    /// S-family summand index reduction, modulo `p^(3r)`
    SummandB,
    /// `(-1)^k C(m p^r - 1, k) ≡ (-1)^[k/p] C(m p^(r-1) - 1, [k/p]) (mod p^r)`
    BinomialIndex,
    /// reduction of `C(n-1,k)^A C(n+k,k)^B C(j,n)^C`, modulo `p^r`
    SummandC,
    /// `sum'_k B(m p^r, k) ≡ 0 (mod p^(3r))`
    G0,
    /// s18 summand index reduction
    SummandD,
}

impl Lemma {
    pub const ALL: [Lemma; 8] = [
        Lemma::Jacobsthal,
        Lemma::PowerSum,
        Lemma::PowerSumHalf,
        Lemma::SummandB,
        Lemma::BinomialIndex,
        Lemma::SummandC,
        Lemma::G0,
        Lemma::SummandD,
    ];
}

/// One evaluated instance of a lemma-level congruence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    /// Lemma parameters in the order of the predicate's arguments.
    pub params: Vec<i64>,
    pub p: u64,
    pub claimed_exponent: i64,
    pub observed_valuation: Valuation,
    pub pass: bool,
}

impl LemmaCheck {
    fn new(lemma: Lemma, params: Vec<i64>, p: u64, claimed: i64, observed: Valuation) -> Self {
        LemmaCheck {
            lemma,
            params,
            p,
            claimed_exponent: claimed,
            observed_valuation: observed,
            pass: observed.at_least(claimed),
        }
    }
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(msg()))
    }
}

fn signed(x: BigInt, odd: bool) -> BigInt {
    if odd {
        -x
    } else {
        x
    }
}

/// Jacobsthal's congruence for `p >= 5`, any integers `a`, `b >= 0`.
pub fn jacobsthal_check(a: i64, b: i64, r: u32, s: u32, p: Prime) -> Result<LemmaCheck> {
    let pv = p.get();
    need(pv >= 5, || {
        format!("Jacobsthal congruence needs p >= 5, got {pv}")
    })?;
    need(r >= 1 && s >= 1, || "r, s must be positive".into())?;
    if b < 0 {
        return Err(Error::Degenerate("negative lower index".into()));
    }
    let top_hi = pow_big(pv, r) * a;
    let top_lo = pow_big(pv, r - 1) * a;
    let bot_hi = pow_u64(pv, s) * b as u64;
    let bot_lo = pow_u64(pv, s - 1) * b as u64;
    let num = binom_gen_int(&top_hi, bot_hi);
    let den = binom_gen_int(&top_lo, bot_lo);
    if den.is_zero() {
        return Err(Error::Degenerate(format!("C({top_lo}, {bot_lo}) = 0")));
    }
    let claimed = (r + s + r.min(s)) as i64 + vp_int(&den, pv)? as i64;
    Ok(LemmaCheck::new(
        Lemma::Jacobsthal,
        vec![a, b, r as i64, s as i64],
        pv,
        claimed,
        valuation_diff(&num, &den, pv),
    ))
}

/// Power-sum congruence. `half = false`: `sum' k^n` over `1 <= k < p^r`
/// with `n ≢ 0 (mod p-1)`. `half = true`: `sum' 1/k^n` over
/// `1 <= k <= (p^r-1)/2` for even `n` and `p >= 5`.
pub fn power_sum_check(n: i64, p: Prime, r: u32, half: bool) -> Result<LemmaCheck> {
    let pv = p.get();
    need(n.rem_euclid(pv as i64 - 1) != 0, || {
        format!("n = {n} is divisible by p - 1 = {}", pv - 1)
    })?;
    need(r >= 1, || "r must be positive".into())?;
    if half {
        need(n % 2 == 0, || {
            format!("half-range sum needs even n, got {n}")
        })?;
        need(pv >= 5, || format!("half-range sum needs p >= 5, got {pv}"))?;
    }
    let modulus = pow_u64(pv, r);
    let (upper, exponent) = if half {
        ((modulus - 1) / 2, -n)
    } else {
        (modulus - 1, n)
    };
    let mut sum = BigRational::zero();
    for k in (1..=upper).filter(|k| k % pv != 0) {
        let kp = num_traits::pow(BigInt::from(k), exponent.unsigned_abs() as usize);
        sum += if exponent >= 0 {
            BigRational::from_integer(kp)
        } else {
            BigRational::new(BigInt::one(), kp)
        };
    }
    let lemma = if half {
        Lemma::PowerSumHalf
    } else {
        Lemma::PowerSum
    };
    Ok(LemmaCheck::new(
        lemma,
        vec![n, r as i64],
        pv,
        r as i64,
        valuation(&sum, pv),
    ))
}

/// `B(n p^r, k p^s) ≡ B(n p^(r-1), k p^(s-1)) (mod p^(3r))` with
/// `B(n,k) = C(n,k)^A C(n+k,k)^B C(2k,n)^C`, for `p >= 5`, `A >= 2`, `p ∤ k`.
#[allow(clippy::too_many_arguments)]
pub fn lemma_b_check(
    n: u64,
    k: u64,
    a: u32,
    b: u32,
    c: u32,
    r: u32,
    s: u32,
    p: Prime,
) -> Result<LemmaCheck> {
    let pv = p.get();
    need(pv >= 5, || format!("needs p >= 5, got {pv}"))?;
    need(a >= 2, || format!("needs A >= 2, got {a}"))?;
    need(!k.is_multiple_of(pv), || {
        format!("p = {pv} divides k = {k}")
    })?;
    need(n >= 1 && k >= 1 && r >= 1 && s >= 1, || {
        "n, k, r, s must be positive".into()
    })?;
    let hi = s_family_term(n * pow_u64(pv, r), k * pow_u64(pv, s), a, b, c);
    let lo = s_family_term(n * pow_u64(pv, r - 1), k * pow_u64(pv, s - 1), a, b, c);
    Ok(LemmaCheck::new(
        Lemma::SummandB,
        vec![
            n as i64, k as i64, a as i64, b as i64, c as i64, r as i64, s as i64,
        ],
        pv,
        3 * r as i64,
        valuation_diff(&hi, &lo, pv),
    ))
}

/// Binomial index reduction modulo `p^r`, generalized binomials throughout.
pub fn lemma_binomind_check(m: i64, k: u64, r: u32, p: Prime) -> Result<LemmaCheck> {
    let pv = p.get();
    need(r >= 1, || "r must be positive".into())?;
    let kq = k / pv;
    let lhs = signed(binom_gen_int(&(pow_big(pv, r) * m - 1), k), k % 2 == 1);
    let rhs = signed(
        binom_gen_int(&(pow_big(pv, r - 1) * m - 1), kq),
        kq % 2 == 1,
    );
    Ok(LemmaCheck::new(
        Lemma::BinomialIndex,
        vec![m, k as i64, r as i64],
        pv,
        r as i64,
        valuation_diff(&lhs, &rhs, pv),
    ))
}

/// `C(n,k,j) = C(n-1,k)^A C(n+k,k)^B C(j,n)^C` with the generalized
/// binomial in the first factor (so `n = 0` is allowed).
pub fn c_term(n: u64, k: u64, j: u64, a: u32, b: u32, c: u32) -> BigInt {
    let first = binom_gen_int(&(BigInt::from(n) - 1), k);
    num_traits::pow(first, a as usize)
        * num_traits::pow(binom_zero((n + k) as i64, k as i64), b as usize)
        * num_traits::pow(binom_zero(j as i64, n as i64), c as usize)
}

/// `C(n p^r, k, j) ≡ (-1)^((k + [k/p]) A) C(n p^(r-1), [k/p], [j/p]) (mod p^r)`.
#[allow(clippy::too_many_arguments)]
pub fn lemma_c_check(
    n: u64,
    k: u64,
    j: u64,
    a: u32,
    b: u32,
    c: u32,
    r: u32,
    p: Prime,
) -> Result<LemmaCheck> {
    let pv = p.get();
    need(r >= 1, || "r must be positive".into())?;
    let lhs = c_term(n * pow_u64(pv, r), k, j, a, b, c);
    let sign_odd = ((k + k / pv) * a as u64) % 2 == 1;
    let rhs = signed(
        c_term(n * pow_u64(pv, r - 1), k / pv, j / pv, a, b, c),
        sign_odd,
    );
    Ok(LemmaCheck::new(
        Lemma::SummandC,
        vec![
            n as i64, k as i64, j as i64, a as i64, b as i64, c as i64, r as i64,
        ],
        pv,
        r as i64,
        valuation_diff(&lhs, &rhs, pv),
    ))
}

/// `sum'_{1 <= k <= m p^r} B(m p^r, k) ≡ 0 (mod p^(3r))` for `p >= 5`, `A >= 2`.
pub fn g0_divisibility_check(
    m: u64,
    r: u32,
    p: Prime,
    a: u32,
    b: u32,
    c: u32,
) -> Result<LemmaCheck> {
    let pv = p.get();
    need(pv >= 5, || format!("needs p >= 5, got {pv}"))?;
    need(a >= 2, || format!("needs A >= 2, got {a}"))?;
    need(m >= 1 && r >= 1, || "m, r must be positive".into())?;
    let n = m * pow_u64(pv, r);
    let sum: BigInt = (1..=n)
        .filter(|k| k % pv != 0)
        .map(|k| s_family_term(n, k, a, b, c))
        .sum();
    Ok(LemmaCheck::new(
        Lemma::G0,
        vec![m as i64, r as i64, a as i64, b as i64, c as i64],
        pv,
        3 * r as i64,
        crate::exact::valuation_int(&sum, pv),
    ))
}

/// Exponent to which the s18 summand reduction is claimed:
/// `3r` for `p >= 5`, `3r - 1` for `p = 3`, `2r` for `p = 2`.
pub fn summand_d_exponent(p: u64, r: u32) -> i64 {
    let r = r as i64;
    match p {
        2 => 2 * r,
        3 => 3 * r - 1,
        _ => 3 * r,
    }
}

/// `D(m p^r, k p^s) ≡ D(m p^(r-1), k p^(s-1))` for `p ∤ k`, where `D` is the
/// s18 summand. Indices with `3 k p^s > m p^r` compare two zeros.
pub fn summand_d_check(m: u64, k: u64, r: u32, s: u32, p: Prime) -> Result<LemmaCheck> {
    let pv = p.get();
    need(!k.is_multiple_of(pv), || {
        format!("p = {pv} divides k = {k}")
    })?;
    need(m >= 1 && k >= 1 && r >= 1 && s >= 1, || {
        "m, k, r, s must be positive".into()
    })?;
    let hi = s18_term(m * pow_u64(pv, r), k * pow_u64(pv, s));
    let lo = s18_term(m * pow_u64(pv, r - 1), k * pow_u64(pv, s - 1));
    Ok(LemmaCheck::new(
        Lemma::SummandD,
        vec![m as i64, k as i64, r as i64, s as i64],
        pv,
        summand_d_exponent(pv, r),
        valuation_diff(&hi, &lo, pv),
    ))
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())]
}

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

/// Parameters of one randomized lemma instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaInstance {
    Jacobsthal {
        a: i64,
        b: i64,
        r: u32,
        s: u32,
        p: u64,
    },
    PowerSum {
        n: i64,
        p: u64,
        r: u32,
        half: bool,
    },
    SummandB {
        n: u64,
        k: u64,
        abc: [u32; 3],
        r: u32,
        s: u32,
        p: u64,
    },
    BinomialIndex {
        m: i64,
        k: u64,
        r: u32,
        p: u64,
    },
    SummandC {
        n: u64,
        k: u64,
        j: u64,
        abc: [u32; 3],
        r: u32,
        p: u64,
    },
    G0 {
        m: u64,
        r: u32,
        p: u64,
        abc: [u32; 3],
    },
    SummandD {
        m: u64,
        k: u64,
        r: u32,
        s: u32,
        p: u64,
    },
}

impl LemmaInstance {
    pub fn evaluate(&self) -> Result<LemmaCheck> {
        match *self {
            LemmaInstance::Jacobsthal { a, b, r, s, p } => jacobsthal_check(a, b, r, s, prime(p)),
            LemmaInstance::PowerSum { n, p, r, half } => power_sum_check(n, prime(p), r, half),
            LemmaInstance::SummandB {
                n,
                k,
                abc: [a, b, c],
                r,
                s,
                p,
            } => lemma_b_check(n, k, a, b, c, r, s, prime(p)),
            LemmaInstance::BinomialIndex { m, k, r, p } => lemma_binomind_check(m, k, r, prime(p)),
            LemmaInstance::SummandC {
                n,
                k,
                j,
                abc: [a, b, c],
                r,
                p,
            } => lemma_c_check(n, k, j, a, b, c, r, prime(p)),
            LemmaInstance::G0 {
                m,
                r,
                p,
                abc: [a, b, c],
            } => g0_divisibility_check(m, r, prime(p), a, b, c),
            LemmaInstance::SummandD { m, k, r, s, p } => summand_d_check(m, k, r, s, prime(p)),
        }
    }
}

/// Draw one instance of `lemma` inside its hypotheses. Draws that would be
/// degenerate (zero denominators, `p | k`) are redrawn.
pub fn sample_instance(lemma: Lemma, rng: &mut ChaCha8Rng) -> LemmaInstance {
    loop {
        let inst = match lemma {
            Lemma::Jacobsthal => {
                let a = rng.gen_range(-6..=6);
                if a == 0 {
                    continue;
                }
                LemmaInstance::Jacobsthal {
                    a,
                    b: rng.gen_range(0..=4),
                    r: rng.gen_range(1..=2),
                    s: rng.gen_range(1..=2),
                    p: pick(rng, &[5, 7, 11, 13]),
                }
            }
            Lemma::PowerSum | Lemma::PowerSumHalf => {
                let half = lemma == Lemma::PowerSumHalf;
                let p = if half {
                    pick(rng, &[5, 7, 11, 13])
                } else {
                    pick(rng, &[2, 3, 5, 7, 11, 13])
                };
                let r = if p <= 3 {
                    rng.gen_range(1..=4)
                } else {
                    rng.gen_range(1..=2)
                };
                let n: i64 = rng.gen_range(-8..=8);
                if p > 2 && n.rem_euclid(p as i64 - 1) == 0 || (half && n % 2 != 0) {
                    continue;
                }
                // p = 2: every n is ≡ 0 mod 1, never admissible
                if p == 2 {
                    continue;
                }
                LemmaInstance::PowerSum { n, p, r, half }
            }
            Lemma::SummandB => {
                let p = pick(rng, &[5, 7, 11]);
                let k = rng.gen_range(1..=6);
                if k % p == 0 {
                    continue;
                }
                LemmaInstance::SummandB {
                    n: rng.gen_range(1..=3),
                    k,
                    abc: [
                        rng.gen_range(2..=3),
                        rng.gen_range(0..=2),
                        rng.gen_range(0..=2),
                    ],
                    r: rng.gen_range(1..=2),
                    s: rng.gen_range(1..=2),
                    p,
                }
            }
            Lemma::BinomialIndex => {
                let p = pick(rng, &[2, 3, 5, 7, 11]);
                let r = rng.gen_range(1..=3);
                if pow_u64(p, r) > 400 {
                    continue;
                }
                LemmaInstance::BinomialIndex {
                    m: rng.gen_range(-5..=5),
                    k: rng.gen_range(0..=60),
                    r,
                    p,
                }
            }
            Lemma::SummandC => LemmaInstance::SummandC {
                n: rng.gen_range(0..=3),
                k: rng.gen_range(0..=40),
                j: rng.gen_range(0..=60),
                abc: [
                    rng.gen_range(0..=3),
                    rng.gen_range(0..=3),
                    rng.gen_range(0..=3),
                ],
                r: rng.gen_range(1..=2),
                p: pick(rng, &[2, 3, 5, 7]),
            },
            Lemma::G0 => {
                let p = pick(rng, &[5, 7, 11]);
                let r = if p == 11 { 1 } else { rng.gen_range(1..=2) };
                LemmaInstance::G0 {
                    m: rng.gen_range(1..=3),
                    r,
                    p,
                    abc: [
                        rng.gen_range(2..=3),
                        rng.gen_range(0..=2),
                        rng.gen_range(0..=2),
                    ],
                }
            }
            Lemma::SummandD => {
                let p = pick(rng, &[2, 3, 5, 7]);
                let r = rng.gen_range(1..=3);
                let s = rng.gen_range(1..=r);
                let m = rng.gen_range(1..=6);
                let k = rng.gen_range(1..=8);
                let n = m * pow_u64(p, r);
                // keep instances where the summand is not identically zero
                if k % p == 0 || 3 * k * pow_u64(p, s) > n || n > 400 {
                    continue;
                }
                LemmaInstance::SummandD { m, k, r, s, p }
            }
        };
        if inst.evaluate().is_ok() {
            return inst;
        }
    }
}

/// `count` randomized instances of `lemma`, reproducible from `seed`.
pub fn lemma_suite(lemma: Lemma, count: usize, seed: u64, exec: Exec) -> Vec<LemmaCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (lemma as u64).wrapping_mul(0x9E37_79B9));
    let instances: Vec<LemmaInstance> = (0..count)
        .map(|_| sample_instance(lemma, &mut rng))
        .collect();
    exec.map(&instances, |i| {
        i.evaluate().expect("sampled inside hypotheses")
    })
}
