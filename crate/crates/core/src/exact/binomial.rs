use std::cell::RefCell;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

static CACHE_LIMIT: AtomicUsize = AtomicUsize::new(100_000);

thread_local! {
    // Grown lazily; each worker thread owns its own table.
    static FACTORIALS: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
}

/// Largest `n` whose factorial may be memoized.
pub fn factorial_cache_limit() -> usize {
    CACHE_LIMIT.load(Ordering::Relaxed)
}

/// Change the memoization bound. Values already cached are kept.
pub fn set_factorial_cache_limit(limit: usize) {
    CACHE_LIMIT.store(limit, Ordering::Relaxed);
}

fn with_factorials<R>(n: usize, f: impl FnOnce(&[BigInt]) -> R) -> Option<R> {
    if n > factorial_cache_limit() {
        return None;
    }
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() <= n {
            let next = table.last().unwrap() * table.len();
            table.push(next);
        }
        Some(f(&table))
    })
}

fn product_range(lo: u64, hi: u64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn factorial(n: u64) -> BigInt {
    with_factorials(n as usize, |t| t[n as usize].clone()).unwrap_or_else(|| product_range(2, n))
}

fn binom_nonneg(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return BigInt::one();
    }
    let (nu, ku) = (n as usize, k as usize);
    let cached = with_factorials(nu, |t| &t[nu] / (&t[ku] * &t[nu - ku]));
    cached.unwrap_or_else(|| {
        let mut acc = BigInt::one();
        for i in 1..=k {
            acc = acc * (n - k + i) / i;
        }
        acc
    })
}

/// Combinatorial binomial coefficient: `n!/(k!(n-k)!)` for `0 <= k <= n`,
/// zero for any other `k`. Negative `n` is rejected.
pub fn binom_comb(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeUpperIndex(n));
    }
    Ok(binom_zero(n, k))
}

/// Combinatorial binomial that is also zero for a negative upper index.
///
/// This is the convention under which all the sequence sums are evaluated.
pub fn binom_zero(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binom_nonneg(n as u64, k as u64)
    }
}

/// Generalized binomial `x(x-1)...(x-k+1)/k!` for an integer `x` of any sign.
pub fn binom_gen_int(x: &BigInt, k: u64) -> BigInt {
    if x.sign() != num_bigint::Sign::Minus {
        if let Ok(n) = u64::try_from(x) {
            return binom_nonneg(n, k);
        }
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= x - i;
    }
    num / factorial(k)
}

/// Generalized binomial `x(x-1)...(x-k+1)/k!` for a rational `x`.
pub fn binom_gen(x: &BigRational, k: u64) -> BigRational {
    if x.is_integer() {
        return BigRational::from_integer(binom_gen_int(x.numer(), k));
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= x - BigInt::from(i);
    }
    acc / BigRational::from_integer(factorial(k))
}

/// Super Catalan number `(2m)!(2n)!/(m! n! (m+n)!)`.
pub fn super_catalan(m: u64, n: u64) -> BigInt {
    factorial(2 * m) * factorial(2 * n) / (factorial(m) * factorial(n) * factorial(m + n))
}
