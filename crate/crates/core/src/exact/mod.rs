//! Exact arithmetic: binomials under both conventions, factorials,
//! p-adic valuations and residues modulo prime powers.

mod binomial;
pub mod decimal;
mod prime;
mod residue;
mod valuation;

pub use binomial::{
    binom_comb, binom_gen, binom_gen_int, binom_zero, factorial, factorial_cache_limit,
    set_factorial_cache_limit, super_catalan,
};
pub use prime::{is_prime, Prime};
pub use residue::{unit_inverse, PrimePowerResidue};
pub use valuation::{valuation, valuation_diff, valuation_int, vp, vp_int, Valuation};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// `base^exp` as a big integer.
pub fn pow_big(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `base^exp` in native integers; panics on overflow.
pub fn pow_u64(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("prime power overflows u64")
}
