use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use supercong::analytic::*;
use supercong::exact::{is_prime, Prime, PrimePowerResidue};

/// Euler's pentagonal series for `∏ (1 - x^n)` through `x^len-1`.
fn pentagonal(len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for k in 0i64.. {
        let mut any = false;
        for j in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e = (j * (3 * j - 1) / 2) as usize;
            if e < len {
                out[e] += if j % 2 == 0 { 1 } else { -1 };
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    out
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len()];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().take(a.len() - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Independent oracle: `q P(q^2)^4 P(q^4)^4` with `P` the pentagonal series.
fn eta_oracle(limit: usize) -> Vec<BigInt> {
    let len = (limit - 1) / 2 + 1;
    let p1 = pentagonal(len);
    let mut p2 = vec![BigInt::zero(); len];
    for (i, c) in p1.iter().enumerate() {
        if 2 * i < len {
            p2[2 * i] = c.clone();
        }
    }
    let base = mul(&p1, &p2);
    let sq = mul(&base, &base);
    let f = mul(&sq, &sq);
    let mut out = vec![BigInt::zero(); limit + 1];
    for (i, c) in f.into_iter().enumerate() {
        out[2 * i + 1] = c;
    }
    out
}

#[test]
fn expansion_matches_pentagonal_oracle() {
    for limit in [1usize, 2, 17, 200] {
        assert_eq!(
            eta_q_expansion(limit).coefficients(),
            eta_oracle(limit).as_slice()
        );
    }
}

#[test]
fn hecke_relations() {
    let e = eta_q_expansion(13 * 13);
    let a = |n: u64| e.coefficient(n as usize).clone();
    for p in [3u64, 5, 7, 11, 13] {
        assert_eq!(a(p * p), a(p) * a(p) - BigInt::from(p * p * p), "p = {p}");
    }
    for m in (1..=13u64).step_by(2) {
        for n in (1..=13u64).step_by(2) {
            if num_integer::gcd(m, n) == 1 {
                assert_eq!(a(m * n), a(m) * a(n), "a({m}·{n})");
            }
        }
    }
}

#[test]
fn beukers_p3_is_observed_only() {
    let e = eta_q_expansion(10);
    let c = beukers_check(Prime::new(3).unwrap(), &e).unwrap();
    assert_eq!(c.apery_value, BigInt::from(5));
    assert_eq!(c.coefficient, BigInt::from(-4));
    assert_eq!(c.assertion, supercong::congruence::Assertion::Observed);
    assert!(beukers_check(Prime::new(11).unwrap(), &e).is_err());
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn odd_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

proptest! {
    #[test]
    fn gamma_precision_coherence(num in -200i64..200, den in 1i64..30, p in odd_prime(), n in 1u32..4) {
        prop_assume!(!(den as u64).is_multiple_of(p));
        let x = rat(num, den);
        let hi = padic_gamma(&x, p, n + 1).unwrap().residue;
        let lo = padic_gamma(&x, p, n).unwrap().residue;
        prop_assert_eq!(hi.truncate(n), lo);
    }

    #[test]
    fn gamma_functional_equation(x in 0i64..500, p in odd_prime(), n in 1u32..4) {
        let g = |y: i64| padic_gamma(&rat(y, 1), p, n).unwrap().residue;
        let factor = if (x as u64).is_multiple_of(p) { -1 } else { -x };
        prop_assert_eq!(g(x + 1), &PrimePowerResidue::new(factor, p, n) * &g(x));
    }

    #[test]
    fn gamma_reflection(num in -300i64..300, den in 1i64..20, p in odd_prime(), n in 1u32..4) {
        prop_assume!(!(den as u64).is_multiple_of(p));
        let x = rat(num, den);
        let one_minus = BigRational::one() - &x;
        let prod = &padic_gamma(&x, p, n).unwrap().residue * &padic_gamma(&one_minus, p, n).unwrap().residue;
        // a0 in {1..p} with a0 ≡ x (mod p)
        let r = PrimePowerResidue::from_rational(&x, p, 1).unwrap();
        let a0: u64 = if r.value().is_zero() { p } else { u64::try_from(r.value()).unwrap() };
        let sign = if a0.is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(prod, PrimePowerResidue::new(sign, p, n));
    }
}

#[test]
fn van_hamme_branches() {
    for p in (3u64..60).filter(|&p| is_prime(p)) {
        let c = van_hamme_check(Prime::new(p).unwrap()).unwrap();
        assert!(c.pass, "p = {p}: {c:?}");
        let expected = if p % 4 == 1 {
            VanHammeBranch::GammaQuotient
        } else {
            VanHammeBranch::Vanishing
        };
        assert_eq!(c.branch, expected);
    }
    assert_eq!(van_hamme_sum(3), rat(27, 32));
    assert!(padic_gamma(&rat(3, 4), 2, 3).is_err());
    assert!(padic_gamma(&rat(1, 5), 5, 3).is_err());
    let g = padic_gamma(&rat(3, 4), 5, 3).unwrap();
    assert_eq!(g.residue.value(), &BigInt::from(6));
}
