//! Grid runners for the supercongruence claims about whole sequences.

use super::check::{check_two_term_as, sort_checks, Assertion, CongruenceCheck, GridSpec};
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::par::Exec;
use crate::sequences::{catalog, SequenceId};

struct Task {
    id: SequenceId,
    p: Prime,
    m: u64,
    r: u32,
    exponent: i64,
    assertion: Assertion,
}

fn run(tasks: Vec<Task>, exec: Exec) -> Vec<CongruenceCheck> {
    let mut out = exec.map(&tasks, |t| {
        check_two_term_as(t.id, t.p, t.m, t.r, t.exponent, t.assertion)
    });
    sort_checks(&mut out);
    out
}

/// `S(m p^r; A,B,C) ≡ S(m p^(r-1); A,B,C) (mod p^(3r))` for `A >= 2`,
/// `p >= 5`, over the cross product of the given exponents and the grid.
pub fn verify_s_family(
    a_values: &[u32],
    b_values: &[u32],
    c_values: &[u32],
    grid: &GridSpec,
    exec: Exec,
) -> Result<Vec<CongruenceCheck>> {
    grid.require_min_prime(5, "the S-family congruence needs p >= 5")?;
    if a_values.is_empty() || b_values.is_empty() || c_values.is_empty() {
        return Err(Error::EmptyGrid("family exponents"));
    }
    if let Some(a) = a_values.iter().find(|&&a| a < 2) {
        return Err(Error::HypothesisViolated(format!("A = {a} < 2")));
    }
    let mut tasks = Vec::new();
    for &a in a_values {
        for &b in b_values {
            for &c in c_values {
                for (p, m, r) in grid.points() {
                    tasks.push(Task {
                        id: SequenceId::SFamily { a, b, c },
                        p,
                        m,
                        r,
                        exponent: 3 * r as i64,
                        assertion: Assertion::Proven,
                    });
                }
            }
        }
    }
    Ok(run(tasks, exec))
}

/// `s18(m p^r) ≡ s18(m p^(r-1)) (mod p^(2r))` for every prime.
pub fn verify_s18(grid: &GridSpec, exec: Exec) -> Vec<CongruenceCheck> {
    let tasks = grid
        .points()
        .into_iter()
        .map(|(p, m, r)| Task {
            id: SequenceId::S18,
            p,
            m,
            r,
            exponent: 2 * r as i64,
            assertion: Assertion::Proven,
        })
        .collect();
    run(tasks, exec)
}

/// `s7(m p^r) ≡ s7(m p^(r-1)) (mod p^(3r))` for odd primes.
///
/// Proven for `p >= 5`; the case `p = 3` is tagged conjectural.
pub fn verify_s7_odd_primes(grid: &GridSpec, exec: Exec) -> Result<Vec<CongruenceCheck>> {
    grid.require_min_prime(3, "s7 congruence is stated for odd primes")?;
    let tasks = grid
        .points()
        .into_iter()
        .map(|(p, m, r)| Task {
            id: SequenceId::S7,
            p,
            m,
            r,
            exponent: 3 * r as i64,
            assertion: if p.get() == 3 {
                Assertion::Conjectural
            } else {
                Assertion::Proven
            },
        })
        .collect();
    Ok(run(tasks, exec))
}

/// Claimed exponent and the least `m` from which it is asserted, for the
/// strengthened congruences of s7 and s18 at `p = 2, 3`.
fn small_prime_rule(id: SequenceId, p: u64, r: u32) -> Option<(i64, u64)> {
    let r = r as i64;
    match (id, p) {
        (SequenceId::S7, 2) => Some((3 * r + 2, 4)),
        (SequenceId::S7, 3) => Some((3 * r, 1)),
        (SequenceId::S18, 2) => Some((2 * r + 3, 2)),
        // holds modulo 3^3 when r = 1
        (SequenceId::S18, 3) => Some((if r == 1 { 3 } else { 3 * r - 1 }, 3)),
        _ => None,
    }
}

/// The conjectured strengthenings at `p = 2, 3` for `m = 1..=m_max`,
/// `r = 1..=r_max`. Instances below the asserted range of `m` are reported
/// with their valuation, tagged [`Assertion::Observed`].
pub fn verify_small_prime_conjectures(
    id: SequenceId,
    r_max: u32,
    m_max: u64,
    exec: Exec,
) -> Result<Vec<CongruenceCheck>> {
    if !matches!(id, SequenceId::S7 | SequenceId::S18) {
        return Err(Error::HypothesisViolated(format!(
            "small-prime conjectures concern s7 and s18, not {id}"
        )));
    }
    let mut tasks = Vec::new();
    for p in [2u64, 3] {
        for m in 1..=m_max {
            for r in 1..=r_max {
                let (exponent, m_min) = small_prime_rule(id, p, r).unwrap();
                tasks.push(Task {
                    id,
                    p: Prime::new(p).unwrap(),
                    m,
                    r,
                    exponent,
                    assertion: if m >= m_min {
                        Assertion::Conjectural
                    } else {
                        Assertion::Observed
                    },
                });
            }
        }
    }
    Ok(run(tasks, exec))
}

/// All fifteen cataloged sequences at their tabulated exponent `k r`.
pub fn verify_table_suite(grid: &GridSpec, exec: Exec) -> Result<Vec<CongruenceCheck>> {
    grid.require_min_prime(5, "tabulated exponents are for p >= 5")?;
    let mut tasks = Vec::new();
    for entry in catalog::table() {
        for (p, m, r) in grid.points() {
            tasks.push(Task {
                id: entry.id,
                p,
                m,
                r,
                exponent: entry.exponent_k as i64 * r as i64,
                assertion: if entry.proven {
                    Assertion::Proven
                } else {
                    Assertion::Conjectural
                },
            });
        }
    }
    Ok(run(tasks, exec))
}

/// `Z(m p^r) ≡ Z(m p^(r-1)) (mod p^(3r))` for `p >= 5`.
pub fn verify_z(grid: &GridSpec, exec: Exec) -> Result<Vec<CongruenceCheck>> {
    grid.require_min_prime(5, "the Z congruence needs p >= 5")?;
    let tasks = grid
        .points()
        .into_iter()
        .map(|(p, m, r)| Task {
            id: SequenceId::AvszEta,
            p,
            m,
            r,
            exponent: 3 * r as i64,
            assertion: Assertion::Proven,
        })
        .collect();
    Ok(run(tasks, exec))
}

/// Exponent claimed for the T-family: `3r` when `A >= 2` and `p >= 5`,
/// otherwise `2r`. Requires `A, B, C >= 1`.
pub fn t_family_exponent(a: u32, p: u64, r: u32) -> i64 {
    if a >= 2 && p >= 5 {
        3 * r as i64
    } else {
        2 * r as i64
    }
}

/// T-family congruences for each `(A, B, C, D, E)` with `A, B, C >= 1`.
pub fn verify_t_family(
    params: &[[u32; 5]],
    grid: &GridSpec,
    exec: Exec,
) -> Result<Vec<CongruenceCheck>> {
    let mut tasks = Vec::new();
    for &[a, b, c, d, e] in params {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::HypothesisViolated(format!(
                "T-family needs A, B, C >= 1, got ({a},{b},{c},{d},{e})"
            )));
        }
        for (p, m, r) in grid.points() {
            tasks.push(Task {
                id: SequenceId::TFamily { a, b, c, d, e },
                p,
                m,
                r,
                exponent: t_family_exponent(a, p.get(), r),
                assertion: Assertion::Proven,
            });
        }
    }
    Ok(run(tasks, exec))
}

/// The two parameter triples excluded from the u-family congruence.
pub const U_EXCEPTIONS: [(u8, u32, u32); 2] = [(0, 0, 1), (0, 1, 0)];

/// u-family congruences modulo `p^(3r)` for `a + b >= 2`, `p >= 5`.
pub fn verify_u_family(
    params: &[(u8, u32, u32)],
    grid: &GridSpec,
    exec: Exec,
) -> Result<Vec<CongruenceCheck>> {
    grid.require_min_prime(5, "the u-family congruence needs p >= 5")?;
    let mut tasks = Vec::new();
    for &(eps, a, b) in params {
        if eps > 1 || a + b < 2 {
            return Err(Error::HypothesisViolated(format!(
                "u-family needs eps in {{0,1}} and a + b >= 2, got ({eps},{a},{b})"
            )));
        }
        for (p, m, r) in grid.points() {
            tasks.push(Task {
                id: SequenceId::UFamily { eps, a, b },
                p,
                m,
                r,
                exponent: 3 * r as i64,
                assertion: Assertion::Proven,
            });
        }
    }
    Ok(run(tasks, exec))
}

/// The excluded u-family triples probed at exponent `3r`; every check is
/// [`Assertion::Observed`] and failures are expected.
pub fn probe_u_exceptions(grid: &GridSpec, exec: Exec) -> Vec<CongruenceCheck> {
    let mut tasks = Vec::new();
    for (eps, a, b) in U_EXCEPTIONS {
        for (p, m, r) in grid.points() {
            tasks.push(Task {
                id: SequenceId::UFamily { eps, a, b },
                p,
                m,
                r,
                exponent: 3 * r as i64,
                assertion: Assertion::Observed,
            });
        }
    }
    run(tasks, exec)
}
