//! `verify` selectors and their default grids.

use anyhow::{bail, Result};
use supercong::analytic::{beukers_check, eta_q_expansion, van_hamme_check};
use supercong::congruence::lemmas::{lemma_suite, Lemma};
use supercong::congruence::{
    probe_u_exceptions, verify_s18, verify_s7_odd_primes, verify_s_family,
    verify_small_prime_conjectures, verify_t_family, verify_table_suite, verify_u_family, verify_z,
    GridSpec,
};
use supercong::sequences::{catalog, crosscheck_with, SequenceId};
use supercong::Exec;

use crate::args::VerifyArgs;
use crate::ledger::Entry;
use crate::lists::{parse_primes, parse_u32_list, parse_u64_list};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    SFamily,
    S18,
    Tables,
    S7Primes,
    SmallPrimes,
    Lemmas,
    Beukers,
    VanHamme,
    Z,
    TFamily,
    UFamily,
    Crosscheck,
}

pub const SELECTORS: &[(&str, Target)] = &[
    ("thm1.2", Target::SFamily),
    ("s-family", Target::SFamily),
    ("thm1.3", Target::S18),
    ("s18", Target::S18),
    ("tables", Target::Tables),
    ("table-suite", Target::Tables),
    ("conj1.1", Target::S7Primes),
    ("s7-primes", Target::S7Primes),
    ("conj23", Target::SmallPrimes),
    ("small-primes", Target::SmallPrimes),
    ("lemmas", Target::Lemmas),
    ("eta-beukers", Target::Beukers),
    ("beukers", Target::Beukers),
    ("vanhamme", Target::VanHamme),
    ("van-hamme", Target::VanHamme),
    ("example3.1", Target::Z),
    ("z", Target::Z),
    ("example3.2", Target::TFamily),
    ("t-family", Target::TFamily),
    ("example3.3", Target::UFamily),
    ("u-family", Target::UFamily),
    ("crosscheck", Target::Crosscheck),
];

pub fn target(name: &str) -> Result<Target> {
    match SELECTORS.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)) {
        Some(&(_, t)) => Ok(t),
        None => {
            let names: Vec<&str> = SELECTORS.iter().map(|(n, _)| *n).collect();
            bail!(
                "unknown verify target `{name}`; expected one of: {}",
                names.join(", ")
            )
        }
    }
}

/// Sampled T-family exponents `(A, B, C, D, E)`.
pub const T_SAMPLES: [[u32; 5]; 6] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0],
    [2, 1, 1, 1, 1],
    [2, 2, 1, 0, 1],
    [1, 2, 1, 1, 0],
    [3, 1, 1, 0, 0],
];

/// Sampled u-family triples `(eps, a, b)` with `a + b >= 2`.
pub const U_SAMPLES: [(u8, u32, u32); 8] = [
    (0, 2, 0),
    (0, 1, 1),
    (0, 0, 2),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (1, 2, 1),
];

struct Defaults {
    primes: &'static str,
    m: &'static str,
    r: &'static str,
}

fn defaults(t: Target, deep: bool) -> Defaults {
    let d = |primes, m, r| Defaults { primes, m, r };
    match t {
        Target::SFamily => d("5,7,11", "1..2", "1..2"),
        Target::S18 => d("2,3,5,7,11,13", "1..3", "1..2"),
        Target::Tables | Target::Z => d("5,7", "1..2", "1..2"),
        Target::S7Primes => d("3..47", "1", "1"),
        Target::SmallPrimes => d("2,3", "1..5", "1..2"),
        Target::Beukers if deep => d("3..199", "1", "1"),
        Target::Beukers => d("3..97", "1", "1"),
        Target::VanHamme => d("3..29", "1", "1"),
        Target::TFamily => d("2,3,5,7", "1..2", "1..2"),
        Target::UFamily => d("5,7,11,13", "1..2", "1..2"),
        Target::Lemmas | Target::Crosscheck => d("5", "1", "1"),
    }
}

fn grid(args: &VerifyArgs, d: &Defaults) -> Result<GridSpec> {
    let primes = parse_primes(args.primes.as_deref().unwrap_or(d.primes))?;
    let m = parse_u64_list(args.m.as_deref().unwrap_or(d.m))?;
    let r = parse_u32_list(args.r.as_deref().unwrap_or(d.r))?;
    Ok(GridSpec::new(primes, m, r)?)
}

fn two_term(v: Vec<supercong::congruence::CongruenceCheck>) -> Vec<Entry> {
    v.into_iter().map(Entry::TwoTerm).collect()
}

/// Run one selector.
pub fn run(args: &VerifyArgs, deep: bool, exec: Exec) -> Result<Vec<Entry>> {
    let t = target(&args.target)?;
    let g = grid(args, &defaults(t, deep))?;
    let entries = match t {
        Target::SFamily => {
            let a = parse_u32_list(args.family_a.as_deref().unwrap_or("2,3"))?;
            let b = parse_u32_list(args.family_b.as_deref().unwrap_or("0..2"))?;
            let c = parse_u32_list(args.family_c.as_deref().unwrap_or("0..2"))?;
            two_term(verify_s_family(&a, &b, &c, &g, exec)?)
        }
        Target::S18 => two_term(verify_s18(&g, exec)),
        Target::Tables => two_term(verify_table_suite(&g, exec)?),
        Target::S7Primes => two_term(verify_s7_odd_primes(&g, exec)?),
        Target::SmallPrimes => {
            if g.primes.iter().any(|p| p.get() > 3) {
                bail!("conj23 concerns p = 2, 3 only");
            }
            let m_max = *g.m_values.iter().max().unwrap();
            let r_max = *g.r_values.iter().max().unwrap();
            let keep = |c: &supercong::congruence::CongruenceCheck| {
                g.primes.iter().any(|p| p.get() == c.p)
                    && g.m_values.contains(&c.m)
                    && g.r_values.contains(&c.r)
            };
            let mut out = verify_small_prime_conjectures(SequenceId::S7, r_max, m_max, exec)?;
            out.extend(verify_small_prime_conjectures(
                SequenceId::S18,
                r_max,
                m_max,
                exec,
            )?);
            out.retain(keep);
            two_term(out)
        }
        Target::Lemmas => {
            let count = if deep { args.samples * 5 } else { args.samples };
            Lemma::ALL
                .iter()
                .flat_map(|&l| lemma_suite(l, count, args.seed, exec))
                .map(Entry::Lemma)
                .collect()
        }
        Target::Beukers => {
            if g.primes.iter().any(|p| p.get() == 2) {
                bail!("the Beukers congruence is stated for odd primes");
            }
            let top = g.primes.iter().map(|p| p.get()).max().unwrap() as usize;
            let e = eta_q_expansion(top);
            let checks: Result<Vec<_>, _> = exec
                .map(&g.primes, |&p| beukers_check(p, &e))
                .into_iter()
                .collect();
            checks?.into_iter().map(Entry::Beukers).collect()
        }
        Target::VanHamme => {
            let checks: Result<Vec<_>, _> = exec
                .map(&g.primes, |&p| van_hamme_check(p))
                .into_iter()
                .collect();
            checks?.into_iter().map(Entry::VanHamme).collect()
        }
        Target::Z => two_term(verify_z(&g, exec)?),
        Target::TFamily => two_term(verify_t_family(&T_SAMPLES, &g, exec)?),
        Target::UFamily => {
            let mut out = two_term(verify_u_family(&U_SAMPLES, &g, exec)?);
            out.extend(two_term(probe_u_exceptions(&g, exec)));
            out
        }
        Target::Crosscheck => {
            let n = if deep { 2 * args.nmax } else { args.nmax };
            let entries: Vec<_> = catalog::table().collect();
            exec.map(&entries, |e| crosscheck_with(e.id, e.params, n))
                .into_iter()
                .map(Entry::Crosscheck)
                .collect()
        }
    };
    Ok(entries)
}

/// Extra conditions on a run beyond per-record pass/fail.
pub fn run_level_failures(args: &VerifyArgs, entries: &[Entry]) -> Vec<String> {
    let mut out = Vec::new();
    if target(&args.target).ok() == Some(Target::UFamily) {
        let excluded_fail = entries.iter().any(|e| match e {
            Entry::TwoTerm(c) => {
                matches!(c.sequence, SequenceId::UFamily { eps: 0, a, b } if a + b == 1) && !c.pass
            }
            _ => false,
        });
        if !excluded_fail {
            out.push("no counterexample found for the excluded triples (0,0,1), (0,1,0)".into());
        }
    }
    out
}
