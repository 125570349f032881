//! Two-term supercongruence checks over parameter grids, and numerical
//! forms of the auxiliary binomial congruences they rest on.

mod check;
mod families;
pub mod lemmas;

pub use check::{
    check_two_term, check_two_term_as, sort_checks, Assertion, CongruenceCheck, ExponentRule,
    GridSpec,
};
pub use families::{
    probe_u_exceptions, t_family_exponent, verify_s18, verify_s7_odd_primes, verify_s_family,
    verify_small_prime_conjectures, verify_t_family, verify_table_suite, verify_u_family, verify_z,
    U_EXCEPTIONS,
};
pub use lemmas::{Lemma, LemmaCheck};
