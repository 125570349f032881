//! Exact evaluation of Apéry-like sporadic sequences and verification of
//! their two-term supercongruences.
//!
//! Everything is computed with arbitrary-precision integers and rationals.
//! A congruence `x ≡ y (mod p^t)` is decided as `v_p(x - y) >= t`, so
//! checks report how much room there is, not just a yes/no.

pub mod analytic;
pub mod congruence;
pub mod error;
pub mod exact;
pub mod par;
pub mod search;
pub mod sequences;

pub use error::{Error, Result};
pub use par::Exec;
