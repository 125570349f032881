//! Sequence evaluators: binomial sums, recurrences, and their agreement.

mod cache;
pub mod catalog;
mod crosscheck;
mod eval;
mod id;
mod recurrence;

pub use cache::SequenceCache;
pub use catalog::TableEntry;
pub use crosscheck::{crosscheck, crosscheck_with, CrosscheckReport};
pub use eval::{
    eval_catalog, eval_s, eval_t, eval_u, eval_z, s18_term, s_family_term, t_family_term, z_term,
};
pub use id::SequenceId;
pub use recurrence::{recur_eval, RecurrenceParams, StepCoefficients};
