use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{catalog, eval_catalog, recur_eval, RecurrenceParams, SequenceId};
use crate::error::{Error, Result};

/// Outcome of comparing the binomial sum with the recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub sequence: SequenceId,
    pub params: RecurrenceParams,
    pub n_max: u64,
    /// First index where the two definitions differ, if any.
    pub first_mismatch: Option<u64>,
}

impl CrosscheckReport {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare `eval_catalog(id, n)` with the cataloged recurrence for `n <= n_max`.
pub fn crosscheck(id: SequenceId, n_max: u64) -> Result<CrosscheckReport> {
    let entry = catalog::lookup(id).ok_or_else(|| Error::NoRecurrence(id.to_string()))?;
    Ok(crosscheck_with(id, entry.params, n_max))
}

/// Same as [`crosscheck`] with an explicit tuple.
pub fn crosscheck_with(id: SequenceId, params: RecurrenceParams, n_max: u64) -> CrosscheckReport {
    let rec = recur_eval(params, n_max);
    let first_mismatch = rec
        .iter()
        .enumerate()
        .find(|(n, r)| **r != BigRational::from_integer(eval_catalog(id, *n as u64)))
        .map(|(n, _)| n as u64);
    CrosscheckReport {
        sequence: id,
        params,
        n_max,
        first_mismatch,
    }
}
