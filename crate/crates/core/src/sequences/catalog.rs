//! The fifteen sporadic sequences: recurrence tuples and the exponent `k`
//! of their two-term supercongruence modulo `p^(k r)`.

use serde::{Deserialize, Serialize};

use super::{RecurrenceParams, SequenceId};

/// One row of the sporadic-sequence catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub id: SequenceId,
    /// Tuple under which the binomial sum satisfies the recurrence.
    pub params: RecurrenceParams,
    /// Tuple as originally tabulated, when it differs from `params`.
    pub published: Option<RecurrenceParams>,
    pub exponent_k: u32,
    /// Whether the congruence is a theorem; `false` means conjectural.
    pub proven: bool,
    pub label: &'static str,
}

const fn row(
    id: SequenceId,
    params: RecurrenceParams,
    exponent_k: u32,
    proven: bool,
    label: &'static str,
) -> TableEntry {
    TableEntry {
        id,
        params,
        published: None,
        exponent_k,
        proven,
        label,
    }
}

use RecurrenceParams as R;
use SequenceId as S;

/// Zagier's six sporadic solutions of the quadratic recurrence.
pub const QUADRATIC_TABLE: [TableEntry; 6] = [
    row(S::ZagierA, R::quadratic(7, 2, -8), 3, true, "Zagier A"),
    row(S::ZagierD, R::quadratic(11, 3, -1), 3, true, "Zagier D"),
    row(S::ZagierC, R::quadratic(10, 3, 9), 2, true, "Zagier C"),
    row(S::ZagierE, R::quadratic(12, 4, 32), 2, true, "Zagier E"),
    row(S::ZagierB, R::quadratic(9, 3, 27), 2, false, "Zagier B"),
    row(S::ZagierF, R::quadratic(17, 6, 72), 2, false, "Zagier F"),
];

/// The nine sporadic solutions of the cubic recurrence.
///
/// The s18 binomial sum satisfies the recurrence with `(c, d) = (192, -12)`;
/// the tabulated `(-192, 12)` fails integrality at `n = 4`.
pub const CUBIC_TABLE: [TableEntry; 9] = [
    row(S::AvszDelta, R::cubic(7, 3, 81, 0), 3, false, "delta"),
    row(S::AvszEta, R::cubic(11, 5, 125, 0), 3, true, "eta"),
    row(S::AvszAlpha, R::cubic(10, 4, 64, 0), 3, true, "alpha"),
    row(S::AvszEpsilon, R::cubic(12, 4, 16, 0), 3, true, "epsilon"),
    row(S::AvszZeta, R::cubic(9, 3, -27, 0), 3, false, "zeta"),
    row(
        S::AvszGamma,
        R::cubic(17, 5, 1, 0),
        3,
        true,
        "gamma (Apery)",
    ),
    row(S::S10, R::cubic(6, 2, -64, 4), 3, true, "s10"),
    row(S::S7, R::cubic(13, 4, -27, 3), 3, true, "s7"),
    TableEntry {
        id: S::S18,
        params: R::cubic(14, 6, 192, -12),
        published: Some(R::cubic(14, 6, -192, 12)),
        exponent_k: 2,
        proven: true,
        label: "s18",
    },
];

/// All fifteen rows, quadratic first.
pub fn table() -> impl Iterator<Item = &'static TableEntry> {
    QUADRATIC_TABLE.iter().chain(CUBIC_TABLE.iter())
}

/// Catalog row for `id`; the Apéry sequence resolves to row (γ).
pub fn lookup(id: SequenceId) -> Option<&'static TableEntry> {
    let id = match id {
        S::Apery | S::SFamily { a: 2, b: 2, c: 0 } => S::AvszGamma,
        S::SFamily { a: 2, b: 1, c: 1 } => S::S7,
        S::SFamily { a: 4, b: 0, c: 0 } => S::S10,
        S::SFamily { a: 3, b: 0, c: 0 } => S::ZagierA,
        S::SFamily { a: 2, b: 1, c: 0 } => S::ZagierD,
        S::SFamily { a: 2, b: 0, c: 2 } => S::AvszEpsilon,
        S::TFamily {
            a: 1,
            b: 1,
            c: 1,
            d: 1,
            e: 1,
        } => S::S18,
        other => other,
    };
    table().find(|e| e.id == id)
}

/// Label for a recurrence tuple that appears in the catalog.
pub fn label_for(params: RecurrenceParams) -> Option<&'static str> {
    table().find(|e| e.params == params).map(|e| e.label)
}
