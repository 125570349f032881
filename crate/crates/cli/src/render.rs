//! Output of result records as JSON lines, CSV or text.

use std::io::Write;

use anyhow::Result;
use serde_json::Value;
use supercong::congruence::Assertion;

use crate::args::Format;
use crate::ledger::Entry;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(scalar).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// Object keys flattened with dots, in key order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

pub fn assertion_name(a: Assertion) -> &'static str {
    match a {
        Assertion::Proven => "proven",
        Assertion::Conjectural => "conjectural",
        Assertion::Observed => "observed",
    }
}

pub fn text(e: &Entry) -> String {
    let tag = if e.pass() { "PASS" } else { "FAIL" };
    match e {
        Entry::TwoTerm(c) => format!(
            "{tag} {} p={} m={} r={} claimed={} observed={} [{}]",
            c.sequence,
            c.p,
            c.m,
            c.r,
            c.claimed_exponent,
            c.observed_valuation,
            assertion_name(c.assertion)
        ),
        Entry::Lemma(c) => format!(
            "{tag} {:?} p={} params={:?} claimed={} observed={}",
            c.lemma, c.p, c.params, c.claimed_exponent, c.observed_valuation
        ),
        Entry::Beukers(c) => format!(
            "{tag} beukers p={} A={} a(p)={} claimed={} observed={}",
            c.p, c.apery_value, c.coefficient, c.claimed_exponent, c.observed_valuation
        ),
        Entry::VanHamme(c) => format!(
            "{tag} van_hamme p={} branch={:?} claimed={} observed={} sum={}",
            c.p, c.branch, c.claimed_exponent, c.observed_valuation, c.sum
        ),
        Entry::SearchHit(h) => format!(
            "HIT {} n_checked={}{}",
            h.params,
            h.n_checked,
            h.known_label
                .as_deref()
                .map(|l| format!(" ({l})"))
                .unwrap_or_default()
        ),
        Entry::Crosscheck(c) => format!(
            "{tag} crosscheck {} {} n<={} first_mismatch={}",
            c.sequence,
            c.params,
            c.n_max,
            c.first_mismatch
                .map_or("none".to_string(), |n| n.to_string())
        ),
    }
}

/// Write entries in `format`. CSV starts a new header whenever the field
/// set changes.
pub fn write_entries(out: &mut dyn Write, entries: &[Entry], format: Format) -> Result<()> {
    match format {
        Format::Json => {
            for e in entries {
                writeln!(out, "{}", e.payload())?;
            }
        }
        Format::Text => {
            for e in entries {
                writeln!(out, "{}", text(e))?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
            let mut header: Option<Vec<String>> = None;
            for e in entries {
                let mut cells = Vec::new();
                flatten("", &e.payload(), &mut cells);
                let keys: Vec<String> = cells.iter().map(|(k, _)| k.clone()).collect();
                if header.as_ref() != Some(&keys) {
                    w.write_record(&keys)?;
                    header = Some(keys);
                }
                w.write_record(cells.iter().map(|(_, v)| v))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
