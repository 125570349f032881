//! Ledger summaries.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::args::Format;
use supercong::congruence::Assertion;

use crate::ledger::{Entry, LedgerRecord};
use crate::render;

#[derive(Debug, Default, Serialize)]
pub struct SequenceRow {
    pub sequence: String,
    pub checks: usize,
    pub failures: usize,
    /// Smallest `observed - claimed` over asserted checks; `None` if every
    /// difference vanished.
    pub min_margin: Option<i64>,
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub records: usize,
    pub by_kind: BTreeMap<String, usize>,
    pub sequences: Vec<SequenceRow>,
    /// Failed asserted checks (proven or conjectural).
    pub failures: Vec<String>,
    pub fatal_failures: usize,
    /// Observed-only records that fell short of the listed exponent.
    pub shortfalls: Vec<String>,
    pub skipped: Vec<String>,
}

pub fn build(text: &str, strict: bool) -> Report {
    let mut rep = Report::default();
    let mut rows: BTreeMap<String, SequenceRow> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut shortfalls = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let entry = match LedgerRecord::parse(line) {
            Ok((_, e)) => e,
            Err(err) => {
                rep.skipped.push(format!("line {}: {err}", i + 1));
                continue;
            }
        };
        rep.records += 1;
        *rep.by_kind
            .entry(entry.kind().name().to_string())
            .or_default() += 1;
        let observed_only = entry.assertion() == Assertion::Observed;
        if observed_only {
            if !entry.pass() {
                shortfalls.push(render::text(&entry));
            }
            continue;
        }
        if let Entry::TwoTerm(c) = &entry {
            let name = c.sequence.to_string();
            let row = rows.entry(name.clone()).or_insert_with(|| SequenceRow {
                sequence: name,
                ..Default::default()
            });
            row.checks += 1;
            row.failures += usize::from(!c.pass);
            if let Some(m) = c.margin() {
                row.min_margin = Some(row.min_margin.map_or(m, |x| x.min(m)));
            }
        }
        if !entry.pass() {
            let fatal = entry.is_fatal(strict);
            rep.fatal_failures += usize::from(fatal);
            let tag = if fatal { "" } else { " (not fatal)" };
            failures.push(format!(
                "{} {}{tag}",
                entry.kind().name(),
                render::text(&entry)
            ));
        }
    }
    failures.sort();
    shortfalls.sort();
    rep.failures = failures;
    rep.shortfalls = shortfalls;
    rep.sequences = rows.into_values().collect();
    rep
}

pub fn write(out: &mut dyn Write, rep: &Report, format: Format) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_value(rep)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["sequence", "checks", "failures", "min_margin"])?;
            for r in &rep.sequences {
                let m = r.min_margin.map_or("inf".to_string(), |m| m.to_string());
                w.write_record([
                    r.sequence.clone(),
                    r.checks.to_string(),
                    r.failures.to_string(),
                    m,
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let kinds: Vec<String> = rep
                .by_kind
                .iter()
                .map(|(k, n)| format!("{k} {n}"))
                .collect();
            writeln!(out, "records: {} ({})", rep.records, kinds.join(", "))?;
            if !rep.sequences.is_empty() {
                writeln!(
                    out,
                    "{:<16} {:>7} {:>9} {:>11}",
                    "sequence", "checks", "failures", "min_margin"
                )?;
                for r in &rep.sequences {
                    let m = r.min_margin.map_or("inf".to_string(), |m| m.to_string());
                    writeln!(
                        out,
                        "{:<16} {:>7} {:>9} {:>11}",
                        r.sequence, r.checks, r.failures, m
                    )?;
                }
            }
            for f in &rep.failures {
                writeln!(out, "failure: {f}")?;
            }
            for s in &rep.shortfalls {
                writeln!(out, "observed only: {s}")?;
            }
            for s in &rep.skipped {
                writeln!(out, "skipped {s}")?;
            }
            writeln!(out, "{} failures", rep.failures.len())?;
        }
    }
    Ok(())
}
