//! Result records and the JSON-lines ledger.

use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use supercong::analytic::{BeukersCheck, VanHammeCheck};
use supercong::congruence::{Assertion, CongruenceCheck, LemmaCheck};
use supercong::search::SearchHit;
use supercong::sequences::CrosscheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    TwoTerm,
    Lemma,
    Beukers,
    VanHamme,
    SearchHit,
    Crosscheck,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::TwoTerm => "two_term",
            Kind::Lemma => "lemma",
            Kind::Beukers => "beukers",
            Kind::VanHamme => "van_hamme",
            Kind::SearchHit => "search_hit",
            Kind::Crosscheck => "crosscheck",
        }
    }
}

/// One typed result.
#[derive(Debug, Clone, PartialEq)]
pub enum Entry {
    TwoTerm(CongruenceCheck),
    Lemma(LemmaCheck),
    Beukers(BeukersCheck),
    VanHamme(VanHammeCheck),
    SearchHit(SearchHit),
    Crosscheck(CrosscheckReport),
}

fn fatal(pass: bool, assertion: Assertion, strict: bool) -> bool {
    !pass
        && match assertion {
            Assertion::Proven => true,
            Assertion::Conjectural => strict,
            Assertion::Observed => false,
        }
}

impl Entry {
    pub fn kind(&self) -> Kind {
        match self {
            Entry::TwoTerm(_) => Kind::TwoTerm,
            Entry::Lemma(_) => Kind::Lemma,
            Entry::Beukers(_) => Kind::Beukers,
            Entry::VanHamme(_) => Kind::VanHamme,
            Entry::SearchHit(_) => Kind::SearchHit,
            Entry::Crosscheck(_) => Kind::Crosscheck,
        }
    }

    pub fn pass(&self) -> bool {
        match self {
            Entry::TwoTerm(c) => c.pass,
            Entry::Lemma(c) => c.pass,
            Entry::Beukers(c) => c.pass,
            Entry::VanHamme(c) => c.pass,
            Entry::SearchHit(_) => true,
            Entry::Crosscheck(c) => c.agrees(),
        }
    }

    pub fn assertion(&self) -> Assertion {
        match self {
            Entry::TwoTerm(c) => c.assertion,
            Entry::Beukers(c) => c.assertion,
            Entry::SearchHit(_) => Assertion::Observed,
            _ => Assertion::Proven,
        }
    }

    /// A failure that makes the run exit non-zero.
    pub fn is_fatal(&self, strict: bool) -> bool {
        fatal(self.pass(), self.assertion(), strict)
    }

    pub fn payload(&self) -> Value {
        let v = match self {
            Entry::TwoTerm(c) => serde_json::to_value(c),
            Entry::Lemma(c) => serde_json::to_value(c),
            Entry::Beukers(c) => serde_json::to_value(c),
            Entry::VanHamme(c) => serde_json::to_value(c),
            Entry::SearchHit(c) => serde_json::to_value(c),
            Entry::Crosscheck(c) => serde_json::to_value(c),
        };
        v.expect("records serialize")
    }

    pub fn from_payload(kind: Kind, payload: Value) -> serde_json::Result<Entry> {
        Ok(match kind {
            Kind::TwoTerm => Entry::TwoTerm(serde_json::from_value(payload)?),
            Kind::Lemma => Entry::Lemma(serde_json::from_value(payload)?),
            Kind::Beukers => Entry::Beukers(serde_json::from_value(payload)?),
            Kind::VanHamme => Entry::VanHamme(serde_json::from_value(payload)?),
            Kind::SearchHit => Entry::SearchHit(serde_json::from_value(payload)?),
            Kind::Crosscheck => Entry::Crosscheck(serde_json::from_value(payload)?),
        })
    }
}

/// A ledger line. Keys are written in lexicographic order at every level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerRecord {
    pub kind: Kind,
    pub payload: Value,
    pub timestamp: String,
    pub tool_version: String,
}

impl LedgerRecord {
    pub fn new(entry: &Entry, timestamp: &str) -> Self {
        LedgerRecord {
            kind: entry.kind(),
            payload: entry.payload(),
            timestamp: timestamp.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_line(&self) -> String {
        // serde_json::Map is ordered by key, so going through Value sorts
        serde_json::to_value(self)
            .expect("records serialize")
            .to_string()
    }

    pub fn parse(line: &str) -> Result<(LedgerRecord, Entry)> {
        let rec: LedgerRecord = serde_json::from_str(line)?;
        let entry = Entry::from_payload(rec.kind, rec.payload.clone())?;
        Ok((rec, entry))
    }
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Append all entries to `path` through one buffered writer.
pub fn append(path: &Path, entries: &[Entry]) -> Result<()> {
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening ledger {}", path.display()))?;
    let mut w = BufWriter::new(file);
    let ts = now();
    for e in entries {
        writeln!(w, "{}", LedgerRecord::new(e, &ts).to_line())?;
    }
    w.flush()?;
    Ok(())
}
