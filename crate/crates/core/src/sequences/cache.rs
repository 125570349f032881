//! On-disk memo of sequence values.
//!
//! One file per sequence, named after [`SequenceId::file_stem`] with a
//! `.tsv` extension, holding lines `n<TAB>decimal-value` sorted by `n`.
//! Concurrent writers race benignly: each rewrites the whole file through a
//! temporary and a rename, and all writers hold identical values.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use super::{eval_catalog, SequenceId};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SequenceCache {
    dir: PathBuf,
}

impl SequenceCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(SequenceCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, id: SequenceId) -> PathBuf {
        self.dir.join(format!("{}.tsv", id.file_stem()))
    }

    /// Every cached value for `id`. Malformed lines are ignored.
    pub fn load(&self, id: SequenceId) -> Result<BTreeMap<u64, BigInt>> {
        let path = self.path_for(id);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
            Err(e) => return Err(Error::Io(e)),
        };
        Ok(text
            .lines()
            .filter_map(|line| {
                let (n, v) = line.split_once('\t')?;
                Some((n.parse().ok()?, v.parse().ok()?))
            })
            .collect())
    }

    /// Merge `values` into the file for `id`.
    pub fn store(&self, id: SequenceId, values: &BTreeMap<u64, BigInt>) -> Result<()> {
        let mut merged = self.load(id)?;
        merged.extend(values.iter().map(|(n, v)| (*n, v.clone())));
        let path = self.path_for(id);
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", id.file_stem(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            for (n, v) in &merged {
                writeln!(f, "{n}\t{v}")?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Values for every `n` in `ns`, computing and recording the misses.
    pub fn values(&self, id: SequenceId, ns: &[u64]) -> Result<Vec<BigInt>> {
        let mut known = self.load(id)?;
        let mut fresh = BTreeMap::new();
        let out = ns
            .iter()
            .map(|&n| {
                known
                    .entry(n)
                    .or_insert_with(|| {
                        let v = eval_catalog(id, n);
                        fresh.insert(n, v.clone());
                        v
                    })
                    .clone()
            })
            .collect();
        if !fresh.is_empty() {
            self.store(id, &fresh)?;
        }
        Ok(out)
    }
}
