use anyhow::{bail, Context, Result};
use supercong::exact::Prime;

/// `a..b` (inclusive), a single integer, or a comma-separated mix.
pub fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let lo: u64 = lo
                    .trim()
                    .parse()
                    .with_context(|| format!("bad range `{part}`"))?;
                let hi: u64 = hi
                    .trim()
                    .parse()
                    .with_context(|| format!("bad range `{part}`"))?;
                if lo > hi {
                    bail!("empty range `{part}`");
                }
                out.extend(lo..=hi);
            }
            None => out.push(
                part.parse()
                    .with_context(|| format!("bad integer `{part}`"))?,
            ),
        }
    }
    if out.is_empty() {
        bail!("empty list `{s}`");
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    parse_u64_list(s)?
        .into_iter()
        .map(|v| u32::try_from(v).with_context(|| format!("{v} is too large")))
        .collect()
}

/// Explicit primes are validated; a range keeps only its primes.
pub fn parse_primes(s: &str) -> Result<Vec<Prime>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.contains("..") {
            out.extend(
                parse_u64_list(part)?
                    .into_iter()
                    .filter_map(|p| Prime::new(p).ok()),
            );
        } else {
            let p: u64 = part
                .parse()
                .with_context(|| format!("bad prime `{part}`"))?;
            out.push(Prime::new(p)?);
        }
    }
    out.sort_unstable_by_key(|p| p.get());
    out.dedup();
    if out.is_empty() {
        bail!("no primes in `{s}`");
    }
    Ok(out)
}
