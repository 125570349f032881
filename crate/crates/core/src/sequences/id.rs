use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Every sequence the library can evaluate.
///
/// The first block are the cataloged sporadic sequences; the last three are
/// parametric families. Family members may coincide with cataloged
/// sequences (`S:2,2,0` is the Apéry sequence, `S:2,1,1` is s7,
/// `T:1,1,1,1,1` is s18) but keep their own identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SequenceId {
    Apery,
    ZagierA,
    ZagierB,
    ZagierC,
    ZagierD,
    ZagierE,
    ZagierF,
    AvszDelta,
    AvszEta,
    AvszAlpha,
    AvszEpsilon,
    AvszZeta,
    AvszGamma,
    S10,
    S7,
    S18,
    SFamily {
        a: u32,
        b: u32,
        c: u32,
    },
    TFamily {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
    },
    UFamily {
        eps: u8,
        a: u32,
        b: u32,
    },
}

const NAMED: [(SequenceId, &str); 16] = [
    (SequenceId::Apery, "apery"),
    (SequenceId::ZagierA, "zagier-a"),
    (SequenceId::ZagierB, "zagier-b"),
    (SequenceId::ZagierC, "zagier-c"),
    (SequenceId::ZagierD, "zagier-d"),
    (SequenceId::ZagierE, "zagier-e"),
    (SequenceId::ZagierF, "zagier-f"),
    (SequenceId::AvszDelta, "delta"),
    (SequenceId::AvszEta, "eta"),
    (SequenceId::AvszAlpha, "alpha"),
    (SequenceId::AvszEpsilon, "epsilon"),
    (SequenceId::AvszZeta, "zeta"),
    (SequenceId::AvszGamma, "gamma"),
    (SequenceId::S10, "s10"),
    (SequenceId::S7, "s7"),
    (SequenceId::S18, "s18"),
];

impl SequenceId {
    /// Names accepted by [`FromStr`] for the non-parametric sequences.
    pub fn catalog_names() -> impl Iterator<Item = &'static str> {
        NAMED.iter().map(|(_, n)| *n)
    }

    pub fn catalog() -> impl Iterator<Item = SequenceId> {
        NAMED.iter().map(|(id, _)| *id)
    }

    pub fn is_family(&self) -> bool {
        matches!(
            self,
            SequenceId::SFamily { .. } | SequenceId::TFamily { .. } | SequenceId::UFamily { .. }
        )
    }

    /// File-system friendly key used by the value cache.
    pub fn file_stem(&self) -> String {
        self.to_string().replace([':', ','], "_")
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SequenceId::SFamily { a, b, c } => write!(f, "S:{a},{b},{c}"),
            SequenceId::TFamily { a, b, c, d, e } => write!(f, "T:{a},{b},{c},{d},{e}"),
            SequenceId::UFamily { eps, a, b } => write!(f, "U:{eps},{a},{b}"),
            id => {
                let name = NAMED.iter().find(|(n, _)| *n == id).unwrap().1;
                f.write_str(name)
            }
        }
    }
}

fn parse_params(s: &str, n: usize) -> Result<Vec<u32>> {
    let vals: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse(format!("bad family parameter in `{s}`: {e}")))?;
    if vals.len() != n {
        return Err(Error::Parse(format!("expected {n} parameters, got `{s}`")));
    }
    Ok(vals)
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some((id, _)) = NAMED.iter().find(|(_, n)| *n == lower) {
            return Ok(*id);
        }
        // a few aliases
        match lower.as_str() {
            "a" => return Ok(SequenceId::ZagierA),
            "b" => return Ok(SequenceId::ZagierB),
            "c" => return Ok(SequenceId::ZagierC),
            "d" => return Ok(SequenceId::ZagierD),
            "e" => return Ok(SequenceId::ZagierE),
            "f" => return Ok(SequenceId::ZagierF),
            "z" => return Ok(SequenceId::AvszEta),
            _ => {}
        }
        let trimmed = s.trim();
        if let Some((head, rest)) = trimmed.split_once(':') {
            match head {
                "S" | "s" => {
                    let v = parse_params(rest, 3)?;
                    return Ok(SequenceId::SFamily {
                        a: v[0],
                        b: v[1],
                        c: v[2],
                    });
                }
                "T" | "t" => {
                    let v = parse_params(rest, 5)?;
                    return Ok(SequenceId::TFamily {
                        a: v[0],
                        b: v[1],
                        c: v[2],
                        d: v[3],
                        e: v[4],
                    });
                }
                "U" | "u" => {
                    let v = parse_params(rest, 3)?;
                    if v[0] > 1 {
                        return Err(Error::Parse(format!(
                            "U-family sign flag must be 0 or 1, got {}",
                            v[0]
                        )));
                    }
                    return Ok(SequenceId::UFamily {
                        eps: v[0] as u8,
                        a: v[1],
                        b: v[2],
                    });
                }
                _ => {}
            }
        }
        Err(Error::UnknownSequence(s.to_string()))
    }
}

impl TryFrom<String> for SequenceId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SequenceId> for String {
    fn from(id: SequenceId) -> String {
        id.to_string()
    }
}
