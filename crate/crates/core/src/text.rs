//! Text form of branch data: comma-separated bracket groups such as
//! `[2,2,1],[2,3],[2,3]`. Whitespace is ignored.

use crate::error::{Error, Result};
use crate::partition::{BranchDatum, Partition};

/// Parses the partitions of a datum without any compatibility check.
pub fn parse_partitions(s: &str) -> Result<Vec<Partition>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty datum".into()));
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    loop {
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("expected '[' at {rest:?}")))?;
        let close = body
            .find(']')
            .ok_or_else(|| Error::Parse(format!("unclosed bracket in {s:?}")))?;
        let parts = body[..close]
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))?);
        rest = &body[close + 1..];
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("expected ',' at {rest:?}")))?;
    }
    let d = out[0].degree();
    if let Some(bad) = out.iter().find(|p| p.degree() != d) {
        return Err(Error::Parse(format!("{bad} does not sum to {d}")));
    }
    Ok(out)
}

/// Parses a datum, inferring degree and covering genus.
pub fn parse_datum(s: &str) -> Result<BranchDatum> {
    BranchDatum::from_partitions(parse_partitions(s)?)
}

pub fn format_datum(datum: &BranchDatum) -> String {
    datum.to_string()
}
