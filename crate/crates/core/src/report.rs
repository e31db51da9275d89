//! JSON count reports. Reports carry no timing so that they are
//! byte-identical across runs and thread counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::characters::frobenius_tuple_count;
use crate::constellation::Constellation;
use crate::enumerate::enumerate_strong;
use crate::equivalence::weak_count;
use crate::error::{Error, Result};
use crate::partition::BranchDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    Weak,
    Strong,
}

impl fmt::Display for CountMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMode::Weak => "weak",
            CountMode::Strong => "strong",
        })
    }
}

impl FromStr for CountMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(CountMode::Weak),
            "strong" => Ok(CountMode::Strong),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub degree: usize,
    pub genus: usize,
    pub partitions: Vec<Vec<usize>>,
    pub mode: CountMode,
    pub count: usize,
    /// One representative per class, each slot in cycle notation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<[String; 3]>>,
    /// Transitive product-one triples of the datum's types, in its order.
    pub tuple_count: u128,
    /// Character-theoretic count of all product-one triples against the
    /// enumerated one.
    pub frobenius_check: CheckStatus,
}

fn cycle_strings(c: &Constellation) -> [String; 3] {
    c.perms().clone().map(|p| p.to_cycle_string())
}

pub fn count_report(datum: &BranchDatum, mode: CountMode, with_classes: bool) -> Result<CountReport> {
    let (strong, count, reps) = match mode {
        CountMode::Weak => {
            let w = weak_count(datum)?;
            (w.strong, w.nu, w.representatives)
        }
        CountMode::Strong => {
            let s = enumerate_strong(datum)?;
            let reps = s.classes.iter().map(|c| c.representative.clone()).collect();
            let n = s.len();
            (s, n, reps)
        }
    };
    let ps = datum.partitions();
    let expected = frobenius_tuple_count([&ps[0], &ps[1], &ps[2]], datum.degree())?;
    Ok(CountReport {
        degree: datum.degree(),
        genus: datum.cover_genus(),
        partitions: ps.iter().map(|p| p.parts().to_vec()).collect(),
        mode,
        count,
        classes: with_classes.then(|| reps.iter().map(cycle_strings).collect()),
        tuple_count: strong.tuple_count,
        frobenius_check: if expected == strong.raw_tuple_count {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
    })
}

impl CountReport {
    /// Plain-text rendering for `--pretty`.
    pub fn pretty(&self) -> String {
        let parts: Vec<String> = self
            .partitions
            .iter()
            .map(|p| format!("[{}]", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let mut s = format!(
            "datum      {}\ndegree     {}\ngenus      {}\n{:<10} {}\ntuples     {}\nfrobenius  {:?}\n",
            parts.join(","),
            self.degree,
            self.genus,
            self.mode,
            self.count,
            self.tuple_count,
            self.frobenius_check
        );
        for (i, c) in self.classes.iter().flatten().enumerate() {
            s.push_str(&format!("  #{i:<3} {} | {} | {}\n", c[0], c[1], c[2]));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_datum;

    #[test]
    fn strong_report() {
        let r = count_report(&parse_datum("[2,1],[2,1],[3]").unwrap(), CountMode::Strong, true).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.tuple_count, 6);
        assert_eq!(r.frobenius_check, CheckStatus::Pass);
        assert_eq!(r.classes.as_ref().unwrap().len(), 1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"mode\":\"strong\""));
        assert!(json.contains("\"frobenius_check\":\"pass\""));
        assert_eq!(serde_json::from_str::<CountReport>(&json).unwrap(), r);
    }

    #[test]
    fn classes_omitted_unless_requested() {
        let r = count_report(&parse_datum("[2,1],[3],[2,1]").unwrap(), CountMode::Weak, false).unwrap();
        assert!(r.classes.is_none());
        assert!(!serde_json::to_string(&r).unwrap().contains("classes"));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("weak".parse::<CountMode>().unwrap(), CountMode::Weak);
        assert!("both".parse::<CountMode>().is_err());
    }
}
