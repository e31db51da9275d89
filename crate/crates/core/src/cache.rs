//! Append-only JSON-lines memo of count reports.
//!
//! Each line carries the version tag it was written under; lines with any
//! other tag are ignored, so counts never survive an algorithm change.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::BranchDatum;
use crate::report::{count_report, CountMode, CountReport};

/// Bump the trailing revision whenever counting code changes.
pub const CACHE_VERSION: &str = concat!("hurwitz-", env!("CARGO_PKG_VERSION"), "/1");

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "HURWITZ_CACHE";

#[derive(Serialize, Deserialize)]
struct CacheLine {
    version: String,
    key: String,
    report: CountReport,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, CountReport>,
}

impl Cache {
    /// Loads `path`, which need not exist yet.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let Ok(entry) = serde_json::from_str::<CacheLine>(&line?) else {
                    continue;
                };
                if entry.version == CACHE_VERSION {
                    entries.insert(entry.key, entry.report);
                }
            }
        }
        Ok(Self { path, entries })
    }

    /// Path from [`CACHE_ENV`], if set and non-empty.
    pub fn env_path() -> Option<PathBuf> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
    }

    pub fn key(datum: &BranchDatum, mode: CountMode, with_classes: bool) -> String {
        format!("{mode}|{}|{datum}", if with_classes { "classes" } else { "count" })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&CountReport> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, report: CountReport) -> Result<()> {
        let line = CacheLine {
            version: CACHE_VERSION.to_string(),
            key: key.clone(),
            report: report.clone(),
        };
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        serde_json::to_writer(&mut file, &line)?;
        file.write_all(b"\n")?;
        self.entries.insert(key, report);
        Ok(())
    }
}

/// [`count_report`] through an optional cache.
pub fn cached_count_report(
    cache: Option<&mut Cache>,
    datum: &BranchDatum,
    mode: CountMode,
    with_classes: bool,
) -> Result<CountReport> {
    let Some(cache) = cache else {
        return count_report(datum, mode, with_classes);
    };
    let key = Cache::key(datum, mode, with_classes);
    if let Some(hit) = cache.get(&key) {
        return Ok(hit.clone());
    }
    let report = count_report(datum, mode, with_classes)?;
    cache.insert(key, report.clone())?;
    Ok(report)
}
