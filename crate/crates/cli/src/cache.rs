//! One JSON file per degree, `poincare_d<D>.json`, holding the series in the
//! standard document shape plus a small header.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use covseries::poly::RationalDoc;
use covseries::{verify_series, FactoredRational};
use serde::{Deserialize, Serialize};

pub const GENERATOR: &str = "theorem3";

/// Corner re-checked whenever a cache file is read.
pub const REVERIFY_IMAX: u32 = 6;

pub fn reverify_jmax(d: u32) -> u32 {
    (d * REVERIFY_IMAX).max(12)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifiedTo {
    pub imax: u32,
    pub jmax: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDoc {
    pub d: u32,
    pub generator: String,
    pub verified_to: VerifiedTo,
    #[serde(flatten)]
    pub series: RationalDoc,
}

pub fn cache_path(dir: &Path, d: u32) -> PathBuf {
    dir.join(format!("poincare_d{d}.json"))
}

#[derive(Debug)]
pub enum Loaded {
    Missing,
    Valid(FactoredRational),
    /// Present but unreadable or failing re-verification.
    Invalid(String),
}

/// Reads the cache file for `d` and re-verifies its low-degree corner
/// against the dimension table.
pub fn load(dir: &Path, d: u32) -> Loaded {
    let path = cache_path(dir, d);
    let text = match fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Loaded::Missing,
        Err(e) => return Loaded::Invalid(e.to_string()),
    };
    let doc: CacheDoc = match serde_json::from_str(&text) {
        Ok(doc) => doc,
        Err(e) => return Loaded::Invalid(format!("unparsable: {e}")),
    };
    if doc.d != d {
        return Loaded::Invalid(format!("header says d={}, expected {d}", doc.d));
    }
    if doc.generator != GENERATOR {
        return Loaded::Invalid(format!("unknown generator {:?}", doc.generator));
    }
    let series = match FactoredRational::try_from(&doc.series) {
        Ok(series) => series,
        Err(e) => return Loaded::Invalid(e.to_string()),
    };
    let report = verify_series(&series, d, REVERIFY_IMAX, reverify_jmax(d));
    if !report.passed() {
        return Loaded::Invalid(format!("{} coefficient mismatches", report.mismatches.len()));
    }
    Loaded::Valid(series)
}

/// Writes through a temporary file so a partially written cache entry is
/// never observed under the final name.
pub fn store(dir: &Path, d: u32, series: &FactoredRational, verified_to: VerifiedTo) -> io::Result<PathBuf> {
    let doc = CacheDoc {
        d,
        generator: GENERATOR.to_string(),
        verified_to,
        series: RationalDoc::from(series),
    };
    let path = cache_path(dir, d);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(&doc)?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Moves a bad cache file aside as `<name>.bad`.
pub fn quarantine(dir: &Path, d: u32) -> io::Result<PathBuf> {
    let path = cache_path(dir, d);
    let mut bad = path.clone().into_os_string();
    bad.push(".bad");
    let bad = PathBuf::from(bad);
    fs::rename(&path, &bad)?;
    Ok(bad)
}
