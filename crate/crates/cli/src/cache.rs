//! On-disk cache of hook-count grids.
//!
//! Each entry is one JSON document carrying its parameters, the counts as
//! decimal strings, and a SHA-256 digest of everything else. The same
//! document is what `table --format json` prints.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;
pub const ENV_VAR: &str = "HOOK_CENSUS_CACHE";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridKey {
    pub kind: String,
    pub class: String,
    pub source: String,
    pub h: (usize, usize),
    pub n: (usize, usize),
}

impl GridKey {
    fn file_name(&self) -> String {
        format!(
            "{}-{}-{}-h{}-{}-n{}-{}.json",
            self.kind, self.class, self.source, self.h.0, self.h.1, self.n.0, self.n.1
        )
    }
}

#[derive(Serialize)]
struct Unsigned<'a> {
    version: u32,
    #[serde(flatten)]
    key: &'a GridKey,
    counts: &'a [Vec<String>],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    #[serde(flatten)]
    pub key: GridKey,
    /// `counts[i][j]` belongs to `h = h.0 + i`, `n = n.0 + j`.
    pub counts: Vec<Vec<String>>,
    pub digest: String,
}

#[derive(Debug, PartialEq, Eq)]
pub enum LoadError {
    Malformed(String),
    VersionMismatch(u32),
    DigestMismatch,
}

fn digest_of(key: &GridKey, counts: &[Vec<String>]) -> String {
    let unsigned = Unsigned {
        version: SCHEMA_VERSION,
        key,
        counts,
    };
    let bytes = serde_json::to_vec(&unsigned).expect("serializable");
    hex::encode(Sha256::digest(bytes))
}

impl CacheEntry {
    pub fn new(key: GridKey, counts: Vec<Vec<String>>) -> Self {
        let digest = digest_of(&key, &counts);
        CacheEntry {
            version: SCHEMA_VERSION,
            key,
            counts,
            digest,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }

    /// Parses and validates version and digest.
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        let entry: CacheEntry = serde_json::from_str(text).map_err(|e| LoadError::Malformed(e.to_string()))?;
        if entry.version != SCHEMA_VERSION {
            return Err(LoadError::VersionMismatch(entry.version));
        }
        if digest_of(&entry.key, &entry.counts) != entry.digest {
            return Err(LoadError::DigestMismatch);
        }
        Ok(entry)
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `$HOOK_CENSUS_CACHE`, else `$XDG_CACHE_HOME/hook-census`, else
    /// `$HOME/.cache/hook-census`. `None` when none of these is set.
    pub fn from_env() -> Option<Self> {
        let non_empty = |name: &str| std::env::var_os(name).filter(|v| !v.is_empty()).map(PathBuf::from);
        let dir = non_empty(ENV_VAR)
            .or_else(|| non_empty("XDG_CACHE_HOME").map(|d| d.join("hook-census")))
            .or_else(|| non_empty("HOME").map(|d| d.join(".cache").join("hook-census")))?;
        Some(Cache { dir })
    }

    #[cfg(test)]
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn path_for(&self, key: &GridKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// A valid entry for `key`, or `None` on a miss, a stale version, a bad
    /// digest, or a key mismatch.
    pub fn load(&self, key: &GridKey) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let entry = CacheEntry::from_json(&text).ok()?;
        (entry.key == *key).then_some(entry)
    }

    /// Writes to a temporary file in the cache directory and renames it
    /// into place.
    pub fn store(&self, entry: &CacheEntry) -> std::io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path_for(&entry.key);
        let tmp = self.dir.join(format!(".{}.{}.tmp", entry.key.file_name(), std::process::id()));
        write_file(&tmp, entry.to_json().as_bytes())?;
        fs::rename(&tmp, &target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })?;
        Ok(target)
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(bytes)?;
    file.sync_all()
}
