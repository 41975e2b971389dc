//! Orbit pairs persisted between runs.
//!
//! When `PENTA_CACHE_DIR` is set, orbit pairs live in `orbits-v1.json` in
//! that directory: `{"version": 1, "orbits": {"<path>": ["<short>", "<long>"]}}`
//! with paths in their text form (`-` for alpha) and words as digit strings.
//! A file with another version, or one that fails to parse, is ignored.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use penta_core::{ArcVertex, CyclicWord, OrbitPair};
use serde::{Deserialize, Serialize};

pub const CACHE_ENV: &str = "PENTA_CACHE_DIR";
pub const CACHE_FILE: &str = "orbits-v1.json";
const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    orbits: BTreeMap<String, [String; 2]>,
}

#[derive(Debug, Default)]
pub struct OrbitCache {
    dir: Option<PathBuf>,
    entries: BTreeMap<String, [String; 2]>,
    dirty: bool,
}

impl OrbitCache {
    /// A cache that never touches the disk.
    pub fn in_memory() -> Self {
        OrbitCache::default()
    }

    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => OrbitCache::open(dir),
            _ => OrbitCache::in_memory(),
        }
    }

    pub fn open(dir: impl Into<PathBuf>) -> Self {
        let dir = dir.into();
        let entries = fs::read(dir.join(CACHE_FILE))
            .ok()
            .and_then(|bytes| serde_json::from_slice::<CacheFile>(&bytes).ok())
            .filter(|f| f.version == VERSION)
            .map(|f| f.orbits)
            .unwrap_or_default();
        OrbitCache { dir: Some(dir), entries, dirty: false }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, v: &ArcVertex) -> Option<OrbitPair> {
        let [s, l] = self.entries.get(&v.to_string())?;
        Some(OrbitPair { short: s.parse::<CyclicWord>().ok()?, long: l.parse::<CyclicWord>().ok()? })
    }

    pub fn insert(&mut self, v: &ArcVertex, o: &OrbitPair) {
        let value = [o.short.representative().to_string(), o.long.representative().to_string()];
        if self.entries.insert(v.to_string(), value.clone()).as_ref() != Some(&value) {
            self.dirty = true;
        }
    }

    /// Looks `v` up, computing and remembering it on a miss.
    pub fn get_or_compute(&mut self, v: &ArcVertex) -> OrbitPair {
        if let Some(o) = self.get(v) {
            return o;
        }
        let o = penta_core::orbits_for_vertex(v);
        self.insert(v, &o);
        o
    }

    /// Writes the file if anything changed and a directory is configured.
    pub fn save(&mut self) -> io::Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        fs::create_dir_all(dir)?;
        let file = CacheFile { version: VERSION, orbits: self.entries.clone() };
        let tmp = dir.join(format!("{CACHE_FILE}.tmp"));
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, dir.join(CACHE_FILE))?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let v: ArcVertex = "013".parse().unwrap();
        let mut cache = OrbitCache::open(dir.path());
        assert!(cache.get(&v).is_none());
        let o = cache.get_or_compute(&v);
        cache.save().unwrap();
        let reopened = OrbitCache::open(dir.path());
        assert_eq!(reopened.get(&v), Some(o));
    }

    #[test]
    fn foreign_versions_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join(CACHE_FILE), r#"{"version": 7, "orbits": {"1": ["25", "43"]}}"#).unwrap();
        assert!(OrbitCache::open(dir.path()).is_empty());
        fs::write(dir.path().join(CACHE_FILE), "not json").unwrap();
        assert!(OrbitCache::open(dir.path()).is_empty());
    }
}
