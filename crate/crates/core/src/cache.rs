//! On-disk memo tables for the recursive engines: one JSON file per engine and size.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hessenberg::HessFn;
use crate::llt::{Engine, MemoEntry};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    engine: Engine,
    n: usize,
    entries: Vec<CachedEntry>,
}

#[derive(Serialize, Deserialize)]
struct CachedEntry {
    h: HessFn,
    #[serde(flatten)]
    entry: MemoEntry,
}

/// Outcome of reading one cache file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadNote {
    Loaded { path: PathBuf, entries: usize },
    VersionMismatch { path: PathBuf, found: u32 },
}

#[derive(Debug, Clone)]
pub struct MemoCache {
    dir: PathBuf,
}

impl MemoCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_path(&self, engine: Engine, n: usize) -> PathBuf {
        self.dir.join(format!("{}-n{}.json", engine.name(), n))
    }

    fn read(path: &Path) -> Result<Option<CacheFile>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        // Peek at the version before committing to the schema.
        let raw: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let version = raw.get("version").and_then(|v| v.as_u64()).unwrap_or(0) as u32;
        if version != CACHE_VERSION {
            return Ok(Some(CacheFile {
                version,
                engine: Engine::Llt,
                n: 0,
                entries: Vec::new(),
            }));
        }
        serde_json::from_value(raw)
            .map(Some)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    /// Read every file of `engine` for sizes `1..=n_max`. Files written by another
    /// schema version are skipped and reported.
    pub fn load(
        &self,
        engine: Engine,
        n_max: usize,
    ) -> Result<(HashMap<HessFn, MemoEntry>, Vec<LoadNote>)> {
        let mut memo = HashMap::new();
        let mut notes = Vec::new();
        for n in 1..=n_max {
            let path = self.file_path(engine, n);
            let Some(file) = Self::read(&path)? else {
                continue;
            };
            if file.version != CACHE_VERSION {
                log::warn!(
                    "ignoring cache file {} with version {}",
                    path.display(),
                    file.version
                );
                notes.push(LoadNote::VersionMismatch {
                    path,
                    found: file.version,
                });
                continue;
            }
            if file.engine != engine || file.n != n {
                return Err(Error::Cache(format!(
                    "{}: header does not match its file name",
                    path.display()
                )));
            }
            let count = file.entries.len();
            for e in file.entries {
                if e.h.n() != n || e.entry.value.degree() != n {
                    return Err(Error::Cache(format!(
                        "{}: entry {} has the wrong size",
                        path.display(),
                        e.h
                    )));
                }
                memo.insert(e.h, e.entry);
            }
            notes.push(LoadNote::Loaded {
                path,
                entries: count,
            });
        }
        Ok((memo, notes))
    }

    /// Merge `memo` into the files on disk. Entries already on disk are kept;
    /// each file is rewritten atomically with entries sorted by `h`.
    pub fn store(&self, engine: Engine, memo: &HashMap<HessFn, MemoEntry>) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .map_err(|e| Error::Cache(format!("{}: {e}", self.dir.display())))?;
        let mut by_n: BTreeMap<usize, BTreeMap<HessFn, MemoEntry>> = BTreeMap::new();
        for (h, e) in memo {
            by_n.entry(h.n()).or_default().insert(h.clone(), e.clone());
        }
        for (n, fresh) in by_n {
            let path = self.file_path(engine, n);
            let mut merged: BTreeMap<HessFn, MemoEntry> = match Self::read(&path) {
                Ok(Some(file)) if file.version == CACHE_VERSION => {
                    file.entries.into_iter().map(|e| (e.h, e.entry)).collect()
                }
                _ => BTreeMap::new(),
            };
            let before = merged.len();
            for (h, e) in fresh {
                merged.entry(h).or_insert(e);
            }
            if merged.len() == before && path.exists() {
                continue;
            }
            let file = CacheFile {
                version: CACHE_VERSION,
                engine,
                n,
                entries: merged
                    .into_iter()
                    .map(|(h, entry)| CachedEntry { h, entry })
                    .collect(),
            };
            let text = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
            let tmp = path.with_extension("json.tmp");
            fs::write(&tmp, text).map_err(|e| Error::Cache(format!("{}: {e}", tmp.display())))?;
            fs::rename(&tmp, &path)
                .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_hessenberg;
    use crate::llt::Recursion;

    #[test]
    fn round_trip_and_merge() {
        let dir = tempfile::tempdir().unwrap();
        let cache = MemoCache::new(dir.path());
        let mut r = Recursion::new(Engine::Llt);
        for h in enumerate_hessenberg(3) {
            r.eval(&h).unwrap();
        }
        cache.store(Engine::Llt, r.memo()).unwrap();
        let (memo, notes) = cache.load(Engine::Llt, 3).unwrap();
        assert_eq!(&memo, r.memo());
        assert_eq!(notes.len(), 3);

        let mut more = Recursion::with_memo(Engine::Llt, memo);
        for h in enumerate_hessenberg(4) {
            more.eval(&h).unwrap();
        }
        cache.store(Engine::Llt, more.memo()).unwrap();
        let (memo, _) = cache.load(Engine::Llt, 4).unwrap();
        assert_eq!(&memo, more.memo());
        assert!(cache.load(Engine::Csf, 4).unwrap().0.is_empty());
    }

    #[test]
    fn version_mismatch_is_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let cache = MemoCache::new(dir.path());
        fs::write(
            cache.file_path(Engine::Llt, 2),
            r#"{"version":999,"engine":"llt","n":2,"entries":[]}"#,
        )
        .unwrap();
        let (memo, notes) = cache.load(Engine::Llt, 2).unwrap();
        assert!(memo.is_empty());
        assert!(matches!(
            notes[0],
            LoadNote::VersionMismatch { found: 999, .. }
        ));
    }

    #[test]
    fn corruption_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let cache = MemoCache::new(dir.path());
        fs::write(cache.file_path(Engine::Csf, 1), "{not json").unwrap();
        assert!(matches!(cache.load(Engine::Csf, 1), Err(Error::Cache(_))));
    }
}
