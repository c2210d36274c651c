//! Concurrent memo of evaluated values with an append-only TSV backing file.
//!
//! Record format: `l1,l2,…,lk<TAB>digits<TAB>value`. Regularized values use
//! the index prefix `reg:`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, RwLock};

use super::index::IndexSet;
use crate::bigfloat::{bits_for_digits, BigFloat};
use crate::error::{MzvError, Result};

/// Decimal digits written beyond the requested precision.
const EXTRA_DIGITS: u32 = 8;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CacheKey {
    pub regularized: bool,
    pub index: IndexSet,
    pub digits: u32,
}

impl CacheKey {
    pub fn plain(index: &IndexSet, digits: u32) -> Self {
        Self { regularized: false, index: index.clone(), digits }
    }

    pub fn reg(index: &IndexSet, digits: u32) -> Self {
        Self { regularized: true, index: index.clone(), digits }
    }

    fn label(&self) -> String {
        if self.regularized {
            format!("reg:{}", self.index)
        } else {
            self.index.to_string()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
    pub loaded: usize,
    pub skipped_lines: usize,
}

#[derive(Default)]
pub struct MzvCache {
    map: RwLock<HashMap<CacheKey, BigFloat>>,
    writer: Mutex<Option<File>>,
    path: Option<PathBuf>,
    hits: AtomicU64,
    misses: AtomicU64,
    loaded: usize,
    skipped: usize,
}

/// Round a value to the digits a cache record holds, so that fresh and
/// reloaded values are bit-identical.
pub fn canonicalize(v: &BigFloat, digits: u32) -> BigFloat {
    let text = v.to_decimal_string(digits + EXTRA_DIGITS);
    BigFloat::parse_with_bits(&text, bits_for_digits(digits)).expect("own decimal output parses")
}

impl MzvCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Load records from `path` (if it exists) and append new ones to it.
    ///
    /// Malformed lines are skipped; a torn final line from an interrupted
    /// write is the usual cause.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut map = HashMap::new();
        let mut skipped = 0;
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match parse_record(&line) {
                    Some((k, v)) => {
                        map.insert(k, v);
                    }
                    None => skipped += 1,
                }
            }
        }
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        let loaded = map.len();
        Ok(Self {
            map: RwLock::new(map),
            writer: Mutex::new(Some(file)),
            path: Some(path),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
            loaded,
            skipped,
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, key: &CacheKey) -> Option<BigFloat> {
        self.map.read().expect("cache lock").get(key).cloned()
    }

    /// Return the cached value or compute, canonicalize and store it.
    ///
    /// Computation runs outside the lock; when two threads race, the first
    /// stored value wins and both return it.
    pub fn get_or_compute(&self, key: CacheKey, f: impl FnOnce() -> Result<BigFloat>) -> Result<BigFloat> {
        if let Some(v) = self.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let v = canonicalize(&f()?, key.digits);
        let mut map = self.map.write().expect("cache lock");
        if let Some(existing) = map.get(&key) {
            return Ok(existing.clone());
        }
        self.append(&key, &v)?;
        map.insert(key, v.clone());
        Ok(v)
    }

    fn append(&self, key: &CacheKey, v: &BigFloat) -> Result<()> {
        let mut guard = self.writer.lock().expect("cache writer lock");
        if let Some(file) = guard.as_mut() {
            let line = format!("{}\t{}\t{}\n", key.label(), key.digits, v.to_decimal_string(key.digits + EXTRA_DIGITS));
            file.write_all(line.as_bytes()).map_err(MzvError::Io)?;
        }
        Ok(())
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.map.read().expect("cache lock").len(),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            loaded: self.loaded,
            skipped_lines: self.skipped,
        }
    }

    /// Entries sorted by key, for dumps.
    pub fn entries(&self) -> Vec<(CacheKey, BigFloat)> {
        let mut v: Vec<_> = self.map.read().expect("cache lock").iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

fn parse_record(line: &str) -> Option<(CacheKey, BigFloat)> {
    let mut it = line.split('\t');
    let (label, digits, value) = (it.next()?, it.next()?, it.next()?);
    if it.next().is_some() {
        return None;
    }
    let (regularized, idx) = match label.strip_prefix("reg:") {
        Some(rest) => (true, rest),
        None => (false, label),
    };
    let index: IndexSet = idx.parse().ok()?;
    let digits: u32 = digits.trim().parse().ok()?;
    let v = BigFloat::parse_with_bits(value, bits_for_digits(digits))?;
    Some((CacheKey { regularized, index, digits }, v))
}
