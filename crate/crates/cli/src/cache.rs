//! Append-only log of definitive `f(a, b)` results.
//!
//! First line is a header naming the format and engine version; every other
//! line is one `FabResult`. Loading drops unreadable lines with a warning and
//! rewrites the file, sorted and deduplicated, whenever it was not clean.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use divcert_core::divisibility::{FabResult, FabVerdict};
use serde::{Deserialize, Serialize};

use crate::checkpoint::write_atomic;
use crate::error::CliError;

const FORMAT: u32 = 1;

#[derive(Serialize, Deserialize, PartialEq)]
struct Header {
    divcert_cache: u32,
    engine_version: String,
}

fn header() -> Header {
    Header {
        divcert_cache: FORMAT,
        engine_version: divcert_core::VERSION.to_string(),
    }
}

pub struct FabCache {
    path: PathBuf,
    entries: Mutex<BTreeMap<(u64, u64), FabResult>>,
}

impl FabCache {
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let text = match fs::read_to_string(path) {
            Ok(t) => Some(t),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => return Err(CliError::io(path)(e)),
        };
        let mut entries = BTreeMap::new();
        let mut dirty = true;
        if let Some(text) = text {
            let mut lines = text.lines();
            let head: Option<Header> = lines.next().and_then(|l| serde_json::from_str(l).ok());
            if head.as_ref() == Some(&header()) {
                dirty = !text.ends_with('\n');
                for (i, line) in lines.enumerate() {
                    match serde_json::from_str::<FabResult>(line) {
                        Ok(r) => {
                            if entries.insert((r.a, r.b), r).is_some() {
                                dirty = true;
                            }
                        }
                        Err(_) => {
                            eprintln!("warning: {}: dropping corrupt line {}", path.display(), i + 2);
                            dirty = true;
                        }
                    }
                }
            } else {
                eprintln!(
                    "warning: {}: header does not match engine {}; starting a fresh cache",
                    path.display(),
                    divcert_core::VERSION
                );
            }
        }
        let cache = FabCache {
            path: path.to_path_buf(),
            entries: Mutex::new(entries),
        };
        if dirty {
            cache.compact()?;
        }
        Ok(cache)
    }

    /// Rewrites the log as header plus one line per entry in `(a, b)` order.
    pub fn compact(&self) -> Result<(), CliError> {
        let entries = self.entries.lock().expect("cache lock");
        let mut text = serde_json::to_string(&header()).expect("header serializes");
        text.push('\n');
        for r in entries.values() {
            text.push_str(&serde_json::to_string(r).expect("results serialize"));
            text.push('\n');
        }
        write_atomic(&self.path, &text)
    }

    pub fn get(&self, a: u64, b: u64) -> Option<FabResult> {
        self.entries.lock().expect("cache lock").get(&(a, b)).cloned()
    }

    /// Records found and proven-zero results; inconclusive ones depend on
    /// the cap and are not kept.
    pub fn insert(&self, r: &FabResult) -> Result<(), CliError> {
        if matches!(r.verdict, FabVerdict::Inconclusive { .. }) {
            return Ok(());
        }
        let mut entries = self.entries.lock().expect("cache lock");
        if entries.contains_key(&(r.a, r.b)) {
            return Ok(());
        }
        let mut f = OpenOptions::new()
            .append(true)
            .open(&self.path)
            .map_err(CliError::io(&self.path))?;
        let mut line = serde_json::to_string(r).expect("results serialize");
        line.push('\n');
        f.write_all(line.as_bytes()).map_err(CliError::io(&self.path))?;
        entries.insert((r.a, r.b), r.clone());
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }
}
