//! Resumable progress for grid runs.
//!
//! The checkpoint file holds a header line (format, engine version, command
//! fingerprint) and a state line with the cursor. Record lines for points
//! before the cursor live in `<checkpoint>.partial`. Records are appended
//! and synced before the checkpoint is replaced, so the partial file may run
//! ahead of the cursor but never behind it.

use std::ffi::OsString;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliError;

const FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Header {
    divcert_checkpoint: u32,
    engine_version: String,
    fingerprint: String,
}

#[derive(Serialize, Deserialize)]
struct State {
    cursor: usize,
    partial: String,
}

pub struct Checkpoint {
    path: PathBuf,
    partial: PathBuf,
    fingerprint: String,
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut s: OsString = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Replaces `path` with `contents` via a temporary file and rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = sibling(path, ".tmp");
    let mut f = File::create(&tmp).map_err(CliError::io(&tmp))?;
    f.write_all(contents.as_bytes()).map_err(CliError::io(&tmp))?;
    f.sync_all().map_err(CliError::io(&tmp))?;
    fs::rename(&tmp, path).map_err(CliError::io(path))
}

impl Checkpoint {
    pub fn new(path: &Path, fingerprint: String) -> Self {
        Checkpoint {
            path: path.to_path_buf(),
            partial: sibling(path, ".partial"),
            fingerprint,
        }
    }

    fn refuse(&self, reason: impl Into<String>) -> CliError {
        CliError::Checkpoint {
            path: self.path.clone(),
            reason: reason.into(),
        }
    }

    /// Record lines already processed, or empty when there is nothing to
    /// resume.
    pub fn load(&self) -> Result<Vec<String>, CliError> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                let _ = fs::remove_file(&self.partial);
                return Ok(Vec::new());
            }
            Err(e) => return Err(CliError::io(&self.path)(e)),
        };
        let mut lines = text.lines();
        let header: Header = lines
            .next()
            .and_then(|l| serde_json::from_str(l).ok())
            .ok_or_else(|| self.refuse("unreadable header"))?;
        if header.divcert_checkpoint != FORMAT || header.engine_version != divcert_core::VERSION {
            return Err(self.refuse(format!(
                "written by engine {} (format {}), this is {}; refusing to resume",
                header.engine_version,
                header.divcert_checkpoint,
                divcert_core::VERSION
            )));
        }
        if header.fingerprint != self.fingerprint {
            return Err(self.refuse("belongs to a different command or parameters"));
        }
        let state: State = lines
            .next()
            .and_then(|l| serde_json::from_str(l).ok())
            .ok_or_else(|| self.refuse("unreadable state"))?;
        let partial = fs::read_to_string(&self.partial).unwrap_or_default();
        let done: Vec<String> = partial.lines().take(state.cursor).map(str::to_string).collect();
        if done.len() < state.cursor {
            return Err(self.refuse(format!(
                "partial results hold {} records, cursor is {}",
                done.len(),
                state.cursor
            )));
        }
        // drop records written after the last committed cursor
        let mut body = done.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        if body.len() != partial.len() {
            write_atomic(&self.partial, &body)?;
        }
        Ok(done)
    }

    pub fn commit(&self, new_lines: &[String], cursor: usize) -> Result<(), CliError> {
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.partial)
            .map_err(CliError::io(&self.partial))?;
        let mut buf = String::new();
        for l in new_lines {
            buf.push_str(l);
            buf.push('\n');
        }
        f.write_all(buf.as_bytes()).map_err(CliError::io(&self.partial))?;
        f.sync_data().map_err(CliError::io(&self.partial))?;
        let header = Header {
            divcert_checkpoint: FORMAT,
            engine_version: divcert_core::VERSION.to_string(),
            fingerprint: self.fingerprint.clone(),
        };
        let state = State {
            cursor,
            partial: self.partial.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
        };
        let text = format!(
            "{}\n{}\n",
            serde_json::to_string(&header).expect("header serializes"),
            serde_json::to_string(&state).expect("state serializes")
        );
        write_atomic(&self.path, &text)
    }

    pub fn finish(&self) -> Result<(), CliError> {
        for p in [&self.path, &self.partial] {
            match fs::remove_file(p) {
                Err(e) if e.kind() != std::io::ErrorKind::NotFound => return Err(CliError::io(p)(e)),
                _ => {}
            }
        }
        Ok(())
    }
}
