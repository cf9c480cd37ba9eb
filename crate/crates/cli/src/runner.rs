//! Evaluates grid points in order, optionally checkpointing, and writes the
//! report.

use std::collections::BTreeMap;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use divcert_core::parallel::ordered_map;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::checkpoint::Checkpoint;
use crate::error::CliError;
use crate::report::{line_status, record_line, write_jsonl, write_table, Counts, Outcome, Summary};

pub struct RunOptions {
    pub table: bool,
    pub timing: bool,
    pub par: usize,
    pub checkpoint: Option<PathBuf>,
    pub max_points: Option<usize>,
}

/// Exit code for a run stopped by `--max-points` before finishing.
pub const EXIT_INTERRUPTED: u8 = 3;

pub fn fingerprint(command: &str, parameters: &BTreeMap<String, Value>) -> String {
    let canonical = json!({
        "command": command,
        "engine_version": divcert_core::VERSION,
        "parameters": parameters,
    });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

pub fn run<P, F>(
    command: &str,
    parameters: &BTreeMap<String, Value>,
    points: &[P],
    eval: F,
    opts: &RunOptions,
) -> Result<u8, CliError>
where
    P: Serialize + Sync,
    F: Fn(&P) -> Result<Outcome, CliError> + Sync,
{
    let start = Instant::now();
    let checkpoint = opts
        .checkpoint
        .as_deref()
        .map(|p| Checkpoint::new(p, fingerprint(command, parameters)));
    let mut lines = match &checkpoint {
        Some(c) => c.load()?,
        None => Vec::new(),
    };
    if lines.len() > points.len() {
        return Err(CliError::Usage("checkpoint is ahead of the grid".into()));
    }
    if !lines.is_empty() {
        eprintln!("resuming at point {} of {}", lines.len(), points.len());
    }
    let chunk = opts.par.max(1) * 8;
    let mut budget = opts.max_points.unwrap_or(usize::MAX);
    while lines.len() < points.len() {
        if budget == 0 {
            eprintln!(
                "stopped after {} of {} points; rerun the same command to resume",
                lines.len(),
                points.len()
            );
            return Ok(EXIT_INTERRUPTED);
        }
        let take = chunk.min(budget).min(points.len() - lines.len());
        let batch = &points[lines.len()..lines.len() + take];
        let outcomes = ordered_map(opts.par, batch, |p| eval(p));
        let mut new_lines = Vec::with_capacity(take);
        for (p, o) in batch.iter().zip(outcomes) {
            let point = serde_json::to_value(p).expect("points serialize");
            new_lines.push(record_line(&point, &o?));
        }
        if let Some(c) = &checkpoint {
            c.commit(&new_lines, lines.len() + new_lines.len())?;
        }
        lines.extend(new_lines);
        budget -= take;
    }
    let mut counts = Counts::default();
    for l in &lines {
        counts.add(line_status(l).ok_or_else(|| CliError::Usage(format!("malformed record: {l}")))?);
    }
    let elapsed = start.elapsed().as_secs_f64();
    let summary = Summary {
        command,
        parameters,
        counts,
        timing: opts.timing.then_some(elapsed),
    };
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let written = if opts.table {
        write_table(&mut out, &lines, &summary)
    } else {
        write_jsonl(&mut out, &lines, &summary)
    };
    written.and_then(|_| out.flush()).map_err(CliError::io("<stdout>"))?;
    if let Some(c) = &checkpoint {
        c.finish()?;
    }
    if !opts.timing {
        eprintln!("elapsed {elapsed:.3}s");
    }
    Ok(summary.counts.exit_code())
}
