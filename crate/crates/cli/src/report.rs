//! Line-delimited JSON records, the trailing summary, and the table view.

use std::collections::BTreeMap;
use std::io::Write;

use divcert_core::Error;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Fail,
    Inconclusive,
    Partial,
}

/// Result of evaluating one grid point.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub result: Value,
}

impl Outcome {
    pub fn new(status: Status, result: impl Serialize) -> Self {
        Outcome {
            status,
            result: serde_json::to_value(result).expect("records serialize"),
        }
    }

    pub fn ok_if(holds: bool, result: impl Serialize) -> Self {
        Self::new(if holds { Status::Ok } else { Status::Fail }, result)
    }

    /// Maps an engine error at a single point to a recorded outcome, or
    /// `None` when it reflects bad input and should abort the run.
    pub fn from_error(e: &Error) -> Option<Self> {
        let status = match e {
            Error::Budget { .. } | Error::Overflow(_) => Status::Partial,
            Error::Exhausted(_) => Status::Inconclusive,
            Error::ClaimViolated(_) | Error::NotPolynomial => Status::Fail,
            _ => return None,
        };
        Some(Outcome::new(status, json!({ "error": e.to_string() })))
    }
}

/// One serialized record line. Keys come out sorted since `serde_json`
/// maps are ordered.
pub fn record_line(point: &Value, outcome: &Outcome) -> String {
    json!({ "point": point, "status": outcome.status, "result": outcome.result }).to_string()
}

pub fn line_status(line: &str) -> Option<Status> {
    let v: Value = serde_json::from_str(line).ok()?;
    serde_json::from_value(v.get("status")?.clone()).ok()
}

#[derive(Debug, Default, Clone, Serialize)]
pub struct Counts {
    pub fail: u64,
    pub inconclusive: u64,
    pub ok: u64,
    pub partial: u64,
}

impl Counts {
    pub fn add(&mut self, s: Status) {
        match s {
            Status::Ok => self.ok += 1,
            Status::Fail => self.fail += 1,
            Status::Inconclusive => self.inconclusive += 1,
            Status::Partial => self.partial += 1,
        }
    }

    /// 1 when any expected-true verdict failed, then 3 for budget-limited
    /// points, then 2 for inconclusive ones.
    pub fn exit_code(&self) -> u8 {
        if self.fail > 0 {
            1
        } else if self.partial > 0 {
            3
        } else if self.inconclusive > 0 {
            2
        } else {
            0
        }
    }
}

pub struct Summary<'a> {
    pub command: &'a str,
    pub parameters: &'a BTreeMap<String, Value>,
    pub counts: Counts,
    pub timing: Option<f64>,
}

impl Summary<'_> {
    fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("counts".into(), json!(self.counts));
        m.insert("engine_version".into(), json!(divcert_core::VERSION));
        m.insert("exit_code".into(), json!(self.counts.exit_code()));
        m.insert("parameters".into(), json!(self.parameters));
        let points = self.counts.ok + self.counts.fail + self.counts.inconclusive + self.counts.partial;
        m.insert("points".into(), json!(points));
        if let Some(t) = self.timing {
            m.insert("timing_s".into(), json!(t));
        }
        json!({ "summary": m })
    }
}

pub fn write_jsonl(out: &mut impl Write, lines: &[String], summary: &Summary) -> std::io::Result<()> {
    for l in lines {
        writeln!(out, "{l}")?;
    }
    writeln!(out, "{}", summary.to_value())
}

const CELL_WIDTH: usize = 40;

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    };
    if s.chars().count() > CELL_WIDTH {
        let mut t: String = s.chars().take(CELL_WIDTH - 3).collect();
        t.push_str("...");
        t
    } else {
        s
    }
}

/// Flattens `point` and `result` one level into named columns.
fn columns(line: &str) -> Vec<(String, String)> {
    let v: Value = serde_json::from_str(line).expect("record lines are JSON");
    let mut cols = Vec::new();
    for section in ["point", "result"] {
        match v.get(section) {
            Some(Value::Object(m)) => cols.extend(m.iter().map(|(k, x)| (k.clone(), cell(x)))),
            Some(other) => cols.push((section.to_string(), cell(other))),
            None => {}
        }
    }
    cols.push(("status".into(), cell(&v["status"])));
    cols
}

pub fn write_table(out: &mut impl Write, lines: &[String], summary: &Summary) -> std::io::Result<()> {
    let rows: Vec<Vec<(String, String)>> = lines.iter().map(|l| columns(l)).collect();
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let grid: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            header
                .iter()
                .map(|h| row.iter().find(|(k, _)| k == h).map_or_else(String::new, |(_, v)| v.clone()))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(i, h)| grid.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let render = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    if !header.is_empty() {
        writeln!(out, "{}", render(&header))?;
        for r in &grid {
            writeln!(out, "{}", render(r))?;
        }
    }
    let c = &summary.counts;
    write!(
        out,
        "{}: {} ok, {} fail, {} inconclusive, {} partial; exit {}",
        summary.command,
        c.ok,
        c.fail,
        c.inconclusive,
        c.partial,
        c.exit_code()
    )?;
    if let Some(t) = summary.timing {
        write!(out, "; {t:.3}s")?;
    }
    writeln!(out)
}
