//! Verification reports: JSON documents and a plain-text summary table.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;
use std::time::Duration;

use rectcount_core::verify::Outcome;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub params: BTreeMap<String, i64>,
    /// Exact decimal values.
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub grid: String,
    pub tuples_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<FailureRecord>,
    pub seed: Option<u64>,
    pub wall_time_ms: u64,
    pub status: Status,
}

impl Report {
    pub fn from_outcome(outcome: Outcome, elapsed: Duration) -> Self {
        let status = if outcome.passed() { Status::Pass } else { Status::Fail };
        Report {
            check: outcome.check,
            grid: outcome.grid,
            tuples_checked: outcome.tuples_checked,
            failure_count: outcome.failure_count,
            failures: outcome
                .failures
                .into_iter()
                .map(|f| FailureRecord {
                    params: f.params.into_iter().map(|(k, v)| (k.to_owned(), v)).collect(),
                    lhs: f.lhs.to_string(),
                    rhs: f.rhs.to_string(),
                    detail: f.detail,
                })
                .collect(),
            seed: outcome.seed,
            wall_time_ms: elapsed.as_millis() as u64,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// One report is written as an object, several as an array.
pub fn to_json(reports: &[Report]) -> serde_json::Result<String> {
    match reports {
        [single] => serde_json::to_string_pretty(single),
        many => serde_json::to_string_pretty(many),
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never see a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.write_all(b"\n")?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn render_table(reports: &[Report]) -> String {
    let rows: Vec<[String; 6]> = reports
        .iter()
        .map(|r| {
            [
                r.check.clone(),
                format!("{:?}", r.status).to_uppercase(),
                r.tuples_checked.to_string(),
                r.failure_count.to_string(),
                format!("{}ms", r.wall_time_ms),
                r.grid.clone(),
            ]
        })
        .collect();
    let header = ["check", "status", "tuples", "failures", "time", "grid"].map(str::to_owned);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        for f in &r.failures {
            let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(out, "  {} counterexample {}: lhs={} rhs={}", r.check, params.join(" "), f.lhs, f.rhs);
            if let Some(d) = &f.detail {
                let _ = write!(out, " ({d})");
            }
            out.push('\n');
        }
        if r.failure_count > r.failures.len() as u64 {
            let _ = writeln!(out, "  {} ... {} more not recorded", r.check, r.failure_count - r.failures.len() as u64);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rectcount_core::verify::Failure;
    use rectcount_core::BigInt;

    fn failing() -> Report {
        let outcome = Outcome {
            check: "klee".into(),
            grid: "k=0..1 m=0..1".into(),
            tuples_checked: 4,
            failure_count: 1,
            failures: vec![Failure {
                params: vec![("k", 1), ("m", 1)],
                lhs: BigInt::from(-1),
                rhs: BigInt::from(0),
                detail: None,
            }],
            seed: None,
        };
        Report::from_outcome(outcome, Duration::from_millis(3))
    }

    #[test]
    fn json_round_trip() {
        let r = failing();
        let json = to_json(std::slice::from_ref(&r)).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["status"], "FAIL");
        assert_eq!(v["failures"][0]["lhs"], "-1");
        assert!(to_json(&[r.clone(), r]).unwrap().starts_with('['));
    }

    #[test]
    fn table_lists_counterexamples() {
        let table = render_table(&[failing()]);
        assert!(table.lines().next().unwrap().starts_with("check"));
        assert!(table.contains("klee counterexample k=1 m=1: lhs=-1 rhs=0"));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        write_atomic(&path, "{}").unwrap();
        write_atomic(&path, "[]").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "[]\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
