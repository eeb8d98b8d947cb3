use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::TOOL_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run because an instance exceeded a cap.
    Skipped,
    /// Exploratory measurement with no asserted ground truth.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub claim: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub elapsed_ms: f64,
}

impl ReportEntry {
    pub fn new(
        claim: impl Into<String>,
        instance: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        status: Status,
        elapsed: Duration,
    ) -> Self {
        ReportEntry {
            claim: claim.into(),
            instance: instance.into(),
            expected: expected.into(),
            computed: computed.into(),
            status,
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
        }
    }

    /// Pass when `expected == computed`, fail otherwise.
    pub fn compare(
        claim: impl Into<String>,
        instance: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        elapsed: Duration,
    ) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self::new(claim, instance, expected, computed, status, elapsed)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub info: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub tool_version: String,
    pub caps: BTreeMap<String, usize>,
}

impl Default for Environment {
    fn default() -> Self {
        Environment {
            tool_version: TOOL_VERSION.to_string(),
            caps: BTreeMap::new(),
        }
    }
}

/// Append-only record of verification results.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    entries: Vec<ReportEntry>,
    summary: Summary,
    environment: Environment,
}

impl VerificationReport {
    pub fn new(environment: Environment) -> Self {
        VerificationReport {
            entries: Vec::new(),
            summary: Summary::default(),
            environment,
        }
    }

    pub fn push(&mut self, entry: ReportEntry) {
        match entry.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
            Status::Info => self.summary.info += 1,
        }
        self.entries.push(entry);
    }

    /// Appends another report's entries and merges its caps.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.environment.caps.extend(other.environment.caps);
        for e in other.entries {
            self.push(e);
        }
    }

    pub fn entries(&self) -> &[ReportEntry] {
        &self.entries
    }

    pub fn summary(&self) -> &Summary {
        &self.summary
    }

    pub fn environment(&self) -> &Environment {
        &self.environment
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    /// The report with every timing zeroed, for comparing runs.
    pub fn without_timings(&self) -> VerificationReport {
        let mut out = self.clone();
        for e in &mut out.entries {
            e.elapsed_ms = 0.0;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let header = ["claim", "instance", "expected", "computed", "status", "ms"];
        let rows: Vec<[String; 6]> = self
            .entries
            .iter()
            .map(|e| {
                [
                    e.claim.clone(),
                    e.instance.clone(),
                    e.expected.clone(),
                    e.computed.replace('\n', " | "),
                    e.status.as_str().to_string(),
                    format!("{:.1}", e.elapsed_ms),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[&str]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                let _ = write!(s, "{cell:<w$}");
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&header);
        for row in &rows {
            line(&row.iter().map(String::as_str).collect::<Vec<_>>());
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "pass {}  fail {}  skipped {}  info {}",
            s.pass, s.fail, s.skipped, s.info
        );
        out
    }
}
