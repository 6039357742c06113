//! On-disk formats: signal files, error-trace and profile CSVs, and the JSON
//! results document.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ltd_core::experiments::{AggregateRow, ProfileCurve, SuiteConfig, TrialRecord};
use ltd_core::TraceEntry;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const SIGNAL_HEADER: &str = "value";
pub const TRACE_HEADER: &str = "pass,k,E";
pub const PROFILE_HEADER: &str = "algorithm,tau,rho";
pub const SCHEMA_VERSION: &str = "1";

/// One sample per line with 17 significant digits, under a `value` header.
pub fn format_signal(values: &[f64]) -> String {
    let mut out = String::with_capacity(24 * (values.len() + 1));
    out.push_str(SIGNAL_HEADER);
    out.push('\n');
    for v in values {
        writeln!(out, "{v:.16e}").unwrap();
    }
    out
}

/// Parses a signal file. The `value` header is optional and blank lines are
/// skipped; any other line must hold one finite number.
pub fn parse_signal(text: &str, path: &Path) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || (i == 0 && line == SIGNAL_HEADER) {
            continue;
        }
        let parse_err = |message: String| CliError::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            message,
        };
        let v: f64 = line
            .parse()
            .map_err(|_| parse_err(format!("not a number: `{line}`")))?;
        if !v.is_finite() {
            return Err(parse_err(format!("non-finite value `{line}`")));
        }
        values.push(v);
    }
    Ok(values)
}

pub fn read_signal(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_signal(&text, path)
}

pub fn write_signal(path: &Path, values: &[f64]) -> Result<()> {
    write_text(path, &format_signal(values))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Accepted candidates of an LTD run as `pass,k,E` rows.
pub fn format_trace(trace: &[TraceEntry<f64>]) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for e in trace.iter().filter(|e| e.accepted) {
        writeln!(out, "{},{},{:.16e}", e.pass, e.k, e.error).unwrap();
    }
    out
}

pub fn format_profile(curves: &[ProfileCurve]) -> String {
    let mut out = String::from(PROFILE_HEADER);
    out.push('\n');
    for c in curves {
        for (tau, rho) in &c.points {
            writeln!(out, "{},{tau},{rho}", c.algorithm).unwrap();
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultsDocument {
    pub schema_version: String,
    /// Suite configuration echo; hand-written documents may omit it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<SuiteConfig>,
    pub records: Vec<TrialRecord>,
    #[serde(default)]
    pub aggregate: Vec<AggregateRow>,
}

impl ResultsDocument {
    pub fn new(
        config: SuiteConfig,
        records: Vec<TrialRecord>,
        aggregate: Vec<AggregateRow>,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            config: Some(config),
            records,
            aggregate,
        }
    }

    /// Copy with every wall-clock field zeroed, for reproducibility checks.
    pub fn normalized(&self) -> Self {
        let mut doc = self.clone();
        for r in &mut doc.records {
            r.elapsed_seconds = 0.0;
        }
        for row in &mut doc.aggregate {
            row.mean_time = row.mean_time.map(|_| 0.0);
        }
        doc
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("results serialise");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str, path: &Path) -> Result<Self> {
        let schema = |message: String| CliError::Schema {
            path: path.to_path_buf(),
            message,
        };
        let doc: Self = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(schema(format!(
                "unsupported schema_version `{}` (expected `{SCHEMA_VERSION}`)",
                doc.schema_version
            )));
        }
        if let Some(c) = &doc.config {
            let expected = c.sizes.len() * c.trials_per_size * c.algorithms.len();
            if doc.records.len() != expected {
                return Err(schema(format!(
                    "{} records, expected sizes × trials × algorithms = {expected}",
                    doc.records.len()
                )));
            }
        }
        Ok(doc)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text, path)
    }
}
