//! Run reports and their CSV / JSON forms.
//!
//! CSV cells use shortest round-trip float formatting (exponent form for
//! very large or small magnitudes). JSON numbers are rounded to 12
//! significant digits; wall time is not written, so repeated runs produce
//! identical files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::Kind;

/// One invariant check: passes when `value <= limit`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub passed: bool,
}

impl Check {
    pub fn at_most(name: &str, value: f64, limit: f64) -> Self {
        Self { name: name.to_string(), value, limit, passed: value <= limit }
    }
}

/// Named columns over row-major data.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub scenario: String,
    pub kind: Kind,
    pub wall_time: f64,
    /// File names written, relative to the output directory.
    pub outputs: Vec<String>,
    pub headlines: BTreeMap<String, f64>,
    pub checks: Vec<Check>,
    pub error: Option<String>,
    pub table: Table,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }

    pub fn headline(&self, key: &str) -> Option<f64> {
        self.headlines.get(key).copied()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(JsonReport::from(self)).expect("report serialises")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("report serialises");
        s.push('\n');
        s
    }

    /// Writes `<name>.csv` (when a table exists) and `<name>.json` into
    /// `dir`, recording the file names in `outputs`.
    pub fn write(&mut self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        self.outputs.clear();
        if !self.table.columns.is_empty() {
            let name = format!("{}.csv", self.scenario);
            std::fs::write(dir.join(&name), self.table.to_csv())?;
            self.outputs.push(name);
        }
        let name = format!("{}.json", self.scenario);
        self.outputs.push(name.clone());
        std::fs::write(dir.join(&name), self.to_json())?;
        for o in &self.outputs {
            written.push(dir.join(o));
        }
        Ok(written)
    }

    /// One console line: status, name, kind, then any error or failed check.
    pub fn summary_line(&self) -> String {
        let mut s = format!("{} {} ({})", if self.passed() { "PASS" } else { "FAIL" }, self.scenario, self.kind);
        if let Some(e) = &self.error {
            let _ = write!(s, ": {e}");
        }
        for c in self.checks.iter().filter(|c| !c.passed) {
            let _ = write!(s, " [{} = {:e} > {:e}]", c.name, c.value, c.limit);
        }
        s
    }
}

/// `v` rounded to 12 significant digits; non-finite values become `null`.
pub fn round12(v: f64) -> serde_json::Value {
    if !v.is_finite() {
        return serde_json::Value::Null;
    }
    let r: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    serde_json::Value::from(r)
}

#[derive(Serialize)]
struct JsonCheck {
    name: String,
    passed: bool,
    value: serde_json::Value,
    limit: serde_json::Value,
}

#[derive(Serialize)]
struct JsonReport {
    scenario: String,
    kind: String,
    status: &'static str,
    error: Option<String>,
    outputs: Vec<String>,
    headlines: BTreeMap<String, serde_json::Value>,
    checks: Vec<JsonCheck>,
}

impl From<&RunReport> for JsonReport {
    fn from(r: &RunReport) -> Self {
        Self {
            scenario: r.scenario.clone(),
            kind: r.kind.to_string(),
            status: if r.passed() { "pass" } else { "fail" },
            error: r.error.clone(),
            outputs: r.outputs.clone(),
            headlines: r.headlines.iter().map(|(k, v)| (k.clone(), round12(*v))).collect(),
            checks: r
                .checks
                .iter()
                .map(|c| JsonCheck { name: c.name.clone(), passed: c.passed, value: round12(c.value), limit: round12(c.limit) })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round12(1.234_567_890_123_456), serde_json::json!(1.23456789012));
        assert_eq!(round12(f64::NAN), serde_json::Value::Null);
        assert_eq!(round12(13.154_262_764_010_74), serde_json::json!(13.154262764));
    }

    #[test]
    fn csv_round_trips() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec![0.1 + 0.2, 1e-300]);
        let csv = t.to_csv();
        let cells: Vec<f64> = csv.lines().nth(1).unwrap().split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cells, vec![0.1 + 0.2, 1e-300]);
    }
}
