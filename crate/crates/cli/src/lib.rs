//! Config-driven front end for `vacuum-core`.
//!
//! Each scenario in a TOML config names a kind (see [`Kind`]) and its
//! parameters. Running it writes `<name>.csv` (plot-ready columns,
//! documented per kind in [`run`]) and `<name>.json` (headline numbers and
//! invariant checks) into the output directory.
//!
//! JSON schema:
//!
//! ```text
//! {
//!   "scenario": string, "kind": string, "status": "pass" | "fail",
//!   "error": string | null, "outputs": [file names],
//!   "headlines": { name: number | null },
//!   "checks": [ { "name": string, "passed": bool, "value": number, "limit": number } ]
//! }
//! ```

pub mod config;
pub mod report;
pub mod run;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

pub use config::{parse_config, parse_config_str, ConfigError, Kind, Params, Scenario};
pub use report::{Check, RunReport, Table};
pub use run::run_scenario;

/// Environment variable naming the default output directory.
pub const OUT_ENV: &str = "VACUUM_AMP_OUT";
/// Output directory when neither `--out` nor [`OUT_ENV`] is given.
pub const DEFAULT_OUT: &str = "vacuum-amp-out";

/// `--out`, then `VACUUM_AMP_OUT`, then [`DEFAULT_OUT`].
pub fn resolve_out_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(OUT_ENV) {
        Some(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(DEFAULT_OUT),
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool")
}

/// Runs every scenario (in parallel when `jobs > 1`) and writes its outputs.
/// Reports come back in config order.
pub fn run_all(scenarios: &[Scenario], out_dir: &Path, jobs: usize) -> std::io::Result<Vec<RunReport>> {
    let mut reports: Vec<RunReport> = if jobs > 1 {
        pool(jobs).install(|| scenarios.par_iter().map(run_scenario).collect())
    } else {
        scenarios.iter().map(run_scenario).collect()
    };
    for r in &mut reports {
        r.write(out_dir)?;
    }
    Ok(reports)
}

/// One sweep point: the axis value and its report.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub value: f64,
    pub report: RunReport,
}

/// Reruns `scenario` with `axis` set to each value. The axis must name a
/// numeric parameter of the kind; a bad value only fails its own point.
pub fn sweep(scenario: &Scenario, axis: &str, values: &[f64], jobs: usize) -> Result<Vec<SweepPoint>, ConfigError> {
    if let Some(&v) = values.first() {
        if let Err(e) = scenario.with_param(axis, v) {
            if e.key() == Some(axis) && e.to_string().contains("unknown field") {
                return Err(e);
            }
        }
    }
    if let Some(existing) = scenario.raw.get(axis) {
        if !(existing.is_float() || existing.is_integer()) {
            return Err(ConfigError::Schema {
                scenario: scenario.name.clone(),
                key: axis.to_string(),
                message: "sweep axis must be a numeric parameter".into(),
            });
        }
    }
    let point = |&value: &f64| {
        let report = match scenario.with_param(axis, value) {
            Ok(s) => run_scenario(&s),
            Err(e) => RunReport {
                scenario: scenario.name.clone(),
                kind: scenario.kind,
                wall_time: 0.0,
                outputs: Vec::new(),
                headlines: Default::default(),
                checks: Vec::new(),
                error: Some(e.to_string()),
                table: Table::default(),
            },
        };
        SweepPoint { value, report }
    };
    Ok(if jobs > 1 { pool(jobs).install(|| values.par_iter().map(point).collect()) } else { values.iter().map(point).collect() })
}

/// Combined sweep table: the axis, a pass flag (1 or 0), then every headline
/// seen in any point (missing values are NaN).
pub fn sweep_table(axis: &str, points: &[SweepPoint]) -> Table {
    let keys: BTreeSet<&String> = points.iter().flat_map(|p| p.report.headlines.keys()).collect();
    let mut columns = vec![axis.to_string(), "passed".to_string()];
    columns.extend(keys.iter().map(|k| k.to_string()));
    let rows = points
        .iter()
        .map(|p| {
            let mut row = vec![p.value, if p.report.passed() { 1.0 } else { 0.0 }];
            row.extend(keys.iter().map(|k| p.report.headlines.get(*k).copied().unwrap_or(f64::NAN)));
            row
        })
        .collect();
    Table { columns, rows }
}

/// Writes `<name>_sweep_<axis>.csv` and `.json`; returns the paths.
pub fn write_sweep(scenario: &Scenario, axis: &str, points: &[SweepPoint], out_dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let stem = format!("{}_sweep_{}", scenario.name, axis);
    let csv = out_dir.join(format!("{stem}.csv"));
    std::fs::write(&csv, sweep_table(axis, points).to_csv())?;
    let json: Vec<serde_json::Value> = points
        .iter()
        .map(|p| {
            let mut v = p.report.to_json_value();
            v["axis"] = serde_json::Value::from(axis);
            v["axis_value"] = report::round12(p.value);
            v
        })
        .collect();
    let path = out_dir.join(format!("{stem}.json"));
    let mut text = serde_json::to_string_pretty(&json).expect("sweep serialises");
    text.push('\n');
    std::fs::write(&path, text)?;
    Ok(vec![csv, path])
}
