#![allow(dead_code)]

use std::path::{Path, PathBuf};

use serde_json::Value;
use vacuum_amp::{parse_config, run_all, RunReport};

/// Relative tolerance for floating fields in golden comparisons.
pub const GOLDEN_RTOL: f64 = 1e-9;
/// Values this small are compared absolutely; they are round-off residuals.
pub const GOLDEN_ATOL: f64 = 1e-12;

/// The CLI crate directory; also resolves when this module is shared with
/// a sibling crate's tests.
pub fn crate_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).parent().expect("crates directory").join("cli")
}

pub fn config_path(file: &str) -> PathBuf {
    crate_dir().join("configs").join(file)
}

pub fn golden_dir() -> PathBuf {
    crate_dir().join("tests").join("golden")
}

pub fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= GOLDEN_ATOL || (a - b).abs() <= GOLDEN_RTOL * a.abs().max(b.abs())
}

pub fn compare_csv(actual: &str, expected: &str) -> Result<(), String> {
    let (a, e): (Vec<&str>, Vec<&str>) = (actual.lines().collect(), expected.lines().collect());
    if a.first() != e.first() {
        return Err(format!("header differs: {:?} vs {:?}", a.first(), e.first()));
    }
    if a.len() != e.len() {
        return Err(format!("{} rows vs {} expected", a.len(), e.len()));
    }
    for (i, (ra, re)) in a.iter().zip(&e).enumerate().skip(1) {
        let ca: Vec<&str> = ra.split(',').collect();
        let ce: Vec<&str> = re.split(',').collect();
        if ca.len() != ce.len() {
            return Err(format!("row {i}: {} cells vs {}", ca.len(), ce.len()));
        }
        for (x, y) in ca.iter().zip(&ce) {
            let (fx, fy): (f64, f64) =
                (x.parse().map_err(|_| format!("bad cell {x}"))?, y.parse().map_err(|_| format!("bad cell {y}"))?);
            if !(close(fx, fy) || (fx.is_nan() && fy.is_nan())) {
                return Err(format!("row {i}: {x} vs {y}"));
            }
        }
    }
    Ok(())
}

pub fn compare_json(actual: &Value, expected: &Value, path: &str) -> Result<(), String> {
    match (actual, expected) {
        (Value::Number(a), Value::Number(e)) => {
            let (a, e) = (a.as_f64().unwrap(), e.as_f64().unwrap());
            if close(a, e) {
                Ok(())
            } else {
                Err(format!("{path}: {a} vs {e}"))
            }
        }
        (Value::Object(a), Value::Object(e)) => {
            if a.keys().ne(e.keys()) {
                return Err(format!("{path}: keys {:?} vs {:?}", a.keys().collect::<Vec<_>>(), e.keys().collect::<Vec<_>>()));
            }
            a.iter().try_for_each(|(k, v)| compare_json(v, &e[k], &format!("{path}.{k}")))
        }
        (Value::Array(a), Value::Array(e)) => {
            if a.len() != e.len() {
                return Err(format!("{path}: length {} vs {}", a.len(), e.len()));
            }
            a.iter().zip(e).enumerate().try_for_each(|(i, (x, y))| compare_json(x, y, &format!("{path}[{i}]")))
        }
        _ if actual == expected => Ok(()),
        _ => Err(format!("{path}: {actual} vs {expected}")),
    }
}

/// Runs a shipped config into `out` and checks every output file against
/// `tests/golden`. With `UPDATE_GOLDEN=1` the golden files are rewritten.
pub fn check_golden(config: &str, out: &Path) -> Result<Vec<RunReport>, String> {
    let scenarios = parse_config(&config_path(config)).map_err(|e| e.to_string())?;
    let reports = run_all(&scenarios, out, 1).map_err(|e| e.to_string())?;
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for r in &reports {
        for file in &r.outputs {
            let actual = std::fs::read_to_string(out.join(file)).map_err(|e| e.to_string())?;
            let golden = golden_dir().join(file);
            if update {
                std::fs::create_dir_all(golden_dir()).map_err(|e| e.to_string())?;
                std::fs::write(&golden, &actual).map_err(|e| e.to_string())?;
                continue;
            }
            let expected = std::fs::read_to_string(&golden).map_err(|e| format!("{}: {e}", golden.display()))?;
            if file.ends_with(".csv") {
                compare_csv(&actual, &expected).map_err(|e| format!("{file}: {e}"))?;
            } else {
                let a: Value = serde_json::from_str(&actual).map_err(|e| e.to_string())?;
                let x: Value = serde_json::from_str(&expected).map_err(|e| e.to_string())?;
                compare_json(&a, &x, "").map_err(|e| format!("{file}: {e}"))?;
            }
        }
    }
    Ok(reports)
}

/// Shipped config for every scenario kind.
pub const KIND_CONFIGS: [(&str, &str); 8] = [
    ("paramp", "paramp.toml"),
    ("quench", "quench.toml"),
    ("swing", "swing.toml"),
    ("unruh", "unruh.toml"),
    ("blackhole", "blackhole.toml"),
    ("dce_cavity", "dce_cavity.toml"),
    ("dce_receding", "dce_receding.toml"),
    ("squid_horizon", "squid_reference.toml"),
];
