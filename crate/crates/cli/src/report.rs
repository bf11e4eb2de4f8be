//! JSON report plumbing: schema-stable values, float formatting, hashing.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Schema version stamped into every JSON report.
pub const SCHEMA: u64 = 1;

/// Rounds to six significant digits; reports print floats at this precision.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mag = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(5 - mag);
    (x * factor).round() / factor
}

pub fn json_f64(x: f64) -> Value {
    serde_json::Number::from_f64(sig6(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn json_f64_list(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| json_f64(x)).collect())
}

/// Collapses numerical noise below the tolerance to an exact zero.
pub fn snap_zero(x: f64, tol: f64) -> f64 {
    if x.abs() <= tol {
        0.0
    } else {
        x
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// One named pass/fail outcome with an optional witness note.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub note: Option<String>,
}

impl Check {
    pub fn of(name: &str, pass: bool, note: Option<String>) -> Check {
        Check {
            name: name.to_string(),
            pass,
            note,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "witness": self.note,
        })
    }
}

pub fn checks_json(checks: &[Check]) -> Value {
    Value::Array(checks.iter().map(Check::to_json).collect())
}

pub fn print_checks(checks: &[Check]) {
    for c in checks {
        if c.pass {
            println!("PASS {}", c.name);
        } else {
            println!(
                "FAIL {}{}",
                c.name,
                c.note.as_deref().map(|n| format!(": {n}")).unwrap_or_default()
            );
        }
    }
}
