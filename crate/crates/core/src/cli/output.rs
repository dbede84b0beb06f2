//! The machine-readable output record.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::wigner::WignerMatrix;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorPayload>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorPayload {
    pub kind: String,
    pub message: String,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            result,
            warning: None,
            error: None,
        }
    }

    pub fn failure(command: &str, inputs: Value, kind: &str, message: String) -> Self {
        let mut r = OutputRecord::new(command, inputs, Value::Null);
        r.error = Some(ErrorPayload { kind: kind.to_string(), message });
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output record serializes")
    }
}

pub fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Row-major nested arrays of `[re, im]` pairs.
pub fn matrix_json(t: &WignerMatrix) -> Value {
    Value::Array(
        t.rows()
            .map(|row| Value::Array(row.iter().map(|&z| complex_json(z)).collect()))
            .collect(),
    )
}

/// One line per row, entries written as `re+imj`.
pub fn matrix_csv(t: &WignerMatrix) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(|z| format!("{}{:+}j", z.re, z.im)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcomb::HalfInt;

    #[test]
    fn record_round_trips() {
        let mut r = OutputRecord::new("dmat", json!({"l_x2": 1}), json!({"value": [1.0, -0.5]}));
        r.warning = Some("fell back".into());
        let back: OutputRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let f = OutputRecord::failure("poly", json!({}), "domain", "bad".into());
        let back: OutputRecord = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert!(!r.to_json().contains("\"error\""));
    }

    #[test]
    fn csv_cells() {
        let t = WignerMatrix::from_entries(
            HalfInt::HALF,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.5, -2.0),
                Complex64::new(-1.0, 0.25),
                Complex64::new(0.0, 1.0),
            ],
        )
        .unwrap();
        assert_eq!(matrix_csv(&t), "1+0j,0.5-2j\n-1+0.25j,0+1j\n");
        assert_eq!(matrix_json(&t)[0][1], json!([0.5, -2.0]));
    }
}
