//! Numeric table emission: CSV (comma separated, header line, LF endings,
//! 17 significant digits so floats round-trip losslessly) and JSON with a
//! `meta` object and a `rows` array.

use crate::error::{Error, Result};
use serde_json::{json, Value};

/// Format a float with 17 significant digits (lossless f64 round trip).
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// A column-labelled table of floats.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| format_float(x)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::CsvParse("empty input".into()))?;
        let columns: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
        let mut rows = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row: Vec<f64> = line
                .split(',')
                .map(|cell| {
                    cell.trim().parse::<f64>().map_err(|e| {
                        Error::CsvParse(format!("line {}: `{cell}`: {e}", lineno + 2))
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != columns.len() {
                return Err(Error::CsvParse(format!(
                    "line {}: expected {} cells, found {}",
                    lineno + 2,
                    columns.len(),
                    row.len()
                )));
            }
            rows.push(row);
        }
        Ok(Self { columns, rows })
    }

    /// JSON document `{ "meta": {..., "columns": [...]}, "rows": [[...]] }`.
    pub fn to_json(&self, mut meta: Value) -> Value {
        if let Value::Object(map) = &mut meta {
            map.insert("columns".into(), json!(self.columns));
        }
        json!({ "meta": meta, "rows": self.rows })
    }
}
