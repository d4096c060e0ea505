//! Rendering of the JSON report as JSON, text or CSV.

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(report: &Value, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Text => Ok(text(report)),
        Format::Csv => csv_rows(report),
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some(String::new()),
        _ => None,
    }
}

fn result(report: &Value) -> &Map<String, Value> {
    static EMPTY: std::sync::OnceLock<Map<String, Value>> = std::sync::OnceLock::new();
    report["result"].as_object().unwrap_or_else(|| EMPTY.get_or_init(Map::new))
}

/// `key: value` for every scalar in the result, arrays of scalars joined,
/// violations and skipped cells listed one per line.
fn text(report: &Value) -> String {
    let mut out = String::new();
    for (key, value) in result(report) {
        if let Some(s) = scalar(value) {
            out.push_str(&format!("{key}: {s}\n"));
        } else if let Value::Array(items) = value {
            if matches!(key.as_str(), "violations" | "skipped" | "rows") {
                out.push_str(&format!("{key}: {}\n", items.len()));
                if key != "rows" {
                    for item in items {
                        out.push_str(&format!("  {}\n", serde_json::to_string(item).unwrap_or_default()));
                    }
                }
            } else if let Some(list) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push_str(&format!("{key}: {}\n", list.join(" ")));
            }
        }
    }
    out
}

/// One row per entry of `result.rows` when present, otherwise a single
/// row of the scalar result fields.
fn csv_rows(report: &Value) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let res = result(report);
    match res.get("rows").and_then(Value::as_array).filter(|r| !r.is_empty()) {
        Some(rows) => {
            let mut columns: Vec<String> = Vec::new();
            for row in rows {
                for (k, _) in flatten(row) {
                    if !columns.contains(&k) {
                        columns.push(k);
                    }
                }
            }
            w.write_record(&columns)?;
            for row in rows {
                let flat = flatten(row);
                let record: Vec<String> = columns
                    .iter()
                    .map(|c| flat.iter().find(|(k, _)| k == c).map(|(_, v)| v.clone()).unwrap_or_default())
                    .collect();
                w.write_record(&record)?;
            }
        }
        None => {
            let flat: Vec<(String, String)> =
                res.iter().filter_map(|(k, v)| scalar(v).map(|s| (k.clone(), s))).collect();
            w.write_record(flat.iter().map(|(k, _)| k))?;
            w.write_record(flat.iter().map(|(_, v)| v))?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Scalars of an object, nested objects flattened one level as `a.b`.
fn flatten(row: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    if let Value::Object(map) = row {
        for (k, v) in map {
            if let Some(s) = scalar(v) {
                out.push((k.clone(), s));
            } else if let Value::Object(inner) = v {
                for (ik, iv) in inner {
                    if let Some(s) = scalar(iv) {
                        out.push((format!("{k}.{ik}"), s));
                    }
                }
            }
        }
    }
    out
}
