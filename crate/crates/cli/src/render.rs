//! JSON documents for results, and the flat table view of any document.

use eigenweights::polyalg::format_rational;
use eigenweights::{EigenResult, GroupSpec, Rational};
use serde_json::{json, Map, Value};

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn spec(spec: &GroupSpec) -> Value {
    let mut out = Map::new();
    out.insert("family".into(), json!(spec.family().to_string()));
    out.insert("n".into(), json!(spec.rank()));
    if let Some(m) = spec.m() {
        out.insert("m".into(), json!(m));
    }
    if let Some(c) = spec.coweight() {
        out.insert("coweight".into(), json!(c.to_string()));
    }
    out.insert("N".into(), json!(spec.big_n()));
    Value::Object(out)
}

pub fn eigen(result: &EigenResult, method: &str) -> Value {
    let weights: Map<String, Value> = result.eigenweights.iter().map(|(g, v)| (g.to_string(), rational(v))).collect();
    let mut doc = json!({
        "command": "eigen",
        "spec": spec(&result.spec),
        "method": method,
        "eigenweights": weights,
    });
    if let Some(block) = &result.block {
        let mut b = json!({
            "basis": block.basis.map(|g| g.to_string()),
            "matrix": block.matrix.iter().map(|row| row.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        });
        match &block.eigenvalues {
            Some(values) => b["eigenvalues"] = values.iter().map(rational).collect(),
            None => b["char_poly"] = block.char_poly.iter().map(rational).collect(),
        }
        doc["block"] = b;
    }
    doc
}

/// One `path  value` line per leaf, paths like `block.matrix[0][1]`.
pub fn table(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten(doc, String::new(), &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn flatten(value: &Value, path: String, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let next = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(v, next, rows);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, format!("{path}[{i}]"), rows);
            }
        }
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(leaf).collect();
            rows.push((path, format!("[{}]", cells.join(", "))));
        }
        _ => rows.push((path, leaf(value))),
    }
}

fn leaf(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
