//! The formula-vs-oracle sweep.

use std::time::Instant;

use eigenweights::{formula_eigen, oracle_eigen, Coweight, EigenResult, Exec, Family, GroupSpec, Rational};
use serde_json::{json, Value};

use crate::render;

pub struct Bounds {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Every spec within the bounds, optionally restricted to one family or rank,
/// in spec order.
pub fn specs(bounds: &Bounds, family: Option<Family>, rank: Option<usize>) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 2..=bounds.a {
        out.extend((1..n).map(|m| GroupSpec::a(n, m).unwrap()));
    }
    out.extend((1..=bounds.b).map(|n| GroupSpec::b(n).unwrap()));
    out.extend((2..=bounds.c).map(|n| GroupSpec::c(n).unwrap()));
    out.extend((2..=bounds.d).map(|n| GroupSpec::d(n, Coweight::Spin).unwrap()));
    out.retain(|s| family.is_none_or(|f| s.family() == f) && rank.is_none_or(|n| s.rank() == n));
    out.sort();
    out
}

pub struct Mismatch {
    pub label: String,
    pub formula: Option<Rational>,
    pub oracle: Option<Rational>,
}

pub struct Report {
    pub mismatches: Vec<Mismatch>,
    /// The oracle failed outright, e.g. on an unexpected non-eigenvector.
    pub error: Option<String>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.error.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "mismatches": self.mismatches.iter().map(|m| json!({
                "generator": m.label,
                "formula": m.formula.as_ref().map(render::rational),
                "oracle": m.oracle.as_ref().map(render::rational),
            })).collect::<Vec<_>>(),
        });
        if let Some(e) = &self.error {
            out["error"] = json!(e);
        }
        out
    }
}

/// Entry-by-entry comparison, block matrix entries labeled `block[r][c]`.
pub fn compare(formula: &EigenResult, oracle: Result<&EigenResult, String>) -> Report {
    let oracle = match oracle {
        Ok(o) => o,
        Err(e) => return Report { mismatches: Vec::new(), error: Some(e) },
    };
    let entries = |r: &EigenResult| {
        let mut out: Vec<(String, Rational)> = r.eigenweights.iter().map(|(g, v)| (g.to_string(), v.clone())).collect();
        if let Some(b) = &r.block {
            for (i, row) in b.matrix.iter().enumerate() {
                out.extend(row.iter().enumerate().map(|(j, v)| (format!("block[{i}][{j}]"), v.clone())));
            }
        }
        out
    };
    let (f, o) = (entries(formula), entries(oracle));
    let mut labels: Vec<&String> = Vec::new();
    for (k, _) in f.iter().chain(&o) {
        if !labels.contains(&k) {
            labels.push(k);
        }
    }
    let lookup = |side: &[(String, Rational)], label: &str| side.iter().find(|(k, _)| k == label).map(|(_, v)| v.clone());
    let mut mismatches = Vec::new();
    for label in labels {
        let (fv, ov) = (lookup(&f, label), lookup(&o, label));
        if fv != ov {
            mismatches.push(Mismatch { label: label.clone(), formula: fv, oracle: ov });
        }
    }
    Report { mismatches, error: None }
}

pub fn run(specs: &[GroupSpec], bounds: &Bounds, family: Option<Family>, rank: Option<usize>, timings: bool) -> Value {
    let total = specs.len();
    let rows: Vec<Value> = Exec::default().map(specs, |spec| {
        let start = Instant::now();
        let report = match formula_eigen(spec) {
            Ok(formula) => compare(&formula, oracle_eigen(spec).as_ref().map_err(|e| e.to_string())),
            Err(e) => Report { mismatches: Vec::new(), error: Some(e.to_string()) },
        };
        let seconds = start.elapsed().as_secs_f64();
        let status = if report.is_clean() { "pass" } else { "fail" };
        eprintln!("[{total} specs] {spec}: {status} ({seconds:.2}s)");
        let mut row = json!({ "spec": spec.key(), "status": status });
        if !report.is_clean() {
            let detail = report.to_json();
            row["mismatches"] = detail["mismatches"].clone();
            if let Some(e) = detail.get("error") {
                row["error"] = e.clone();
            }
        }
        if timings {
            row["seconds"] = json!(format!("{seconds:.3}"));
        }
        row
    });
    let failed = rows.iter().filter(|r| r["status"] == "fail").count();
    let mut inputs = json!({ "max_a": bounds.a, "max_b": bounds.b, "max_c": bounds.c, "max_d": bounds.d });
    if let Some(f) = family {
        inputs["family"] = json!(f.to_string());
    }
    if let Some(n) = rank {
        inputs["n"] = json!(n);
    }
    json!({
        "command": "verify",
        "inputs": inputs,
        "results": rows,
        "passed": total - failed,
        "failed": failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use eigenweights::polyalg::rational;
    use eigenweights::Generator;

    #[test]
    fn compare_flags_each_differing_entry() {
        let spec = GroupSpec::d(4, Coweight::Spin).unwrap();
        let formula = formula_eigen(&spec).unwrap();
        assert!(compare(&formula, Ok(&formula)).is_clean());

        let mut tweaked = formula.clone();
        tweaked.eigenweights.insert(Generator::Power(1), rational(1, 3));
        tweaked.block.as_mut().unwrap().matrix[0][1] = rational(0, 1);
        let report = compare(&formula, Ok(&tweaked));
        let labels: Vec<&str> = report.mismatches.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["p1", "block[0][1]"]);
        assert_eq!(report.mismatches[0].oracle, Some(rational(1, 3)));

        tweaked.eigenweights.remove(&Generator::Power(3));
        let missing = compare(&formula, Ok(&tweaked));
        assert!(missing.mismatches.iter().any(|m| m.label == "p3" && m.oracle.is_none()));

        let failed = compare(&formula, Err("boom".into()));
        assert!(!failed.is_clean());
        assert_eq!(failed.to_json()["error"], "boom");
    }

    #[test]
    fn spec_selection() {
        let bounds = Bounds { a: 5, b: 5, c: 4, d: 5 };
        assert_eq!(specs(&bounds, None, None).len(), 22);
        assert_eq!(specs(&bounds, Some(Family::A), Some(3)).len(), 2);
        assert_eq!(specs(&bounds, Some(Family::B), None).len(), 5);
        assert!(specs(&bounds, Some(Family::C), Some(5)).is_empty());
    }
}
