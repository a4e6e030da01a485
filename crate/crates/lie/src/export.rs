use crate::algebra::LieAlgebra;
use serde_json::{json, Value};
use std::fmt::Write;

/// Rows `i,j,k,coefficient` for every nonzero constant.
pub fn constants_csv(l: &LieAlgebra) -> String {
    let mut out = String::from("i,j,k,coefficient\n");
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            for (k, c) in l.constant(i, j).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                writeln!(out, "{i},{j},{k},{c}").unwrap();
            }
        }
    }
    out
}

/// Basis labels and nonzero constants `[i, j, k, "coefficient"]`.
pub fn constants_json(l: &LieAlgebra) -> Value {
    let mut entries = Vec::new();
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            for (k, c) in l.constant(i, j).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                entries.push(json!([i, j, k, c.to_string()]));
            }
        }
    }
    json!({
        "field": l.field().label(),
        "basis": l.labels(),
        "kinds": l.basis().iter().map(|e| e.kind()).collect::<Vec<_>>(),
        "constants": entries,
    })
}

/// A vector written out with basis labels, e.g. `-2·FundCycle(b1)`.
pub fn render_vector(l: &LieAlgebra, v: &[gentle_core::Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(l.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, label)| if c.is_one() { label.clone() } else { format!("{c}·{label}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
