//! Report rendering: JSON, CSV, and text forms, all deterministic for a
//! fixed configuration. Every report embeds the tool version, the full run
//! configuration, and the route that produced each side of each identity.

use dimdatum_core::poly::{FactorizationCheck, IdentityCheck};
use dimdatum_core::spectra::{Spectrum, SpectrumComparison};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn lambda_string(lambda: &[i64]) -> String {
    lambda
        .iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn identity_json(check: &IdentityCheck) -> Value {
    json!({
        "kind": check.kind.tag(),
        "n": check.n,
        "lambda": check.lambda,
        "pass": check.pass,
        "lhs": check.lhs.compact_string(),
        "rhs": check.rhs.compact_string(),
        "diff": check.diff.compact_string(),
        "lhs_route": check.lhs_route(),
        "rhs_route": check.rhs_route(),
    })
}

pub fn factorization_json(check: &FactorizationCheck) -> Value {
    json!({
        "case": if check.n.is_multiple_of(2) { "even" } else { "odd" },
        "m": check.m,
        "n": check.n,
        "lambda": check.lambda,
        "lambda1": check.lambda1,
        "lambda2": check.lambda2,
        "middle": check.middle,
        "pass": check.pass,
        "lhs": check.lhs.compact_string(),
        "rhs": check.rhs.compact_string(),
        "diff": check.diff.compact_string(),
        "lhs_route": check.lhs_route(),
        "rhs_route": check.rhs_route(),
    })
}

pub fn wrap(command: &str, config: Value, pass: bool, body: Value) -> Value {
    let mut report = json!({
        "version": VERSION,
        "command": command,
        "config": config,
        "pass": pass,
    });
    if let (Value::Object(map), Value::Object(extra)) = (&mut report, body) {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    report
}

pub fn identity_text(check: &IdentityCheck) -> String {
    let status = if check.pass { "PASS" } else { "FAIL" };
    let mut line = format!(
        "{:2} n={} lambda=({}) {} [{} vs {}]",
        check.kind.tag(),
        check.n,
        lambda_string(&check.lambda),
        status,
        check.lhs_route(),
        check.rhs_route(),
    );
    if !check.pass {
        line.push_str(&format!(" diff: {}", check.diff.compact_string()));
    }
    line
}

pub fn identity_csv(check: &IdentityCheck) -> String {
    format!(
        "{},{},{},{}",
        check.kind.tag(),
        check.n,
        lambda_string(&check.lambda).replace(',', " "),
        check.pass
    )
}

pub fn factorization_text(check: &FactorizationCheck) -> String {
    let status = if check.pass { "PASS" } else { "FAIL" };
    let case = if check.n.is_multiple_of(2) { "even" } else { "odd" };
    let mut line = format!(
        "{case} m={} lambda=({}) {} [{} vs {}]",
        check.m,
        lambda_string(&check.lambda),
        status,
        check.lhs_route(),
        check.rhs_route(),
    );
    if !check.pass {
        line.push_str(&format!(" diff: {}", check.diff.compact_string()));
    }
    line
}

pub fn factorization_csv(check: &FactorizationCheck) -> String {
    let case = if check.n.is_multiple_of(2) { "even" } else { "odd" };
    format!(
        "{case},{},{},{}",
        check.m,
        lambda_string(&check.lambda).replace(',', " "),
        check.pass
    )
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    let lines: Vec<Value> = s
        .lines()
        .iter()
        .map(|(v, m)| json!([v.numer().to_string(), v.denom().to_string(), m]))
        .collect();
    json!({
        "cutoff": s.cutoff().ratio_string(),
        "lines": lines,
        "total_multiplicity": s.total_multiplicity(),
    })
}

pub fn comparison_json(c: &SpectrumComparison) -> Value {
    match c {
        SpectrumComparison::Equal => json!({ "equal": true }),
        SpectrumComparison::FirstDifference {
            eigenvalue,
            mult1,
            mult2,
        } => json!({
            "equal": false,
            "first_difference": {
                "eigenvalue": eigenvalue.ratio_string(),
                "mult1": mult1,
                "mult2": mult2,
            }
        }),
    }
}

/// Serialize a JSON report with a trailing newline, stable key order.
pub fn to_bytes(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable report");
    s.push('\n');
    s
}
