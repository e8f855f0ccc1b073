//! JSON and text renderings of verification reports.
//!
//! Both renderings carry the same facts. JSON field order is fixed so that
//! repeated runs differ only in `elapsed_ms`.

use serde_json::{json, Map, Value};

use crate::verifier::{BridgeReport, KernelReport, VerifyReport, Witness};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

fn witness_json(w: &Witness, report: &VerifyReport) -> Value {
    let assignment: Map<String, Value> =
        w.assignment.iter().map(|(name, e)| (name.clone(), Value::String(e.to_string()))).collect();
    json!({
        "assignment": assignment,
        "residual_coordinate": w.coordinate.render(&report.ring),
        "value": w.value.to_string(),
    })
}

pub fn verify_json(command: &str, r: &VerifyReport) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "command": command,
        "identity": r.identity,
        "algebra": r.algebra,
        "dim": r.dim,
        "generic_vars": r.generic_vars,
        "holds": r.holds,
        "witness": r.witness.as_ref().map(|w| witness_json(w, r)),
        "elapsed_ms": r.elapsed_ms as u64,
        "mode": r.mode.as_str(),
        "note": r.note,
    })
}

pub fn verify_text(command: &str, r: &VerifyReport) -> String {
    let mut out = format!("{command}: {} over {} (dim {})\n", r.identity, r.algebra, r.dim);
    out += &format!("  holds: {}\n", r.holds);
    out += &format!("  mode: {}\n", r.mode.as_str());
    out += &format!("  generic variables: {}\n", r.generic_vars);
    if let Some(w) = &r.witness {
        out += "  witness:\n";
        for (name, e) in &w.assignment {
            out += &format!("    {name} = {e}\n");
        }
        out += &format!("  nonzero at {}: {}\n", w.coordinate.render(&r.ring), w.value);
    }
    if let Some(note) = &r.note {
        out += &format!("  note: {note}\n");
    }
    out += &format!("  elapsed: {} ms\n", r.elapsed_ms);
    out
}

pub fn kernel_json(r: &KernelReport) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "command": "selftest",
        "algebra": r.algebra,
        "dim": r.dim,
        "associativity": r.associativity.is_ok(),
        "unit": r.unit.is_ok(),
        "embedding": r.embedding.as_ref().map(|e| e.is_ok()),
        "holds": r.ok(),
    })
}

pub fn kernel_text(r: &KernelReport) -> String {
    let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
    let mut line = format!(
        "selftest: {} (dim {}) associativity {}, unit {}",
        r.algebra,
        r.dim,
        flag(r.associativity.is_ok()),
        flag(r.unit.is_ok())
    );
    if let Some(e) = &r.embedding {
        line += &format!(", embedding {}", flag(e.is_ok()));
    }
    if let Err((i, j, k)) = r.associativity {
        line += &format!(" [triple {i},{j},{k}]");
    }
    line + "\n"
}

pub fn bridge_json(r: &BridgeReport) -> Value {
    let diff: Vec<Value> = r
        .diff
        .iter()
        .map(|d| {
            json!({
                "location": d.location,
                "monomial": d.monomial,
                "left": d.left.to_string(),
                "right": d.right.to_string(),
            })
        })
        .collect();
    json!({
        "tool_version": TOOL_VERSION,
        "command": "selftest",
        "bridge": r.bridge.name(),
        "algebra": r.algebra,
        "holds": r.holds,
        "differing_terms": r.differing_terms,
        "diff": diff,
    })
}

pub fn bridge_text(r: &BridgeReport) -> String {
    let mut out = format!(
        "bridge: {} over {}: {}\n",
        r.bridge.name(),
        r.algebra,
        if r.holds { "ok" } else { "FAIL" }
    );
    for d in &r.diff {
        out += &format!("    {d}\n");
    }
    if r.differing_terms > r.diff.len() {
        out += &format!("    ... {} more\n", r.differing_terms - r.diff.len());
    }
    out
}

/// A single value for one report, an array for several.
pub fn bundle(values: Vec<Value>) -> Value {
    if values.len() == 1 {
        values.into_iter().next().unwrap()
    } else {
        Value::Array(values)
    }
}

/// Replaces every `elapsed_ms` with zero, for comparing runs.
pub fn without_timing(v: &Value) -> Value {
    match v {
        Value::Object(m) => Value::Object(
            m.iter()
                .map(|(k, x)| {
                    let x = if k == "elapsed_ms" { json!(0) } else { without_timing(x) };
                    (k.clone(), x)
                })
                .collect(),
        ),
        Value::Array(a) => Value::Array(a.iter().map(without_timing).collect()),
        other => other.clone(),
    }
}
