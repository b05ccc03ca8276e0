//! Human and machine renderings of run results.

use serde::Serialize;

use super::run::{Payload, ResultRecord, RunError};
use crate::rational::format_rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum MachinePayload {
    /// Coefficients of `H^0, H^1, ...` in the Chow ring of `P^n`.
    Class { ambient_dim: usize, coefficients: Vec<String> },
    Series { ambient_dim: usize, coefficients: Vec<String> },
    Number { value: String },
    Ideal { variables: Vec<String>, generators: Vec<String> },
    List { values: Vec<String> },
    Dimdeg { dim: i64, degree: String },
    Text { value: String },
}

#[derive(Serialize)]
struct MachineRecord {
    index: usize,
    line: usize,
    directive: String,
    result: MachinePayload,
    warnings: Vec<String>,
    seed: u64,
    redraws: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
struct MachineError {
    line: usize,
    statement: String,
    message: String,
}

#[derive(Serialize)]
struct MachineDocument {
    results: Vec<MachineRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<MachineError>,
}

fn machine_payload(p: &Payload) -> MachinePayload {
    match p {
        Payload::Class(c) => MachinePayload::Class { ambient_dim: c.ambient_dim(), coefficients: c.to_strings() },
        Payload::Series(s) => {
            MachinePayload::Series { ambient_dim: s.ambient_dim(), coefficients: s.coeffs().iter().map(format_rat).collect() }
        }
        Payload::Number(r) => MachinePayload::Number { value: format_rat(r) },
        Payload::Ideal(i) => MachinePayload::Ideal {
            variables: i.ring().names(),
            generators: i.gens().iter().map(|g| g.to_string()).collect(),
        },
        Payload::Counts(v) => MachinePayload::List { values: v.iter().map(|n| n.to_string()).collect() },
        Payload::Values(v) => MachinePayload::List { values: v.iter().map(format_rat).collect() },
        Payload::DimDeg(d) => MachinePayload::Dimdeg { dim: d.dim, degree: d.degree.to_string() },
        Payload::Text(t) => MachinePayload::Text { value: t.clone() },
    }
}

fn machine_record(r: &ResultRecord, timings: bool) -> MachineRecord {
    MachineRecord {
        index: r.index,
        line: r.line,
        directive: r.directive.clone(),
        result: machine_payload(&r.payload),
        warnings: r.warnings.clone(),
        seed: r.seed,
        redraws: r.redraws,
        elapsed_ms: timings.then_some(r.elapsed.as_millis()),
    }
}

/// JSON document; byte-identical for identical inputs unless `timings`.
pub fn render_machine(records: &[ResultRecord], error: Option<&RunError>, timings: bool) -> String {
    let doc = MachineDocument {
        results: records.iter().map(|r| machine_record(r, timings)).collect(),
        error: error.map(|e| MachineError { line: e.line, statement: e.statement.clone(), message: e.error.to_string() }),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn human_payload(p: &Payload) -> String {
    match p {
        Payload::Class(c) => c.to_string(),
        Payload::Series(s) => s.to_string(),
        Payload::Number(r) => format_rat(r),
        Payload::Ideal(i) => i.to_string(),
        Payload::Counts(v) => format!("[{}]", v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")),
        Payload::Values(v) => format!("[{}]", v.iter().map(format_rat).collect::<Vec<_>>().join(", ")),
        Payload::DimDeg(d) => format!("dim {}, degree {}", d.dim, d.degree),
        Payload::Text(t) => t.clone(),
    }
}

pub fn render_human(records: &[ResultRecord], timings: bool) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!("{} = {}", r.directive, human_payload(&r.payload)));
        if timings {
            out.push_str(&format!("  [{} ms]", r.elapsed.as_millis()));
        }
        out.push('\n');
        for w in &r.warnings {
            out.push_str(&format!("  warning: {}\n", w));
        }
    }
    out
}
