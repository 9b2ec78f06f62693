//! Human-readable and JSON rendering of library results.
//!
//! All JSON documents carry a top-level `"schema": "shirshov/1"` marker.
//! Coefficients are serialized as decimal strings since they are
//! arbitrary-precision integers; words and polynomials use the canonical
//! textual form.

use serde_json::{json, Value};

use shirshov::{
    Combination, Composition, CompositionKind, GsbReport, InverseCertificate, Presentation,
    ReductionTrace, RuleOrigin, RuleProvenance, RuleSet,
};

pub const SCHEMA: &str = "shirshov/1";

pub fn step_lines(pres: &Presentation, trace: &ReductionTrace) -> Vec<String> {
    trace
        .steps
        .iter()
        .enumerate()
        .map(|(i, step)| {
            format!(
                "step {}: rule {} eliminates {} * {}  [left {}, right {}]",
                i + 1,
                step.rule_index,
                step.coefficient,
                pres.format_word(&step.reduced_word),
                pres.format_word(&step.left_context),
                pres.format_word(&step.right_context),
            )
        })
        .collect()
}

pub fn trace_json(pres: &Presentation, trace: &ReductionTrace) -> Value {
    json!({
        "input": pres.format_polynomial(&trace.input),
        "output": pres.format_polynomial(&trace.output),
        "steps": trace.steps.iter().map(|step| json!({
            "rule": step.rule_index,
            "word": pres.format_word(&step.reduced_word),
            "left": pres.format_word(&step.left_context),
            "right": pres.format_word(&step.right_context),
            "coefficient": step.coefficient.to_string(),
        })).collect::<Vec<Value>>(),
    })
}

fn composition_json(pres: &Presentation, comp: &Composition) -> Value {
    json!({
        "kind": match comp.kind {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
        },
        "ambiguity": pres.format_word(&comp.ambiguity),
        "rule_left": comp.rule_left,
        "rule_right": comp.rule_right,
        "offset": comp.offset,
        "poly": pres.format_polynomial(&comp.poly),
    })
}

pub fn gsb_report_json(pres: &Presentation, report: &GsbReport) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "gsb-check",
        "is_gsb": report.is_gsb,
        "compositions": report.entries.iter().map(|entry| {
            let mut obj = composition_json(pres, &entry.composition);
            obj["residual"] = Value::String(pres.format_polynomial(&entry.residual));
            obj["trace"] = trace_json(pres, &entry.trace);
            obj
        }).collect::<Vec<Value>>(),
    })
}

pub fn rules_json(pres: &Presentation, rules: &RuleSet) -> Vec<Value> {
    rules
        .rules()
        .iter()
        .map(|r| Value::String(pres.format_polynomial(r.poly())))
        .collect()
}

/// Serializes a combination over the input rules as references to relation
/// positions in the presentation file. Rule `k` is `±relation_k`, so the
/// coefficient absorbs the normalization sign.
fn combination_json(pres: &Presentation, comb: &Combination) -> Value {
    let entries: Vec<Value> = comb
        .entries()
        .map(|((index, left, right), coeff)| {
            let signed = if pres.relation_negated(*index) {
                -coeff
            } else {
                coeff.clone()
            };
            json!({
                "relation": index,
                "coefficient": signed.to_string(),
                "left": pres.format_word(left),
                "right": pres.format_word(right),
            })
        })
        .collect();
    Value::Array(entries)
}

pub fn provenance_json(pres: &Presentation, provenance: &[RuleProvenance]) -> Value {
    let entries: Vec<Value> = provenance
        .iter()
        .enumerate()
        .map(|(rule, prov)| {
            let origin = match &prov.origin {
                RuleOrigin::Input { index } => json!({
                    "kind": "relation",
                    "relation": index,
                }),
                RuleOrigin::Composition { ambiguity } => json!({
                    "kind": "composition",
                    "ambiguity": pres.format_word(ambiguity),
                }),
            };
            json!({
                "rule": rule,
                "origin": origin,
                "combination": combination_json(pres, &prov.combination),
            })
        })
        .collect();
    Value::Array(entries)
}

pub fn certificate_json(pres: &Presentation, cert: &InverseCertificate) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "invert",
        "outcome": "inverse",
        "element": pres.format_polynomial(&cert.element),
        "inverse": pres.format_polynomial(&cert.inverse),
        "degree_bound": cert.degree_bound_used,
        "left_trace": trace_json(pres, &cert.left_trace),
        "right_trace": trace_json(pres, &cert.right_trace),
    })
}
