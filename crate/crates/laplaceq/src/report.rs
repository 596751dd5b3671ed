//! JSON encoders. Objects are `serde_json::Value` maps, which keep keys
//! sorted; floats are rounded to 12 significant digits so output is
//! byte-stable.

use laplaceq_core::explore::{ConjectureReport, ExplorationState, InstanceOutcome};
use laplaceq_core::verify::{DirectionWitness, Outcome, Record, Scalar, VerificationReport, Witness, FAIL_AGAINST_PROSE};
use laplaceq_core::weighted::{TriangleCheck, TrianglePhases};
use laplaceq_core::{MajorizationResult, PairVerdict, Rational, Spectrum, Weight};
use serde_json::{json, Value};

use crate::graph_json::graph_to_value;

pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Rounded float, or `null` when not finite.
pub fn float(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x)).map_or(Value::Null, Value::Number)
}

pub fn floats(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| float(x)).collect())
}

/// JSON form of a spectrum value: `"p/q"` strings for exact values.
pub trait JsonScalar {
    fn to_json(&self) -> Value;
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonScalar for f64 {
    fn to_json(&self) -> Value {
        float(*self)
    }
}

impl JsonScalar for Scalar {
    fn to_json(&self) -> Value {
        match self {
            Scalar::Exact(r) => r.to_json(),
            Scalar::Numeric(x) => float(*x),
        }
    }
}

pub fn spectrum_json<T: Weight + JsonScalar>(s: &Spectrum<T>) -> Value {
    let entries: Vec<Value> = s
        .entries()
        .iter()
        .map(|e| json!({ "value": e.value.to_json(), "multiplicity": e.multiplicity }))
        .collect();
    json!({ "mode": s.mode().name(), "entries": entries })
}

pub fn entropy_json(bits: f64) -> Value {
    json!({ "bits": float(bits) })
}

pub fn verdict_json<T>(v: &PairVerdict<T>) -> Value {
    let k = |r: &MajorizationResult<T>| r.first_failing_k;
    json!({
        "a_to_b": v.a_to_b.holds,
        "b_to_a": v.b_to_a.holds,
        "first_failing_k": { "a_to_b": k(&v.a_to_b), "b_to_a": k(&v.b_to_a) },
    })
}

/// `pass`, `fail`, `boundary`, or `fail-against-prose` for failures that
/// contradict a printed threshold.
pub fn result_label(r: &Record) -> &'static str {
    if r.result == Outcome::Fail && r.note.as_deref() == Some(FAIL_AGAINST_PROSE) {
        FAIL_AGAINST_PROSE
    } else {
        r.result.name()
    }
}

fn direction_json(d: &DirectionWitness) -> Value {
    json!({ "holds": d.holds, "first_failing_k": d.first_failing_k })
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Entropy { before_bits, after_bits, difference } => json!({
            "kind": "entropy",
            "before_bits": float(*before_bits),
            "after_bits": float(*after_bits),
            "difference": float(*difference),
        }),
        Witness::Majorization { a, b, a_to_b, b_to_a, comparability, partial_sums_a, partial_sums_b } => json!({
            "kind": "majorization",
            "a": a,
            "b": b,
            "a_to_b": direction_json(a_to_b),
            "b_to_a": direction_json(b_to_a),
            "comparability": comparability.name(),
            "partial_sums_a": partial_sums_a.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
            "partial_sums_b": partial_sums_b.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
        }),
        Witness::Spectrum { computed, printed, max_deviation } => json!({
            "kind": "spectrum",
            "computed": floats(computed),
            "printed": floats(printed),
            "max_deviation": float(*max_deviation),
        }),
    }
}

pub fn report_json(r: &VerificationReport) -> Value {
    let records: Vec<Value> = r
        .records
        .iter()
        .map(|rec| {
            json!({
                "n": rec.n,
                "m": rec.m,
                "claim": rec.claim,
                "result": result_label(rec),
                "note": rec.note,
                "witness": witness_json(&rec.witness),
            })
        })
        .collect();
    let s = &r.summary;
    let changes: Vec<Value> = s
        .comparability_changes
        .iter()
        .map(|(n, m)| json!({ "n": n, "m": m }))
        .collect();
    json!({
        "theorem": r.theorem.label(),
        "subject": r.subject,
        "range": { "n_min": r.n_range.0, "n_max": r.n_range.1, "m": r.m },
        "records": records,
        "summary": {
            "pass": s.pass,
            "fail": s.fail,
            "boundary": s.boundary,
            "total": s.total,
            "monotone_decreasing": s.monotone_decreasing,
            "comparability_changes": changes,
        },
    })
}

pub fn conjecture_json(r: &ConjectureReport) -> Value {
    let records: Vec<Value> = r
        .records
        .iter()
        .map(|rec| {
            json!({
                "a": rec.a,
                "b": rec.b,
                "a_signature": r.signatures[rec.a],
                "b_signature": r.signatures[rec.b],
                "a_edges": rec.a_edges,
                "b_edges": rec.b_edges,
                "edge": rec.edge.map(|(u, v)| [u, v]),
                "comparability": rec.comparability.name(),
                "expected": rec.expected,
                "outcome": rec.outcome.name(),
            })
        })
        .collect();
    let counterexamples: Vec<Value> = r
        .counterexamples
        .iter()
        .map(|c| {
            json!({
                "description": c.description,
                "a": graph_to_value(&c.a),
                "b": graph_to_value(&c.b),
                "comparability": c.comparability.name(),
            })
        })
        .collect();
    json!({
        "conjecture": r.conjecture,
        "n": r.n,
        "cycle_only": r.cycle_only,
        "max_extra_edges": r.max_extra_edges,
        "class_count": r.class_count,
        "verdict": r.verdict.name(),
        "records": records,
        "counterexamples": counterexamples,
        "summary": {
            "holds": r.count(InstanceOutcome::Holds),
            "violated": r.count(InstanceOutcome::Violated),
            "unchecked": r.count(InstanceOutcome::Unchecked),
            "total": r.records.len(),
        },
    })
}

pub fn exploration_json(s: &ExplorationState) -> Value {
    let classes: Vec<Value> = s
        .classes
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "extra_edges": c.extra_edges,
                "signature": c.signature.key(),
                "is_wheel": c.is_wheel,
                "graph": graph_to_value(&c.graph),
            })
        })
        .collect();
    let steps: Vec<Value> = s
        .steps
        .iter()
        .map(|st| {
            json!({
                "parent": st.parent,
                "child": st.child,
                "edge": [st.edge.0, st.edge.1],
                "comparability": st.verdict.name(),
            })
        })
        .collect();
    json!({
        "n": s.n,
        "cycle_only": s.cycle_only,
        "max_extra_edges": s.max_extra_edges,
        "cospectral_splits": s.cospectral_splits,
        "classes": classes,
        "steps": steps,
    })
}

pub fn triangle_json(p: &TrianglePhases, check: &TriangleCheck, tol: f64) -> Value {
    json!({
        "phases": floats(&p.phases()),
        "tolerance": float(tol),
        "satisfied": check.satisfied,
        "residuals": floats(&check.residuals),
    })
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("Value always serializes");
    s.push('\n');
    s
}
