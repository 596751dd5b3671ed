//! CSV renderings, one row per value, record or instance.

use laplaceq_core::explore::{ConjectureReport, ExplorationState};
use laplaceq_core::verify::{VerificationReport, Witness};
use laplaceq_core::weighted::{TriangleCheck, TrianglePhases};
use laplaceq_core::{PairVerdict, Rational, Spectrum, Weight};

use crate::graph_json::serialize_graph;
use crate::report::{result_label, round_sig};

/// Cell text for a spectrum value.
pub trait CsvScalar {
    fn cell(&self) -> String;
}

impl CsvScalar for Rational {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl CsvScalar for f64 {
    fn cell(&self) -> String {
        num(*self)
    }
}

fn num(x: f64) -> String {
    round_sig(x).to_string()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is utf-8")
}

fn writer<const N: usize>(header: [&str; N]) -> csv::Writer<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory writer");
    w
}

pub fn spectrum_csv<T: Weight + CsvScalar>(s: &Spectrum<T>) -> String {
    let mut w = writer(["mode", "value", "multiplicity"]);
    for e in s.entries() {
        w.write_record([s.mode().name().to_string(), e.value.cell(), e.multiplicity.to_string()])
            .expect("in-memory writer");
    }
    finish(w)
}

pub fn entropy_csv(bits: f64) -> String {
    let mut w = writer(["bits"]);
    w.write_record([num(bits)]).expect("in-memory writer");
    finish(w)
}

pub fn verdict_csv<T>(v: &PairVerdict<T>) -> String {
    let mut w = writer(["direction", "holds", "first_failing_k"]);
    for (name, r) in [("a_to_b", &v.a_to_b), ("b_to_a", &v.b_to_a)] {
        w.write_record([name.to_string(), r.holds.to_string(), opt(r.first_failing_k)])
            .expect("in-memory writer");
    }
    finish(w)
}

pub fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut w = writer([
        "theorem", "subject", "n", "m", "result", "claim", "difference", "comparability",
        "a_to_b", "b_to_a", "max_deviation",
    ]);
    for r in reports {
        for rec in &r.records {
            let (mut difference, mut comparability, mut a_to_b, mut b_to_a, mut deviation) =
                (String::new(), String::new(), String::new(), String::new(), String::new());
            match &rec.witness {
                Witness::Entropy { difference: d, .. } => difference = num(*d),
                Witness::Majorization { comparability: c, a_to_b: x, b_to_a: y, .. } => {
                    comparability = c.name().to_string();
                    a_to_b = x.holds.to_string();
                    b_to_a = y.holds.to_string();
                }
                Witness::Spectrum { max_deviation, .. } => deviation = num(*max_deviation),
            }
            w.write_record([
                r.theorem.label().to_string(),
                r.subject.clone(),
                rec.n.to_string(),
                opt(rec.m),
                result_label(rec).to_string(),
                rec.claim.clone(),
                difference,
                comparability,
                a_to_b,
                b_to_a,
                deviation,
            ])
            .expect("in-memory writer");
        }
    }
    finish(w)
}

pub fn conjecture_csv(r: &ConjectureReport) -> String {
    let mut w = writer([
        "conjecture", "n", "a", "b", "edge", "a_edges", "b_edges", "comparability", "expected", "outcome",
    ]);
    for rec in &r.records {
        w.write_record([
            r.conjecture.to_string(),
            r.n.to_string(),
            rec.a.to_string(),
            rec.b.to_string(),
            opt(rec.edge.map(|(u, v)| format!("{u}-{v}"))),
            rec.a_edges.to_string(),
            rec.b_edges.to_string(),
            rec.comparability.name().to_string(),
            opt(rec.expected),
            rec.outcome.name().to_string(),
        ])
        .expect("in-memory writer");
    }
    finish(w)
}

pub fn exploration_csv(s: &ExplorationState) -> String {
    let mut w = writer(["id", "extra_edges", "is_wheel", "signature", "graph"]);
    for c in &s.classes {
        w.write_record([
            c.id.to_string(),
            c.extra_edges.to_string(),
            c.is_wheel.to_string(),
            c.signature.key(),
            serialize_graph(&c.graph),
        ])
        .expect("in-memory writer");
    }
    finish(w)
}

pub fn triangles_csv(rows: &[(TrianglePhases, TriangleCheck)]) -> String {
    let mut w = writer(["w1", "w2", "w3", "satisfied", "r1", "r2", "r3"]);
    for (p, c) in rows {
        let [w1, w2, w3] = p.phases();
        let [r1, r2, r3] = c.residuals;
        w.write_record([num(w1), num(w2), num(w3), c.satisfied.to_string(), num(r1), num(r2), num(r3)])
            .expect("in-memory writer");
    }
    finish(w)
}
