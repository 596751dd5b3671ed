use laplaceq_core::explore::{explore, test_conjecture_1, test_conjecture_2, ConjectureVerdict};
use laplaceq_core::graph::max_disjoint_edges;
use laplaceq_core::verify::{sweeps_for, Outcome, TheoremId, Witness};
use laplaceq_core::{closed_form_spectrum, entropy, Comparability, Family};

const THEOREMS: [TheoremId; 7] = [
    TheoremId::T2,
    TheoremId::T3,
    TheoremId::T5,
    TheoremId::T6,
    TheoremId::T8,
    TheoremId::T9,
    TheoremId::AlikeRelation,
];

#[test]
fn every_parameter_once_and_totals_add_up() {
    for t in THEOREMS {
        for sweep in sweeps_for(t) {
            let lo = sweep.min_order();
            let report = sweep.run(lo..=40, None).unwrap();
            let s = &report.summary;
            assert_eq!(s.pass + s.fail + s.boundary, s.total);
            assert_eq!(s.total, report.records.len());
            let mut keys: Vec<_> = report.records.iter().map(|r| (r.n, r.m)).collect();
            let sorted = keys.clone();
            keys.dedup();
            assert_eq!(keys, sorted, "duplicate or unsorted records in {}", report.subject);
            let expected: usize = if matches!(t, TheoremId::T8 | TheoremId::T9) {
                (lo..=40).map(|n| max_disjoint_edges(n) - 1).sum()
            } else {
                40 - lo + 1
            };
            assert_eq!(s.total, expected, "{}", report.subject);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    for t in THEOREMS {
        for sweep in sweeps_for(t) {
            let range = sweep.min_order()..=25;
            assert_eq!(sweep.run(range.clone(), None).unwrap(), sweep.run(range, None).unwrap());
        }
    }
}

fn family_pair(subject: &str) -> (Family, Family) {
    let mut parts = subject.split(" vs ");
    let f = |s: &str| s.parse::<Family>().unwrap();
    (f(parts.next().unwrap()), f(parts.next().unwrap()))
}

#[test]
fn one_way_majorization_agrees_with_entropy_sign() {
    for t in [TheoremId::T3, TheoremId::T6, TheoremId::AlikeRelation] {
        for sweep in sweeps_for(t) {
            let report = sweep.run(sweep.min_order()..=40, None).unwrap();
            let (fa, fb) = family_pair(&report.subject);
            for rec in &report.records {
                let Witness::Majorization { comparability, .. } = rec.witness else { panic!() };
                let sa = entropy(&closed_form_spectrum(fa, rec.n, None).unwrap()).unwrap().bits;
                let sb = entropy(&closed_form_spectrum(fb, rec.n, None).unwrap()).unwrap().bits;
                match comparability {
                    Comparability::AToB => assert!(sa > sb),
                    Comparability::BToA => assert!(sb > sa),
                    _ => {}
                }
            }
        }
    }
}

#[test]
fn only_known_prose_disagreement() {
    let mut disagreements = Vec::new();
    for t in THEOREMS {
        for sweep in sweeps_for(t) {
            let report = sweep.run(sweep.min_order()..=50, None).unwrap();
            for rec in report.records.iter().filter(|r| r.result != Outcome::Pass) {
                disagreements.push((report.subject.clone(), rec.n, rec.note.clone()));
            }
        }
    }
    assert_eq!(
        disagreements,
        [("star_like vs alike_path".to_string(), 4, Some("fail-against-prose".to_string()))]
    );
}

#[test]
fn exploration_is_sound_and_deterministic() {
    for n in 4..=7 {
        let a = explore(n, n - 1, false).unwrap();
        let b = explore(n, n - 1, false).unwrap();
        assert_eq!(a.steps, b.steps);
        for (c, d) in a.classes.iter().zip(&b.classes) {
            assert_eq!(c.graph, d.graph);
            assert_eq!(c.signature, d.signature);
        }
        for c in &a.classes {
            assert!(c.graph.is_hub_complete());
            assert_eq!(c.graph.component_count(), 1);
            assert!(c.extra_edges < n);
            assert_eq!(c.graph.peripheral_edges().count(), c.extra_edges);
        }
    }
}

#[test]
fn all_graphs_on_the_rim_are_found() {
    // graphs on 5 and 6 vertices up to isomorphism
    assert_eq!(explore(6, 10, false).unwrap().classes.len(), 34);
    assert_eq!(explore(7, 15, false).unwrap().classes.len(), 156);
}

#[test]
fn conjecture_reports_are_well_formed() {
    for n in 5..=7 {
        for cycle_only in [false, true] {
            for report in [test_conjecture_1(n, cycle_only).unwrap(), test_conjecture_2(n, cycle_only).unwrap()] {
                assert_eq!(report.verdict == ConjectureVerdict::Refuted, !report.counterexamples.is_empty());
                assert_eq!(report.signatures.len(), report.class_count);
            }
        }
    }
}
