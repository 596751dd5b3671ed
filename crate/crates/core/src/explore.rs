//! Brute-force search over graphs obtained from a star by adding peripheral
//! edges, one edge at a time, up to the wheel.
//!
//! Graphs are merged into isomorphism classes. A cheap signature (sorted
//! degree sequence plus the numeric spectrum) finds candidates, and an exact
//! backtracking isomorphism test confirms every merge, so cospectral
//! non-isomorphic graphs stay apart.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::density::density_matrix;
use crate::error::{Error, Result};
use crate::graph::{star, Graph};
use crate::majorization::{locc_verdict_pair, Comparability};
use crate::spectrum::{numeric_spectrum, Spectrum};

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 9;

/// Spectra within this distance are treated as equal signatures.
pub const SIGNATURE_TOLERANCE: f64 = 1e-8;

/// Sorted degree sequence plus the flattened numeric spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct Signature {
    pub degrees: Vec<usize>,
    pub spectrum: Vec<f64>,
}

impl Signature {
    pub fn of(g: &Graph, spectrum: &Spectrum<f64>) -> Self {
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Signature {
            degrees,
            spectrum: spectrum.to_f64_values(),
        }
    }

    pub fn matches(&self, other: &Signature) -> bool {
        self.degrees == other.degrees
            && self.spectrum.len() == other.spectrum.len()
            && self
                .spectrum
                .iter()
                .zip(&other.spectrum)
                .all(|(a, b)| libm::fabs(a - b) <= SIGNATURE_TOLERANCE)
    }

    /// Printable form with the spectrum rounded to 8 decimals.
    pub fn key(&self) -> String {
        let mut s = String::from("deg:");
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{d}");
        }
        s.push_str("|spec:");
        for (i, v) in self.spectrum.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            // avoid printing -0.00000000
            let v = if libm::fabs(*v) < 5e-9 { 0.0 } else { *v };
            let _ = write!(s, "{v:.8}");
        }
        s
    }
}

/// True when some vertex bijection maps the edges of `a` onto those of `b`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let adj = |g: &Graph| {
        let mut m = alloc::vec![false; n * n];
        for (u, v) in g.edges() {
            m[u * n + v] = true;
            m[v * n + u] = true;
        }
        m
    };
    let (ma, mb) = (adj(a), adj(b));
    // high-degree vertices first prunes hardest
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| da[y].cmp(&da[x]).then(x.cmp(&y)));

    struct Search<'a> {
        n: usize,
        order: Vec<usize>,
        da: &'a [usize],
        db: &'a [usize],
        ma: &'a [bool],
        mb: &'a [bool],
        image: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn extend(&mut self, depth: usize) -> bool {
            if depth == self.n {
                return true;
            }
            let va = self.order[depth];
            for vb in 0..self.n {
                if self.used[vb] || self.da[va] != self.db[vb] {
                    continue;
                }
                let consistent = self.order[..depth].iter().all(|&ua| {
                    self.ma[va * self.n + ua] == self.mb[vb * self.n + self.image[ua]]
                });
                if !consistent {
                    continue;
                }
                self.image[va] = vb;
                self.used[vb] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used[vb] = false;
            }
            false
        }
    }

    Search {
        n,
        order,
        da: &da,
        db: &db,
        ma: &ma,
        mb: &mb,
        image: alloc::vec![usize::MAX; n],
        used: alloc::vec![false; n],
    }
    .extend(0)
}

/// One isomorphism class found during the search.
#[derive(Debug, Clone)]
pub struct PeripheralClass {
    pub id: usize,
    /// First representative reached.
    pub graph: Graph,
    pub extra_edges: usize,
    pub signature: Signature,
    pub spectrum: Spectrum<f64>,
    pub is_wheel: bool,
}

/// A single-edge addition between two classes, with the majorization
/// verdict of (parent, child).
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub parent: usize,
    pub edge: (usize, usize),
    pub child: usize,
    pub verdict: Comparability,
}

#[derive(Debug, Clone)]
pub struct ExplorationState {
    pub n: usize,
    pub cycle_only: bool,
    pub max_extra_edges: usize,
    pub classes: Vec<PeripheralClass>,
    pub steps: Vec<Step>,
    /// Signature collisions that the isomorphism test kept apart.
    pub cospectral_splits: usize,
}

impl ExplorationState {
    pub fn class(&self, id: usize) -> &PeripheralClass {
        &self.classes[id]
    }

    /// Class containing a graph isomorphic to `g`, if enumerated.
    pub fn class_of(&self, g: &Graph) -> Option<usize> {
        let spectrum = numeric_spectrum(&density_matrix(g).ok()?).ok()?;
        let sig = Signature::of(g, &spectrum);
        self.classes
            .iter()
            .find(|c| c.signature.matches(&sig) && are_isomorphic(&c.graph, g))
            .map(|c| c.id)
    }

    pub fn step(&self, parent: usize, child: usize) -> Option<&Step> {
        self.steps.iter().find(|s| s.parent == parent && s.child == child)
    }

    pub fn classes_with_edges(&self, k: usize) -> impl Iterator<Item = &PeripheralClass> {
        self.classes.iter().filter(move |c| c.extra_edges == k)
    }
}

/// Peripheral edges available for addition.
pub fn candidate_edges(n: usize, cycle_only: bool) -> Vec<(usize, usize)> {
    if cycle_only {
        let mut e: Vec<(usize, usize)> = (1..n - 1).map(|v| (v, v + 1)).collect();
        if n - 1 > 2 {
            e.push((1, n - 1));
        }
        e.sort_unstable();
        e.dedup();
        e
    } else {
        (1..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect()
    }
}

fn is_wheel_shape(g: &Graph, n: usize) -> bool {
    g.edge_count() == 2 * (n - 1)
        && (1..n).all(|v| g.degrees()[v] == 3)
        && g.is_hub_complete()
        && {
            // peripheral edges form one cycle: 2-regular and connected
            let rim = Graph::from_edges(n - 1, g.peripheral_edges().map(|(u, v)| (u - 1, v - 1)));
            rim.is_ok_and(|r| r.component_count() == 1)
        }
}

/// Enumerates all classes `star(n) + S` with `|S| ≤ max_extra_edges`, level by
/// level, recording each parent→child step once.
pub fn explore(n: usize, max_extra_edges: usize, cycle_only: bool) -> Result<ExplorationState> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::param(
            "n",
            format!("exploration supports {MIN_ORDER} <= n <= {MAX_ORDER}, got {n}"),
        ));
    }
    let limit = (n - 1) * (n - 2) / 2;
    if max_extra_edges > limit {
        return Err(Error::param(
            "max_extra_edges",
            format!("at most {limit} peripheral edges exist for n = {n}, got {max_extra_edges}"),
        ));
    }
    let candidates = candidate_edges(n, cycle_only);

    let make_class = |id: usize, graph: Graph| -> Result<PeripheralClass> {
        let spectrum = numeric_spectrum(&density_matrix(&graph)?)?;
        Ok(PeripheralClass {
            id,
            extra_edges: graph.edge_count() - (n - 1),
            signature: Signature::of(&graph, &spectrum),
            is_wheel: is_wheel_shape(&graph, n),
            spectrum,
            graph,
        })
    };

    let mut classes = alloc::vec![make_class(0, star(n)?)?];
    let mut steps = Vec::new();
    let mut cospectral_splits = 0;
    let mut frontier: Vec<usize> = alloc::vec![0];

    for _level in 0..max_extra_edges {
        let mut next: Vec<usize> = Vec::new();
        // degree sequence -> class ids in the next level
        let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut seen_steps: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &parent in &frontier {
            for &(u, v) in &candidates {
                if classes[parent].graph.has_edge(u, v) {
                    continue;
                }
                let graph = classes[parent].graph.with_edge(u, v)?;
                let spectrum = numeric_spectrum(&density_matrix(&graph)?)?;
                let sig = Signature::of(&graph, &spectrum);
                let bucket = buckets.entry(sig.degrees.clone()).or_default();
                let mut found = None;
                for &id in bucket.iter() {
                    if classes[id].signature.matches(&sig) {
                        if are_isomorphic(&classes[id].graph, &graph) {
                            found = Some(id);
                            break;
                        }
                        cospectral_splits += 1;
                    }
                }
                let child = match found {
                    Some(id) => id,
                    None => {
                        let id = classes.len();
                        classes.push(make_class(id, graph)?);
                        bucket.push(id);
                        next.push(id);
                        id
                    }
                };
                if seen_steps.insert((parent, child)) {
                    let verdict =
                        locc_verdict_pair(&classes[parent].spectrum, &classes[child].spectrum)?
                            .comparability();
                    steps.push(Step {
                        parent,
                        edge: (u, v),
                        child,
                        verdict,
                    });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    Ok(ExplorationState {
        n,
        cycle_only,
        max_extra_edges,
        classes,
        steps,
        cospectral_splits,
    })
}

/// The representative graph of every class, in discovery order.
pub fn enumerate_peripheral_graphs(n: usize, max_extra_edges: usize) -> Result<Vec<Graph>> {
    Ok(explore(n, max_extra_edges, false)?
        .classes
        .into_iter()
        .map(|c| c.graph)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceOutcome {
    Holds,
    Violated,
    /// Outside the part of the statement that makes a prediction.
    Unchecked,
}

impl InstanceOutcome {
    pub fn name(self) -> &'static str {
        match self {
            InstanceOutcome::Holds => "holds",
            InstanceOutcome::Violated => "violated",
            InstanceOutcome::Unchecked => "unchecked",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureVerdict {
    /// No violation, and every predicted case had instances.
    Consistent,
    Refuted,
    /// No violation, but some predicted case had no instances to test.
    Mixed,
}

impl ConjectureVerdict {
    pub fn name(self) -> &'static str {
        match self {
            ConjectureVerdict::Consistent => "consistent",
            ConjectureVerdict::Refuted => "refuted",
            ConjectureVerdict::Mixed => "mixed",
        }
    }
}

/// One evaluated instance: a step (conjecture 1) or an equal-size pair
/// (conjecture 2), with `a` the parent or first class.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureRecord {
    pub a: usize,
    pub b: usize,
    pub edge: Option<(usize, usize)>,
    pub a_edges: usize,
    pub b_edges: usize,
    pub comparability: Comparability,
    pub expected: Option<&'static str>,
    pub outcome: InstanceOutcome,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub description: String,
    pub a: Graph,
    pub b: Graph,
    pub comparability: Comparability,
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub conjecture: u8,
    pub n: usize,
    pub cycle_only: bool,
    pub max_extra_edges: usize,
    pub class_count: usize,
    /// Signature of each class, indexed by class id.
    pub signatures: Vec<String>,
    pub records: Vec<ConjectureRecord>,
    pub counterexamples: Vec<Counterexample>,
    pub verdict: ConjectureVerdict,
}

impl ConjectureReport {
    pub fn count(&self, outcome: InstanceOutcome) -> usize {
        self.records.iter().filter(|r| r.outcome == outcome).count()
    }
}

const EXPECT_INCOMPARABLE: &str = "incomparable";
const EXPECT_WHEEL_BELOW: &str = "wheel majorized by parent";
const EXPECT_COMPARABLE: &str = "comparable";

fn check_conjecture_order(n: usize) -> Result<()> {
    if !(5..=MAX_ORDER).contains(&n) {
        return Err(Error::param(
            "n",
            format!("conjecture checks support 5 <= n <= {MAX_ORDER}, got {n}"),
        ));
    }
    Ok(())
}

fn finish(
    conjecture: u8,
    state: &ExplorationState,
    records: Vec<ConjectureRecord>,
    counterexamples: Vec<Counterexample>,
    every_case_exercised: bool,
) -> ConjectureReport {
    let verdict = if !counterexamples.is_empty() {
        ConjectureVerdict::Refuted
    } else if every_case_exercised {
        ConjectureVerdict::Consistent
    } else {
        ConjectureVerdict::Mixed
    };
    ConjectureReport {
        conjecture,
        n: state.n,
        cycle_only: state.cycle_only,
        max_extra_edges: state.max_extra_edges,
        class_count: state.classes.len(),
        signatures: state.classes.iter().map(|c| c.signature.key()).collect(),
        records,
        counterexamples,
        verdict,
    }
}

/// Single-edge steps: those reaching at most `n − 3` extra edges should be
/// incomparable, and steps into the wheel should have the wheel's spectrum
/// majorized by the parent's.
pub fn conjecture_1_report(state: &ExplorationState) -> Result<ConjectureReport> {
    check_conjecture_order(state.n)?;
    let n = state.n;
    let mut records = Vec::with_capacity(state.steps.len());
    let mut counterexamples = Vec::new();
    let (mut low_cases, mut wheel_cases) = (0, 0);
    for step in &state.steps {
        let parent = state.class(step.parent);
        let child = state.class(step.child);
        let (expected, ok) = if child.extra_edges <= n - 3 {
            low_cases += 1;
            (Some(EXPECT_INCOMPARABLE), Some(step.verdict == Comparability::Incomparable))
        } else if child.is_wheel {
            wheel_cases += 1;
            let below = matches!(step.verdict, Comparability::BToA | Comparability::Both);
            (Some(EXPECT_WHEEL_BELOW), Some(below))
        } else {
            (None, None)
        };
        let outcome = match ok {
            Some(true) => InstanceOutcome::Holds,
            Some(false) => InstanceOutcome::Violated,
            None => InstanceOutcome::Unchecked,
        };
        if outcome == InstanceOutcome::Violated {
            counterexamples.push(Counterexample {
                description: format!(
                    "step {} -> {} adding ({},{}): expected {}, found {}",
                    parent.id,
                    child.id,
                    step.edge.0,
                    step.edge.1,
                    expected.unwrap_or(""),
                    step.verdict.name()
                ),
                a: parent.graph.clone(),
                b: child.graph.clone(),
                comparability: step.verdict,
            });
        }
        records.push(ConjectureRecord {
            a: parent.id,
            b: child.id,
            edge: Some(step.edge),
            a_edges: parent.extra_edges,
            b_edges: child.extra_edges,
            comparability: step.verdict,
            expected,
            outcome,
        });
    }
    Ok(finish(1, state, records, counterexamples, low_cases > 0 && wheel_cases > 0))
}

/// Distinct classes with the same number of extra edges should be comparable
/// in at least one direction.
pub fn conjecture_2_report(state: &ExplorationState) -> Result<ConjectureReport> {
    check_conjecture_order(state.n)?;
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    let max_level = state.classes.iter().map(|c| c.extra_edges).max().unwrap_or(0);
    for level in 0..=max_level {
        let members: Vec<&PeripheralClass> = state.classes_with_edges(level).collect();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let verdict = locc_verdict_pair(&a.spectrum, &b.spectrum)?.comparability();
                let outcome = if verdict.is_comparable() {
                    InstanceOutcome::Holds
                } else {
                    InstanceOutcome::Violated
                };
                if outcome == InstanceOutcome::Violated {
                    counterexamples.push(Counterexample {
                        description: format!(
                            "classes {} and {} with {level} extra edges are incomparable",
                            a.id, b.id
                        ),
                        a: a.graph.clone(),
                        b: b.graph.clone(),
                        comparability: verdict,
                    });
                }
                records.push(ConjectureRecord {
                    a: a.id,
                    b: b.id,
                    edge: None,
                    a_edges: level,
                    b_edges: level,
                    comparability: verdict,
                    expected: Some(EXPECT_COMPARABLE),
                    outcome,
                });
            }
        }
    }
    let exercised = !records.is_empty();
    Ok(finish(2, state, records, counterexamples, exercised))
}

/// Explores up to the wheel and evaluates conjecture 1.
pub fn test_conjecture_1(n: usize, cycle_only: bool) -> Result<ConjectureReport> {
    check_conjecture_order(n)?;
    conjecture_1_report(&explore(n, n - 1, cycle_only)?)
}

/// Explores up to the wheel and evaluates conjecture 2.
pub fn test_conjecture_2(n: usize, cycle_only: bool) -> Result<ConjectureReport> {
    check_conjecture_order(n)?;
    conjecture_2_report(&explore(n, n - 1, cycle_only)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{star_alike_disjoint, star_alike_path, star_like, star_plus_path, wheel};

    #[test]
    fn class_counts() {
        let s = explore(4, 1, false).unwrap();
        assert_eq!(s.classes_with_edges(1).count(), 1);
        let s = explore(5, 2, false).unwrap();
        assert_eq!(s.classes_with_edges(2).count(), 2);
        // graphs on 4 vertices with 2 edges: disjoint pair, path
        let s = explore(5, 6, false).unwrap();
        // all 11 graphs on 4 peripheral vertices
        assert_eq!(s.classes.len(), 11);
    }

    #[test]
    fn wheel_is_found() {
        let s = explore(7, 6, false).unwrap();
        let w = s.class_of(&wheel(7).unwrap()).unwrap();
        assert!(s.class(w).is_wheel);
        assert_eq!(s.classes.iter().filter(|c| c.is_wheel).count(), 1);
    }

    #[test]
    fn isomorphism_test() {
        let a = star_plus_path(6, 2).unwrap();
        let b = Graph::from_edges(6, (1..6).map(|v| (0, v)).chain([(3, 4), (4, 5)])).unwrap();
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&star_alike_disjoint(6).unwrap(), &star_alike_path(6).unwrap()));
        // C6 vs two triangles: same degrees, not isomorphic
        let c6 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt));
    }

    #[test]
    fn every_class_reachable_from_star() {
        let s = explore(6, 5, false).unwrap();
        let mut reached = alloc::vec![false; s.classes.len()];
        reached[0] = true;
        for step in &s.steps {
            assert!(reached[step.parent]);
            reached[step.child] = true;
        }
        assert!(reached.iter().all(|&r| r));
    }

    #[test]
    fn conjecture_1_known_steps() {
        let state = explore(7, 6, false).unwrap();
        let report = conjecture_1_report(&state).unwrap();
        let path = state.class_of(&star_plus_path(7, 5).unwrap()).unwrap();
        let ring = state.class_of(&wheel(7).unwrap()).unwrap();
        let step = state.step(path, ring).unwrap();
        assert!(step.verdict.is_comparable());
        let like = state.class_of(&star_like(7).unwrap()).unwrap();
        assert_eq!(state.step(0, like).unwrap().verdict, Comparability::Incomparable);
        assert_eq!(report.records.len(), state.steps.len());
        assert_eq!(
            report.verdict == ConjectureVerdict::Refuted,
            !report.counterexamples.is_empty()
        );
    }

    #[test]
    fn alike_pair_comparable_in_conjecture_2() {
        let state = explore(7, 2, false).unwrap();
        let d = state.class_of(&star_alike_disjoint(7).unwrap()).unwrap();
        let p = state.class_of(&star_alike_path(7).unwrap()).unwrap();
        let report = conjecture_2_report(&state).unwrap();
        let rec = report
            .records
            .iter()
            .find(|r| (r.a, r.b) == (d.min(p), d.max(p)))
            .unwrap();
        assert!(rec.comparability.is_comparable());
    }

    #[test]
    fn cycle_only_levels() {
        let s = explore(7, 6, true).unwrap();
        assert!(s.classes.iter().all(|c| c.graph.peripheral_edges().all(|(u, v)| {
            v == u + 1 || (u, v) == (1, 6)
        })));
        assert_eq!(s.classes.iter().filter(|c| c.is_wheel).count(), 1);
    }

    #[test]
    fn range_errors() {
        assert!(explore(3, 1, false).is_err());
        assert!(explore(10, 1, false).is_err());
        assert!(explore(5, 7, false).is_err());
        assert!(test_conjecture_1(4, false).is_err());
    }
}
