//! Parameter sweeps that check the entropy and LOCC statements about the
//! star-relevant families, plus the wheel/path counterexample.
//!
//! Every record compares what the brute-force evaluation finds with what the
//! published statement predicts. A mismatch is kept as a `fail` record with
//! the note [`FAIL_AGAINST_PROSE`] and the full partial sums as witness; it is
//! never reconciled.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use crate::density::density_matrix;
use crate::entropy::entropy;
use crate::error::{Error, Result};
use crate::graph::{max_disjoint_edges, star_plus_path, wheel, Family};
use crate::majorization::{locc_verdict_pair, Comparability, MajorizationResult, PairVerdict, Weight};
use crate::rational::Rational;
use crate::spectrum::{closed_form_spectrum, numeric_spectrum};

/// Entropy differences at or below this are not counted as increases.
pub const POSITIVITY_THRESHOLD: f64 = 1e-12;

/// Allowed deviation from the 4-decimal spectra printed for the
/// counterexample.
pub const PRINTED_VALUE_TOLERANCE: f64 = 1e-3;

pub const FAIL_AGAINST_PROSE: &str = "fail-against-prose";

/// Printed spectrum of the star plus a 5-edge peripheral path on 7 vertices.
pub const PRINTED_PATH_SPECTRUM: [f64; 7] = [0.0, 0.0576, 0.0909, 0.1364, 0.1818, 0.2151, 0.3182];

/// Printed spectrum of the wheel on 7 vertices.
pub const PRINTED_WHEEL_SPECTRUM: [f64; 7] = [0.0, 0.0833, 0.0833, 0.1667, 0.1667, 0.2083, 0.2917];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T2,
    T3,
    T5,
    T6,
    T8,
    T9,
    /// LOCC relation between the two alike graphs.
    AlikeRelation,
    Counterexample,
}

impl TheoremId {
    pub fn label(self) -> &'static str {
        match self {
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::AlikeRelation => "alike",
            TheoremId::Counterexample => "counterexample",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            TheoremId::T2,
            TheoremId::T3,
            TheoremId::T5,
            TheoremId::T6,
            TheoremId::T8,
            TheoremId::T9,
            TheoremId::AlikeRelation,
            TheoremId::Counterexample,
        ];
        all.into_iter()
            .find(|t| t.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::param("theorem", format!("unknown theorem `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Boundary,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Boundary => "boundary",
        }
    }
}

/// A number in a witness, exact when the computation was.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Numeric(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64(),
            Scalar::Numeric(x) => *x,
        }
    }
}

trait IntoScalar {
    fn into_scalar(self) -> Scalar;
}

impl IntoScalar for Rational {
    fn into_scalar(self) -> Scalar {
        Scalar::Exact(self)
    }
}

impl IntoScalar for f64 {
    fn into_scalar(self) -> Scalar {
        Scalar::Numeric(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectionWitness {
    pub holds: bool,
    pub first_failing_k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Entropy {
        before_bits: f64,
        after_bits: f64,
        difference: f64,
    },
    Majorization {
        a: String,
        b: String,
        a_to_b: DirectionWitness,
        b_to_a: DirectionWitness,
        comparability: Comparability,
        partial_sums_a: Vec<Scalar>,
        partial_sums_b: Vec<Scalar>,
    },
    Spectrum {
        /// Computed eigenvalues, ascending like the printed list.
        computed: Vec<f64>,
        printed: Vec<f64>,
        max_deviation: f64,
    },
}

impl Witness {
    fn majorization<T: Weight + IntoScalar>(a: String, b: String, v: &PairVerdict<T>) -> Self {
        let dir = |r: &MajorizationResult<T>| DirectionWitness {
            holds: r.holds,
            first_failing_k: r.first_failing_k,
        };
        Witness::Majorization {
            a,
            b,
            a_to_b: dir(&v.a_to_b),
            b_to_a: dir(&v.b_to_a),
            comparability: v.comparability(),
            partial_sums_a: v.a_to_b.partial_sums_x.iter().cloned().map(IntoScalar::into_scalar).collect(),
            partial_sums_b: v.a_to_b.partial_sums_y.iter().cloned().map(IntoScalar::into_scalar).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub n: usize,
    pub m: Option<usize>,
    pub claim: String,
    pub result: Outcome,
    pub witness: Witness,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub boundary: usize,
    pub total: usize,
    /// Entropy sweeps: every difference sequence (one per `m`) strictly
    /// decreases in `n`.
    pub monotone_decreasing: Option<bool>,
    /// Majorization sweeps: `(n, m)` where comparability differs from the
    /// previous `n` at the same `m`.
    pub comparability_changes: Vec<(usize, Option<usize>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    Entropy,
    Majorization,
    Other,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub subject: String,
    pub n_range: (usize, usize),
    pub m: Option<usize>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Orders records by `(n, m)` and derives the summary from them.
    pub fn assemble(
        theorem: TheoremId,
        subject: String,
        n_range: (usize, usize),
        m: Option<usize>,
        mut records: Vec<Record>,
        kind: SweepKind,
    ) -> Self {
        records.sort_by_key(|r| (r.n, r.m));
        let count = |o: Outcome| records.iter().filter(|r| r.result == o).count();
        let mut summary = Summary {
            pass: count(Outcome::Pass),
            fail: count(Outcome::Fail),
            boundary: count(Outcome::Boundary),
            total: records.len(),
            ..Summary::default()
        };
        match kind {
            SweepKind::Entropy => {
                summary.monotone_decreasing = Some(group_by_m(&records).iter().all(|group| {
                    let diffs: Vec<f64> = group
                        .iter()
                        .map(|r| match r.witness {
                            Witness::Entropy { difference, .. } => difference,
                            _ => f64::NAN,
                        })
                        .collect();
                    diffs.windows(2).all(|w| w[0] > w[1])
                }));
            }
            SweepKind::Majorization => {
                for group in group_by_m(&records) {
                    let mut previous: Option<bool> = None;
                    for r in group {
                        if let Witness::Majorization { comparability, .. } = r.witness {
                            let now = comparability.is_comparable();
                            if previous.is_some_and(|p| p != now) {
                                summary.comparability_changes.push((r.n, r.m));
                            }
                            previous = Some(now);
                        }
                    }
                }
            }
            SweepKind::Other => {}
        }
        VerificationReport {
            theorem,
            subject,
            n_range,
            m,
            records,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    pub fn record(&self, n: usize, m: Option<usize>) -> Option<&Record> {
        self.records.iter().find(|r| r.n == n && r.m == m)
    }
}

fn group_by_m(records: &[Record]) -> Vec<Vec<&Record>> {
    let mut ms: Vec<Option<usize>> = records.iter().map(|r| r.m).collect();
    ms.sort();
    ms.dedup();
    ms.into_iter()
        .map(|m| records.iter().filter(|r| r.m == m).collect())
        .collect()
}

fn member_label(family: Family, n: usize, m: Option<usize>) -> String {
    match m {
        Some(m) => format!("{family}({n},{m})"),
        None => format!("{family}({n})"),
    }
}

/// Values of `m` for which `star_mlike(n, m)` and `star_mlike(n, m + 1)`
/// both exist.
fn mlike_steps(n: usize) -> RangeInclusive<usize> {
    1..=max_disjoint_edges(n).saturating_sub(1)
}

fn check_mlike_m(n: usize, m: Option<usize>) -> Result<Vec<usize>> {
    let steps = mlike_steps(n);
    match m {
        Some(m) if steps.contains(&m) => Ok(alloc::vec![m]),
        Some(m) => Err(Error::param(
            "m",
            format!("star_mlike step m -> m+1 needs m + 1 <= {} at n = {n}, got m = {m}", max_disjoint_edges(n)),
        )),
        None if steps.is_empty() => Err(Error::param(
            "n",
            format!("no star_mlike step exists at n = {n}"),
        )),
        None => Ok(steps.collect()),
    }
}

fn check_range(range: &RangeInclusive<usize>) -> Result<()> {
    if range.is_empty() {
        return Err(Error::param("n_range", "empty range"));
    }
    Ok(())
}

/// A graph operation whose entropy effect is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyStep {
    StarToStarLike,
    StarLikeToAlikeDisjoint,
    StarLikeToAlikePath,
    /// `star_mlike(n, m) → star_mlike(n, m + 1)`.
    StarMlikeStep,
}

impl EntropyStep {
    pub fn theorem(self) -> TheoremId {
        match self {
            EntropyStep::StarToStarLike => TheoremId::T2,
            EntropyStep::StarLikeToAlikeDisjoint | EntropyStep::StarLikeToAlikePath => TheoremId::T5,
            EntropyStep::StarMlikeStep => TheoremId::T8,
        }
    }

    fn families(self) -> (Family, Family) {
        match self {
            EntropyStep::StarToStarLike => (Family::Star, Family::StarLike),
            EntropyStep::StarLikeToAlikeDisjoint => (Family::StarLike, Family::AlikeDisjoint),
            EntropyStep::StarLikeToAlikePath => (Family::StarLike, Family::AlikePath),
            EntropyStep::StarMlikeStep => (Family::StarMlike, Family::StarMlike),
        }
    }

    pub fn subject(self) -> String {
        match self {
            EntropyStep::StarMlikeStep => "star_mlike(m) -> star_mlike(m+1)".to_string(),
            _ => {
                let (a, b) = self.families();
                format!("{a} -> {b}")
            }
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            EntropyStep::StarMlikeStep => 5,
            _ => {
                let (a, b) = self.families();
                a.min_order().max(b.min_order())
            }
        }
    }
}

/// Entropy records for one `n` (one per `m` for the star-mlike step).
pub fn entropy_records(step: EntropyStep, n: usize, m: Option<usize>) -> Result<Vec<Record>> {
    if n < step.min_order() {
        return Err(Error::param(
            "n",
            format!("{} needs n >= {}, got {n}", step.subject(), step.min_order()),
        ));
    }
    let (fa, fb) = step.families();
    let pairs: Vec<(Option<usize>, Option<usize>)> = match step {
        EntropyStep::StarMlikeStep => check_mlike_m(n, m)?
            .into_iter()
            .map(|m| (Some(m), Some(m + 1)))
            .collect(),
        _ => {
            if m.is_some() {
                return Err(Error::param("m", format!("{} does not take m", step.subject())));
            }
            alloc::vec![(None, None)]
        }
    };
    pairs
        .into_iter()
        .map(|(ma, mb)| {
            let before = entropy(&closed_form_spectrum(fa, n, ma)?)?.bits;
            let after = entropy(&closed_form_spectrum(fb, n, mb)?)?.bits;
            let difference = after - before;
            let result = if difference > POSITIVITY_THRESHOLD {
                Outcome::Pass
            } else if difference >= -POSITIVITY_THRESHOLD {
                Outcome::Boundary
            } else {
                Outcome::Fail
            };
            Ok(Record {
                n,
                m: ma,
                claim: format!(
                    "S({}) - S({}) > 0",
                    member_label(fb, n, mb),
                    member_label(fa, n, ma)
                ),
                result,
                witness: Witness::Entropy {
                    before_bits: before,
                    after_bits: after,
                    difference,
                },
                note: None,
            })
        })
        .collect()
}

/// Sweeps an entropy step over `n_range`, computing differences from the
/// closed-form spectra.
pub fn verify_entropy_increase(
    step: EntropyStep,
    n_range: RangeInclusive<usize>,
    m: Option<usize>,
) -> Result<VerificationReport> {
    check_range(&n_range)?;
    let bounds = (*n_range.start(), *n_range.end());
    let mut records = Vec::new();
    for n in n_range {
        records.extend(entropy_records(step, n, m)?);
    }
    Ok(VerificationReport::assemble(
        step.theorem(),
        step.subject(),
        bounds,
        m,
        records,
        SweepKind::Entropy,
    ))
}

/// A pair of families whose LOCC relation is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonPair {
    StarVsStarLike,
    StarLikeVsAlikeDisjoint,
    StarLikeVsAlikePath,
    AlikeDisjointVsAlikePath,
    /// `star_mlike(n, m)` vs `star_mlike(n, m + 1)`.
    StarMlikeStep,
}

/// What the published statement predicts for one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// Majorization holds in at least one direction.
    Comparable,
    Incomparable,
    /// Exactly `a ≺ b`, not the reverse.
    OnlyAToB,
}

impl Expectation {
    pub fn admits(self, c: Comparability) -> bool {
        match self {
            Expectation::Comparable => c.is_comparable(),
            Expectation::Incomparable => c == Comparability::Incomparable,
            Expectation::OnlyAToB => c == Comparability::AToB,
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Expectation::Comparable => "comparable",
            Expectation::Incomparable => "incomparable",
            Expectation::OnlyAToB => "a majorized by b, not conversely",
        }
    }
}

impl ComparisonPair {
    pub fn theorem(self) -> TheoremId {
        match self {
            ComparisonPair::StarVsStarLike => TheoremId::T3,
            ComparisonPair::StarLikeVsAlikeDisjoint | ComparisonPair::StarLikeVsAlikePath => TheoremId::T6,
            ComparisonPair::AlikeDisjointVsAlikePath => TheoremId::AlikeRelation,
            ComparisonPair::StarMlikeStep => TheoremId::T9,
        }
    }

    fn families(self) -> (Family, Family) {
        match self {
            ComparisonPair::StarVsStarLike => (Family::Star, Family::StarLike),
            ComparisonPair::StarLikeVsAlikeDisjoint => (Family::StarLike, Family::AlikeDisjoint),
            ComparisonPair::StarLikeVsAlikePath => (Family::StarLike, Family::AlikePath),
            ComparisonPair::AlikeDisjointVsAlikePath => (Family::AlikeDisjoint, Family::AlikePath),
            ComparisonPair::StarMlikeStep => (Family::StarMlike, Family::StarMlike),
        }
    }

    pub fn subject(self) -> String {
        match self {
            ComparisonPair::StarMlikeStep => "star_mlike(m) vs star_mlike(m+1)".to_string(),
            _ => {
                let (a, b) = self.families();
                format!("{a} vs {b}")
            }
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            ComparisonPair::StarMlikeStep => 5,
            _ => {
                let (a, b) = self.families();
                a.min_order().max(b.min_order())
            }
        }
    }

    /// Prediction at `n`, read from the printed statements:
    ///
    /// * star vs star_like: comparable only for `n ≤ 3`;
    /// * star_like vs alike_disjoint: comparable only for `n ≤ 4`;
    /// * star_like vs alike_path: the printed chain claims no `n` works;
    /// * alike_disjoint vs alike_path: one-directional for every `n`;
    /// * consecutive star_mlike members: never comparable.
    pub fn expectation(self, n: usize) -> Expectation {
        match self {
            ComparisonPair::StarVsStarLike if n <= 3 => Expectation::Comparable,
            ComparisonPair::StarLikeVsAlikeDisjoint if n <= 4 => Expectation::Comparable,
            ComparisonPair::AlikeDisjointVsAlikePath => Expectation::OnlyAToB,
            _ => Expectation::Incomparable,
        }
    }
}

/// Majorization records for one `n` (one per `m` for the star-mlike pair),
/// evaluated exactly on the closed-form spectra.
pub fn majorization_records(pair: ComparisonPair, n: usize, m: Option<usize>) -> Result<Vec<Record>> {
    if n < pair.min_order() {
        return Err(Error::param(
            "n",
            format!("{} needs n >= {}, got {n}", pair.subject(), pair.min_order()),
        ));
    }
    let (fa, fb) = pair.families();
    let params: Vec<(Option<usize>, Option<usize>)> = match pair {
        ComparisonPair::StarMlikeStep => check_mlike_m(n, m)?
            .into_iter()
            .map(|m| (Some(m), Some(m + 1)))
            .collect(),
        _ => {
            if m.is_some() {
                return Err(Error::param("m", format!("{} does not take m", pair.subject())));
            }
            alloc::vec![(None, None)]
        }
    };
    params
        .into_iter()
        .map(|(ma, mb)| {
            let a = closed_form_spectrum(fa, n, ma)?;
            let b = closed_form_spectrum(fb, n, mb)?;
            let verdict = locc_verdict_pair(&a, &b)?;
            let expected = pair.expectation(n);
            let observed = verdict.comparability();
            let matches = expected.admits(observed);
            let (la, lb) = (member_label(fa, n, ma), member_label(fb, n, mb));
            Ok(Record {
                n,
                m: ma,
                claim: format!("{la} vs {lb}: {}", expected.describe()),
                result: if matches { Outcome::Pass } else { Outcome::Fail },
                witness: Witness::majorization(la, lb, &verdict),
                note: (!matches).then(|| FAIL_AGAINST_PROSE.to_string()),
            })
        })
        .collect()
}

/// Sweeps the LOCC comparison of a pair over `n_range`.
pub fn verify_majorization_chain(
    pair: ComparisonPair,
    n_range: RangeInclusive<usize>,
    m: Option<usize>,
) -> Result<VerificationReport> {
    check_range(&n_range)?;
    let bounds = (*n_range.start(), *n_range.end());
    let mut records = Vec::new();
    for n in n_range {
        records.extend(majorization_records(pair, n, m)?);
    }
    Ok(VerificationReport::assemble(
        pair.theorem(),
        pair.subject(),
        bounds,
        m,
        records,
        SweepKind::Majorization,
    ))
}

/// Rebuilds the 7-vertex path/wheel example: numeric spectra against the
/// printed values, and `spectrum(wheel) ≺ spectrum(path)`.
pub fn reproduce_counterexample() -> Result<VerificationReport> {
    let path_graph = star_plus_path(7, 5)?;
    let wheel_graph = wheel(7)?;
    let path = numeric_spectrum(&density_matrix(&path_graph)?)?;
    let ring = numeric_spectrum(&density_matrix(&wheel_graph)?)?;

    let spectrum_record = |label: &str, computed_desc: Vec<f64>, printed: &[f64]| {
        let mut computed = computed_desc;
        computed.reverse();
        let max_deviation = computed
            .iter()
            .zip(printed)
            .map(|(x, y)| libm::fabs(x - y))
            .fold(0.0, f64::max);
        let ok = computed.len() == printed.len() && max_deviation <= PRINTED_VALUE_TOLERANCE;
        Record {
            n: 7,
            m: None,
            claim: format!("spectrum of {label} matches printed values within {PRINTED_VALUE_TOLERANCE}"),
            result: if ok { Outcome::Pass } else { Outcome::Fail },
            witness: Witness::Spectrum {
                computed,
                printed: printed.to_vec(),
                max_deviation,
            },
            note: (!ok).then(|| FAIL_AGAINST_PROSE.to_string()),
        }
    };

    let verdict = locc_verdict_pair(&ring, &path)?;
    let holds = verdict.a_to_b.holds;
    let records = alloc::vec![
        spectrum_record("star_plus_path(7,5)", path.to_f64_values(), &PRINTED_PATH_SPECTRUM),
        spectrum_record("wheel(7)", ring.to_f64_values(), &PRINTED_WHEEL_SPECTRUM),
        Record {
            n: 7,
            m: None,
            claim: "spectrum(wheel(7)) is majorized by spectrum(star_plus_path(7,5))".to_string(),
            result: if holds { Outcome::Pass } else { Outcome::Fail },
            witness: Witness::majorization("wheel(7)".to_string(), "star_plus_path(7,5)".to_string(), &verdict),
            note: (!holds).then(|| FAIL_AGAINST_PROSE.to_string()),
        },
    ];
    Ok(VerificationReport::assemble(
        TheoremId::Counterexample,
        "star_plus_path(7,5) -> wheel(7)".to_string(),
        (7, 7),
        None,
        records,
        SweepKind::Other,
    ))
}

/// Which sweeps a theorem id runs, with default lower bounds on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Entropy(EntropyStep),
    Majorization(ComparisonPair),
}

impl Sweep {
    pub fn min_order(self) -> usize {
        match self {
            Sweep::Entropy(s) => s.min_order(),
            Sweep::Majorization(p) => p.min_order(),
        }
    }

    pub fn records(self, n: usize, m: Option<usize>) -> Result<Vec<Record>> {
        match self {
            Sweep::Entropy(s) => entropy_records(s, n, m),
            Sweep::Majorization(p) => majorization_records(p, n, m),
        }
    }

    pub fn theorem(self) -> TheoremId {
        match self {
            Sweep::Entropy(s) => s.theorem(),
            Sweep::Majorization(p) => p.theorem(),
        }
    }

    pub fn subject(self) -> String {
        match self {
            Sweep::Entropy(s) => s.subject(),
            Sweep::Majorization(p) => p.subject(),
        }
    }

    pub fn kind(self) -> SweepKind {
        match self {
            Sweep::Entropy(_) => SweepKind::Entropy,
            Sweep::Majorization(_) => SweepKind::Majorization,
        }
    }

    /// Runs the sweep sequentially.
    pub fn run(self, n_range: RangeInclusive<usize>, m: Option<usize>) -> Result<VerificationReport> {
        match self {
            Sweep::Entropy(s) => verify_entropy_increase(s, n_range, m),
            Sweep::Majorization(p) => verify_majorization_chain(p, n_range, m),
        }
    }
}

/// Sweeps belonging to a theorem id (T5 and T6 cover both alike variants).
pub fn sweeps_for(theorem: TheoremId) -> Vec<Sweep> {
    use ComparisonPair as P;
    use EntropyStep as E;
    match theorem {
        TheoremId::T2 => alloc::vec![Sweep::Entropy(E::StarToStarLike)],
        TheoremId::T5 => alloc::vec![
            Sweep::Entropy(E::StarLikeToAlikeDisjoint),
            Sweep::Entropy(E::StarLikeToAlikePath)
        ],
        TheoremId::T8 => alloc::vec![Sweep::Entropy(E::StarMlikeStep)],
        TheoremId::T3 => alloc::vec![Sweep::Majorization(P::StarVsStarLike)],
        TheoremId::T6 => alloc::vec![
            Sweep::Majorization(P::StarLikeVsAlikeDisjoint),
            Sweep::Majorization(P::StarLikeVsAlikePath)
        ],
        TheoremId::T9 => alloc::vec![Sweep::Majorization(P::StarMlikeStep)],
        TheoremId::AlikeRelation => alloc::vec![Sweep::Majorization(P::AlikeDisjointVsAlikePath)],
        TheoremId::Counterexample => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_to_star_like_small() {
        let r = verify_entropy_increase(EntropyStep::StarToStarLike, 3..=30, None).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.summary.total, 28);
        assert_eq!(r.summary.monotone_decreasing, Some(true));
    }

    #[test]
    fn mlike_step_at_seven() {
        let recs = entropy_records(EntropyStep::StarMlikeStep, 7, Some(2)).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].result, Outcome::Pass);
        // n = 7 admits m = 1, 2 as steps (m + 1 <= 3)
        assert_eq!(entropy_records(EntropyStep::StarMlikeStep, 7, None).unwrap().len(), 2);
        assert!(entropy_records(EntropyStep::StarMlikeStep, 7, Some(3)).is_err());
    }

    #[test]
    fn invalid_ranges() {
        assert!(verify_entropy_increase(EntropyStep::StarToStarLike, 2..=10, None).is_err());
        assert!(verify_entropy_increase(EntropyStep::StarLikeToAlikeDisjoint, 4..=10, None).is_err());
        assert!(verify_majorization_chain(ComparisonPair::StarLikeVsAlikePath, 3..=10, None).is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 10..=3;
        assert!(verify_majorization_chain(ComparisonPair::StarVsStarLike, empty, None).is_err());
    }

    #[test]
    fn star_vs_star_like_threshold() {
        let r = verify_majorization_chain(ComparisonPair::StarVsStarLike, 3..=20, None).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.summary.comparability_changes, [(4, None)]);
        let Witness::Majorization { comparability, .. } = &r.record(3, None).unwrap().witness else {
            panic!()
        };
        assert_eq!(*comparability, Comparability::BToA);
    }

    #[test]
    fn alike_path_boundary_recorded() {
        let r = verify_majorization_chain(ComparisonPair::StarLikeVsAlikePath, 4..=12, None).unwrap();
        let at4 = r.record(4, None).unwrap();
        assert_eq!(at4.result, Outcome::Fail);
        assert_eq!(at4.note.as_deref(), Some(FAIL_AGAINST_PROSE));
        let Witness::Majorization { b_to_a, partial_sums_a, partial_sums_b, .. } = &at4.witness else {
            panic!()
        };
        assert!(b_to_a.holds);
        assert_eq!(partial_sums_a[1], Scalar::Exact(Rational::new(7, 8)));
        assert_eq!(partial_sums_b[1], Scalar::Exact(Rational::new(4, 5)));
        // the decisive tie: both third partial sums equal 1
        assert_eq!(partial_sums_a[2], Scalar::Exact(Rational::one()));
        assert_eq!(partial_sums_b[2], Scalar::Exact(Rational::one()));
        assert_eq!(r.summary.fail, 1);
        assert!(r.records.iter().filter(|x| x.n > 4).all(|x| x.result == Outcome::Pass));
    }

    #[test]
    fn counterexample() {
        let r = reproduce_counterexample().unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.records.len(), 3);
    }

    #[test]
    fn theorem_ids_parse() {
        assert_eq!("t9".parse::<TheoremId>().unwrap(), TheoremId::T9);
        assert_eq!("alike".parse::<TheoremId>().unwrap(), TheoremId::AlikeRelation);
        assert!("T4".parse::<TheoremId>().is_err());
    }
}
