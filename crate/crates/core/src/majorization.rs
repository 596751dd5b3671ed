//! Majorization of probability vectors and the LOCC convertibility test
//! it decides for bipartite pure states.
//!
//! `x ≺ y` ("x is majorized by y") when every prefix sum of `x` sorted in
//! decreasing order is at most the matching prefix sum of `y`, with equal
//! totals. A pure state with Schmidt spectrum `x` converts to one with
//! spectrum `y` under LOCC exactly when `x ≺ y`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::spectrum::Spectrum;

/// Slack on numeric partial-sum comparisons.
pub const NUMERIC_SLACK: f64 = 1e-9;

/// Tolerance on negative components of a numeric probability vector.
pub const NEGATIVE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        }
    }
}

/// Scalar type a spectrum or probability vector is stored in.
///
/// The comparison rule is the only thing that differs between the exact and
/// numeric modes: rationals compare exactly, floats with [`NUMERIC_SLACK`].
pub trait Weight: Clone + PartialOrd + fmt::Debug {
    const MODE: Mode;
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn to_f64(&self) -> f64;
    /// `self ≤ other` under the mode's rule.
    fn at_most(&self, other: &Self) -> bool;
    /// Whether two totals count as equal.
    fn same_total(&self, other: &Self) -> bool;
    fn is_unit(total: &Self) -> bool;
    fn is_admissible_component(&self) -> bool;
    /// Negative noise within tolerance is replaced by zero.
    fn clamp_component(self) -> Self;
}

impl Weight for Rational {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Rational::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn at_most(&self, other: &Self) -> bool {
        self <= other
    }
    fn same_total(&self, other: &Self) -> bool {
        self == other
    }
    fn is_unit(total: &Self) -> bool {
        *total == Rational::one()
    }
    fn is_admissible_component(&self) -> bool {
        !self.is_negative()
    }
    fn clamp_component(self) -> Self {
        self
    }
}

impl Weight for f64 {
    const MODE: Mode = Mode::Numeric;

    fn zero() -> Self {
        0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn at_most(&self, other: &Self) -> bool {
        *self <= *other + NUMERIC_SLACK
    }
    fn same_total(&self, other: &Self) -> bool {
        libm::fabs(self - other) <= NUMERIC_SLACK
    }
    fn is_unit(total: &Self) -> bool {
        libm::fabs(total - 1.0) <= NUMERIC_SLACK
    }
    fn is_admissible_component(&self) -> bool {
        self.is_finite() && *self >= -NEGATIVE_TOLERANCE
    }
    fn clamp_component(self) -> Self {
        self.max(0.0)
    }
}

/// A probability vector kept in decreasing order, tagged with where it came
/// from.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector<T> {
    components: Vec<T>,
    provenance: String,
}

impl<T: Weight> ProbVector<T> {
    /// Validates non-negativity and unit sum, then sorts descending.
    pub fn new(components: Vec<T>, provenance: impl Into<String>) -> Result<Self> {
        let provenance = provenance.into();
        let mut components: Vec<T> = components
            .into_iter()
            .map(|x| {
                if x.is_admissible_component() {
                    Ok(x.clamp_component())
                } else {
                    Err(Error::InvalidInput(format!(
                        "{provenance}: negative component {x:?}"
                    )))
                }
            })
            .collect::<Result<_>>()?;
        let total = components.iter().fold(T::zero(), |a, x| a.plus(x));
        if !T::is_unit(&total) {
            return Err(Error::InvalidInput(format!(
                "{provenance}: components sum to {total:?}, not 1"
            )));
        }
        components.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
        Ok(ProbVector {
            components,
            provenance,
        })
    }

    pub fn from_spectrum(spectrum: &Spectrum<T>, provenance: impl Into<String>) -> Result<Self> {
        ProbVector::new(spectrum.flatten(), provenance)
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    fn partial_sums(&self, len: usize) -> Vec<T> {
        let mut acc = T::zero();
        (0..len)
            .map(|k| {
                if let Some(x) = self.components.get(k) {
                    acc = acc.plus(x);
                }
                acc.clone()
            })
            .collect()
    }
}

/// Outcome of testing `x ≺ y`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationResult<T> {
    pub holds: bool,
    /// 1-based length of the first prefix where `x` exceeds `y`.
    pub first_failing_k: Option<usize>,
    pub partial_sums_x: Vec<T>,
    pub partial_sums_y: Vec<T>,
}

/// Decides `x ≺ y`. The shorter vector is padded with zeros.
pub fn majorizes<T: Weight>(x: &ProbVector<T>, y: &ProbVector<T>) -> Result<MajorizationResult<T>> {
    let len = x.len().max(y.len());
    let partial_sums_x = x.partial_sums(len);
    let partial_sums_y = y.partial_sums(len);
    if let (Some(tx), Some(ty)) = (partial_sums_x.last(), partial_sums_y.last()) {
        if !tx.same_total(ty) {
            return Err(Error::InvalidInput(format!(
                "totals differ: {} sums to {tx:?}, {} to {ty:?}",
                x.provenance, y.provenance
            )));
        }
    }
    let first_failing_k = partial_sums_x
        .iter()
        .zip(&partial_sums_y)
        .position(|(sx, sy)| !sx.at_most(sy))
        .map(|i| i + 1);
    Ok(MajorizationResult {
        holds: first_failing_k.is_none(),
        first_failing_k,
        partial_sums_x,
        partial_sums_y,
    })
}

/// Whether the state with Schmidt spectrum `source` can be turned into the
/// one with spectrum `target` by LOCC.
pub fn locc_transformable<T: Weight>(source: &ProbVector<T>, target: &ProbVector<T>) -> Result<bool> {
    Ok(majorizes(source, target)?.holds)
}

/// How two spectra relate under majorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparability {
    /// `a ≺ b` only.
    AToB,
    /// `b ≺ a` only.
    BToA,
    /// Both hold: the sorted vectors are equal.
    Both,
    Incomparable,
}

impl Comparability {
    pub fn is_comparable(self) -> bool {
        self != Comparability::Incomparable
    }

    pub fn name(self) -> &'static str {
        match self {
            Comparability::AToB => "a_to_b",
            Comparability::BToA => "b_to_a",
            Comparability::Both => "both",
            Comparability::Incomparable => "incomparable",
        }
    }
}

/// Majorization checked in both directions.
#[derive(Debug, Clone, PartialEq)]
pub struct PairVerdict<T> {
    /// `a ≺ b`: a converts to b.
    pub a_to_b: MajorizationResult<T>,
    /// `b ≺ a`.
    pub b_to_a: MajorizationResult<T>,
}

impl<T> PairVerdict<T> {
    pub fn comparability(&self) -> Comparability {
        match (self.a_to_b.holds, self.b_to_a.holds) {
            (true, true) => Comparability::Both,
            (true, false) => Comparability::AToB,
            (false, true) => Comparability::BToA,
            (false, false) => Comparability::Incomparable,
        }
    }
}

/// Evaluates majorization between two spectra in both directions.
pub fn locc_verdict_pair<T: Weight>(a: &Spectrum<T>, b: &Spectrum<T>) -> Result<PairVerdict<T>> {
    let x = ProbVector::from_spectrum(a, "a")?;
    let y = ProbVector::from_spectrum(b, "b")?;
    verdict_vectors(&x, &y)
}

pub fn verdict_vectors<T: Weight>(a: &ProbVector<T>, b: &ProbVector<T>) -> Result<PairVerdict<T>> {
    Ok(PairVerdict {
        a_to_b: majorizes(a, b)?,
        b_to_a: majorizes(b, a)?,
    })
}
