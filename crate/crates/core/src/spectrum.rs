//! Spectra of graph density matrices: closed forms for the star-relevant
//! families and a numerical route through the Jacobi eigensolver.

use alloc::format;
use alloc::vec::Vec;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::graph::{max_disjoint_edges, Family};
use crate::jacobi::{symmetric_eigenvalues, SymMatrix};
use crate::majorization::{Mode, Weight};
use crate::rational::Rational;

/// Eigenvalues closer than this are reported as one value with multiplicity.
pub const GROUPING_TOLERANCE: f64 = 1e-8;

/// Negative eigenvalues down to `-CLAMP_WINDOW` are rounding noise and are
/// clamped to zero; anything below is a PSD violation.
pub const CLAMP_WINDOW: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvalue<T> {
    pub value: T,
    pub multiplicity: usize,
}

/// A multiset of eigenvalues, stored as distinct values in descending order.
///
/// `Spectrum<Rational>` is the exact mode, `Spectrum<f64>` the numeric one.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    entries: Vec<Eigenvalue<T>>,
}

impl<T: Weight> Spectrum<T> {
    pub fn entries(&self) -> &[Eigenvalue<T>] {
        &self.entries
    }

    pub fn mode(&self) -> Mode {
        T::MODE
    }

    /// Sum of multiplicities.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Multiplicities in entry order.
    pub fn profile(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.multiplicity).collect()
    }

    /// `Σ value · multiplicity`.
    pub fn total(&self) -> T {
        self.flatten().iter().fold(T::zero(), |acc, x| acc.plus(x))
    }

    pub fn is_normalized(&self) -> bool {
        T::is_unit(&self.total())
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn flatten(&self) -> Vec<T> {
        self.entries
            .iter()
            .flat_map(|e| core::iter::repeat_n(e.value.clone(), e.multiplicity))
            .collect()
    }

    pub fn to_f64_values(&self) -> Vec<f64> {
        self.flatten().iter().map(Weight::to_f64).collect()
    }
}

impl Spectrum<Rational> {
    /// Builds an exact spectrum from `(value, multiplicity)` pairs: zero
    /// multiplicities are dropped, equal values merged, and the result sorted
    /// descending.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Rational, usize)>,
    {
        let mut entries: Vec<Eigenvalue<Rational>> = Vec::new();
        for (value, multiplicity) in pairs {
            if multiplicity == 0 {
                continue;
            }
            match entries.iter_mut().find(|e| e.value == value) {
                Some(e) => e.multiplicity += multiplicity,
                None => entries.push(Eigenvalue {
                    value,
                    multiplicity,
                }),
            }
        }
        entries.sort_by(|a, b| b.value.cmp(&a.value));
        Spectrum { entries }
    }

    pub fn to_numeric(&self) -> Spectrum<f64> {
        Spectrum {
            entries: self
                .entries
                .iter()
                .map(|e| Eigenvalue {
                    value: e.value.to_f64(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
        }
    }
}

impl Spectrum<f64> {
    /// Groups raw eigenvalues into distinct values. Runs of sorted values
    /// whose consecutive gaps are at most `gap` form one entry, reported at
    /// the run's mean.
    pub fn from_eigenvalues(values: &[f64], gap: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let mut entries: Vec<Eigenvalue<f64>> = Vec::new();
        let mut run: Vec<f64> = Vec::new();
        for v in sorted {
            if let Some(&last) = run.last() {
                if last - v > gap {
                    entries.push(mean_entry(&run));
                    run.clear();
                }
            }
            run.push(v);
        }
        if !run.is_empty() {
            entries.push(mean_entry(&run));
        }
        Spectrum { entries }
    }

    /// Largest per-eigenvalue difference against another spectrum of the
    /// same order, comparing the flattened value lists.
    pub fn max_abs_diff(&self, other: &Spectrum<f64>) -> Option<f64> {
        let a = self.flatten();
        let b = other.flatten();
        (a.len() == b.len()).then(|| {
            a.iter()
                .zip(&b)
                .map(|(x, y)| libm::fabs(x - y))
                .fold(0.0, f64::max)
        })
    }

    /// Replaces each value by the nearest fraction with denominator at most
    /// `max_denominator`, provided it lies within `tol`.
    pub fn rationalize(&self, max_denominator: u64, tol: f64) -> Option<Spectrum<Rational>> {
        let mut pairs = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let r = Rational::approximate(e.value, max_denominator)?;
            if libm::fabs(r.to_f64() - e.value) > tol {
                return None;
            }
            pairs.push((r, e.multiplicity));
        }
        Some(Spectrum::from_pairs(pairs))
    }
}

fn mean_entry(run: &[f64]) -> Eigenvalue<f64> {
    Eigenvalue {
        value: run.iter().sum::<f64>() / run.len() as f64,
        multiplicity: run.len(),
    }
}

/// Formula-domain check for the closed forms. Wider than the graph domain:
/// the alike formulas accept `n = 4` even though the disjoint graph needs 5.
fn check_closed_form_domain(family: Family, n: usize, m: usize) -> Result<()> {
    let min = match family {
        Family::Star => 2,
        Family::StarLike | Family::StarMlike => 3,
        Family::AlikeDisjoint | Family::AlikePath => 4,
        Family::Wheel | Family::StarPlusPath => {
            return Err(Error::param(
                "family",
                format!("{family} has no closed-form spectrum"),
            ))
        }
    };
    if n < min {
        return Err(Error::param(
            "n",
            format!("closed form for {family} needs n >= {min}, got {n}"),
        ));
    }
    if family == Family::StarMlike && !(1..=max_disjoint_edges(n)).contains(&m) {
        return Err(Error::param(
            "m",
            format!(
                "star_mlike needs 1 <= m <= {} for n = {n}, got {m}",
                max_disjoint_edges(n)
            ),
        ));
    }
    Ok(())
}

/// Exact spectrum of a family's density matrix from its closed form.
///
/// | family          | d_G        | eigenvalues · d_G                                   |
/// |-----------------|------------|-----------------------------------------------------|
/// | star            | 2n − 2     | n, 1 ×(n−2), 0                                      |
/// | star_like       | 2n         | n, 3, 1 ×(n−3), 0                                   |
/// | alike_disjoint  | 2n + 2     | n, 3 ×2, 1 ×(n−4), 0                                |
/// | alike_path      | 2n + 2     | n, 4, 2, 1 ×(n−4), 0                                |
/// | star_mlike      | 2n + 2m − 2| n, 3 ×m, 1 ×(n−m−2), 0                              |
///
/// Coinciding values are merged (for `star_like` at `n = 3`, `3/6 = 1/2`).
pub fn closed_form_spectrum(family: Family, n: usize, m: Option<usize>) -> Result<Spectrum<Rational>> {
    let m = family.check_m(m)?;
    check_closed_form_domain(family, n, m)?;
    let ni = n as i64;
    let frac = |p: i64, d: i64| Rational::new(p, d);
    let pairs: Vec<(Rational, usize)> = match family {
        Family::Star => {
            let d = 2 * ni - 2;
            alloc::vec![(frac(ni, d), 1), (frac(1, d), n - 2), (Rational::zero(), 1)]
        }
        Family::StarLike => {
            let d = 2 * ni;
            alloc::vec![
                (frac(1, 2), 1),
                (frac(3, d), 1),
                (frac(1, d), n - 3),
                (Rational::zero(), 1),
            ]
        }
        Family::AlikeDisjoint => {
            let d = 2 * ni + 2;
            alloc::vec![
                (frac(ni, d), 1),
                (frac(3, d), 2),
                (frac(1, d), n - 4),
                (Rational::zero(), 1),
            ]
        }
        Family::AlikePath => {
            let d = 2 * ni + 2;
            alloc::vec![
                (frac(ni, d), 1),
                (frac(4, d), 1),
                (frac(2, d), 1),
                (frac(1, d), n - 4),
                (Rational::zero(), 1),
            ]
        }
        Family::StarMlike => {
            let d = 2 * ni + 2 * m as i64 - 2;
            alloc::vec![
                (frac(ni, d), 1),
                (frac(3, d), m),
                (frac(1, d), n - m - 2),
                (Rational::zero(), 1),
            ]
        }
        Family::Wheel | Family::StarPlusPath => unreachable!("rejected by domain check"),
    };
    Ok(Spectrum::from_pairs(pairs))
}

/// Numerical spectrum of a density matrix via cyclic Jacobi.
pub fn numeric_spectrum(rho: &DensityMatrix) -> Result<Spectrum<f64>> {
    numeric_spectrum_of(&rho.to_f64())
}

/// Same as [`numeric_spectrum`] for an arbitrary PSD matrix in floats.
pub fn numeric_spectrum_of(matrix: &SymMatrix) -> Result<Spectrum<f64>> {
    let raw = symmetric_eigenvalues(matrix)?;
    let mut values = Vec::with_capacity(raw.len());
    for v in raw {
        if v < -CLAMP_WINDOW {
            return Err(Error::NotPositiveSemidefinite { eigenvalue: v });
        }
        values.push(v.max(0.0));
    }
    Ok(Spectrum::from_eigenvalues(&values, GROUPING_TOLERANCE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::density_matrix;
    use crate::graph::{star_plus_path, wheel, Graph};
    use alloc::vec;

    fn exact(pairs: &[(i64, i64, usize)]) -> Spectrum<Rational> {
        Spectrum::from_pairs(pairs.iter().map(|&(p, q, k)| (Rational::new(p, q), k)))
    }

    #[test]
    fn star_like_four() {
        let s = closed_form_spectrum(Family::StarLike, 4, None).unwrap();
        assert_eq!(s, exact(&[(1, 2, 1), (3, 8, 1), (1, 8, 1), (0, 1, 1)]));
    }

    #[test]
    fn star_mlike_seven_three() {
        let s = closed_form_spectrum(Family::StarMlike, 7, Some(3)).unwrap();
        assert_eq!(s, exact(&[(7, 18, 1), (3, 18, 3), (1, 18, 2), (0, 1, 1)]));
    }

    #[test]
    fn star_like_three_merges() {
        let s = closed_form_spectrum(Family::StarLike, 3, None).unwrap();
        assert_eq!(s, exact(&[(1, 2, 2), (0, 1, 1)]));
        // triangle by eigensolver
        let num = numeric_spectrum(&density_matrix(&Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()).unwrap()).unwrap();
        assert_eq!(num.profile(), vec![2, 1]);
        assert!(num.max_abs_diff(&s.to_numeric()).unwrap() < 1e-12);
    }

    #[test]
    fn alike_path_four_merges() {
        let s = closed_form_spectrum(Family::AlikePath, 4, None).unwrap();
        assert_eq!(s, exact(&[(4, 10, 2), (2, 10, 1), (0, 1, 1)]));
    }

    #[test]
    fn domain_errors() {
        assert!(closed_form_spectrum(Family::Star, 1, None).is_err());
        assert!(closed_form_spectrum(Family::StarLike, 2, None).is_err());
        assert!(closed_form_spectrum(Family::AlikeDisjoint, 3, None).is_err());
        assert!(closed_form_spectrum(Family::AlikeDisjoint, 4, None).is_ok());
        assert!(closed_form_spectrum(Family::StarMlike, 7, Some(4)).is_err());
        assert!(closed_form_spectrum(Family::Wheel, 7, None).is_err());
    }

    #[test]
    fn every_closed_form_is_normalized() {
        for f in Family::CLOSED_FORM {
            for n in 2..40 {
                let ms: Vec<Option<usize>> = if f == Family::StarMlike {
                    (1..=max_disjoint_edges(n)).map(Some).collect()
                } else {
                    vec![None]
                };
                for m in ms {
                    if let Ok(s) = closed_form_spectrum(f, n, m) {
                        assert_eq!(s.total(), Rational::one());
                        assert_eq!(s.order(), n);
                    }
                }
            }
        }
    }

    #[test]
    fn single_edge_numeric() {
        let s = numeric_spectrum(&density_matrix(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap()).unwrap();
        assert_eq!(s.profile(), vec![1, 1]);
        assert!((s.entries()[0].value - 1.0).abs() < 1e-15);
        assert_eq!(s.entries()[1].value, 0.0);
    }

    #[test]
    fn path_counterexample_values() {
        let s = numeric_spectrum(&density_matrix(&star_plus_path(7, 5).unwrap()).unwrap()).unwrap();
        let printed = [0.3182, 0.2151, 0.1818, 0.1364, 0.0909, 0.0576, 0.0];
        for (x, y) in s.to_f64_values().iter().zip(printed) {
            assert!((x - y).abs() < 1e-3, "{x} vs {y}");
        }
    }

    #[test]
    fn wheel_seven_rationalizes() {
        let s = numeric_spectrum(&density_matrix(&wheel(7).unwrap()).unwrap()).unwrap();
        let exact_wheel = exact(&[(7, 24, 1), (5, 24, 1), (4, 24, 2), (2, 24, 2), (0, 1, 1)]);
        assert!(s.max_abs_diff(&exact_wheel.to_numeric()).unwrap() < 1e-9);
        assert_eq!(s.rationalize(1000, 1e-9).unwrap(), exact_wheel);
        let irrational = numeric_spectrum(&density_matrix(&star_plus_path(7, 5).unwrap()).unwrap()).unwrap();
        assert!(irrational.rationalize(1000, 1e-9).is_none());
    }

    #[test]
    fn psd_violation_is_an_error() {
        let m = SymMatrix::from_fn(2, |i, j| if i == j { 0.0 } else { 1.0 });
        assert!(matches!(
            numeric_spectrum_of(&m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn grouping_merges_close_values() {
        let s = Spectrum::from_eigenvalues(&[0.5, 0.25 + 1e-12, 0.25, 0.0], GROUPING_TOLERANCE);
        assert_eq!(s.profile(), vec![1, 2, 1]);
    }
}
