//! Von Neumann entropy in bits, `S = −Σ λ log₂ λ` with `0 · log 0 = 0`.

use alloc::format;

use crate::error::{Error, Result};
use crate::graph::Family;
use crate::majorization::Weight;
use crate::spectrum::{closed_form_spectrum, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropyValue {
    pub bits: f64,
}

/// Entropy of a normalized spectrum.
pub fn entropy<T: Weight>(spectrum: &Spectrum<T>) -> Result<EntropyValue> {
    if !spectrum.is_normalized() {
        return Err(Error::InvalidInput(format!(
            "spectrum sums to {:?}, not 1",
            spectrum.total()
        )));
    }
    let bits = spectrum
        .entries()
        .iter()
        .map(|e| {
            let p = e.value.to_f64();
            if p > 0.0 {
                -(e.multiplicity as f64) * p * libm::log2(p)
            } else {
                0.0
            }
        })
        .sum::<f64>();
    Ok(EntropyValue { bits })
}

/// Entropy of a normalized probability vector given as floats.
pub fn entropy_of(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * libm::log2(p))
        .sum()
}

/// Entropy of a family's density matrix from its algebraic expression,
/// without going through the spectrum.
///
/// * star: `½ log(2 − 2/n) + ½ log(2n − 2) − log(n)/(2n − 2)`
/// * star_like: `½ − (3/2n) log 3 + ½ log(2n)`
/// * alike_disjoint: `log(2n+2) − n/(2n+2) log n − 6/(2n+2) log 3`
/// * alike_path: `log(2n+2) − n/(2n+2) log n − 10/(2n+2)`
/// * star_mlike, with `d = 2n + 2m − 2`: `log d − (n/d) log n − (3m/d) log 3`
pub fn entropy_closed_form(family: Family, n: usize, m: Option<usize>) -> Result<EntropyValue> {
    // same parameter domain as the spectra
    closed_form_spectrum(family, n, m)?;
    let lg = libm::log2;
    let nf = n as f64;
    let bits = match family {
        Family::Star => {
            0.5 * lg(2.0 - 2.0 / nf) + 0.5 * lg(2.0 * nf - 2.0) - lg(nf) / (2.0 * nf - 2.0)
        }
        Family::StarLike => 0.5 - 3.0 / (2.0 * nf) * lg(3.0) + 0.5 * lg(2.0 * nf),
        Family::AlikeDisjoint => {
            let d = 2.0 * nf + 2.0;
            lg(d) - nf / d * lg(nf) - 6.0 / d * lg(3.0)
        }
        Family::AlikePath => {
            let d = 2.0 * nf + 2.0;
            lg(d) - nf / d * lg(nf) - 10.0 / d
        }
        Family::StarMlike => {
            let m = m.expect("checked by closed_form_spectrum") as f64;
            let d = 2.0 * nf + 2.0 * m - 2.0;
            lg(d) - nf / d * lg(nf) - 3.0 * m / d * lg(3.0)
        }
        Family::Wheel | Family::StarPlusPath => unreachable!("no closed form"),
    };
    Ok(EntropyValue { bits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn pure_and_uniform() {
        let pure = Spectrum::from_pairs([(Rational::one(), 1), (Rational::zero(), 4)]);
        assert_eq!(entropy(&pure).unwrap().bits, 0.0);
        for n in 1..20i64 {
            let uniform = Spectrum::from_pairs([(Rational::new(1, n), n as usize)]);
            let s = entropy(&uniform).unwrap().bits;
            assert!((s - libm::log2(n as f64)).abs() < 1e-12);
        }
    }

    #[test]
    fn unnormalized_rejected() {
        let bad = Spectrum::from_pairs([(Rational::new(1, 2), 1)]);
        assert!(matches!(entropy(&bad), Err(Error::InvalidInput(_))));
        let bad = Spectrum::from_eigenvalues(&[0.5, 0.49], 1e-8);
        assert!(entropy(&bad).is_err());
    }

    #[test]
    fn star_four() {
        let closed = entropy_closed_form(Family::Star, 4, None).unwrap().bits;
        let direct = 0.5 * libm::log2(1.5) + 0.5 * libm::log2(6.0) - libm::log2(4.0) / 6.0;
        assert!((closed - direct).abs() < 1e-15);
        assert!((closed - 1.25163).abs() < 1e-5);
        let spec = entropy(&closed_form_spectrum(Family::Star, 4, None).unwrap()).unwrap().bits;
        assert!((closed - spec).abs() < 1e-12);
    }

    #[test]
    fn star_like_four() {
        let closed = entropy_closed_form(Family::StarLike, 4, None).unwrap().bits;
        let spec = entropy(&closed_form_spectrum(Family::StarLike, 4, None).unwrap()).unwrap().bits;
        assert!((closed - 1.40564).abs() < 1e-5);
        assert!((closed - spec).abs() < 1e-12);
    }

    #[test]
    fn alike_disjoint_five() {
        let closed = entropy_closed_form(Family::AlikeDisjoint, 5, None).unwrap().bits;
        let spec = entropy(&closed_form_spectrum(Family::AlikeDisjoint, 5, None).unwrap()).unwrap().bits;
        assert!((closed - spec).abs() < 1e-12);
        // log2 12 − (5/12) log2 5 − ½ log2 3
        assert!((closed - 1.825_011_210_824).abs() < 1e-11);
    }

    #[test]
    fn entropy_of_matches() {
        assert!((entropy_of(&[0.5, 0.5, 0.0]) - 1.0).abs() < 1e-15);
    }
}
