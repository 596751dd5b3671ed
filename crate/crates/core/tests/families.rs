use laplaceq_core::density::density_matrix;
use laplaceq_core::graph::{max_disjoint_edges, star_mlike, star_plus_path, wheel, Family};
use laplaceq_core::jacobi::symmetric_eigen;
use laplaceq_core::{closed_form_spectrum, entropy, entropy_closed_form, locc_verdict_pair, numeric_spectrum, Rational};

fn members(n_max: usize) -> Vec<(Family, usize, Option<usize>)> {
    let mut out = Vec::new();
    for family in Family::CLOSED_FORM {
        for n in family.min_order()..=n_max {
            if family.takes_m() {
                out.extend((1..=max_disjoint_edges(n)).map(|m| (family, n, Some(m))));
            } else {
                out.push((family, n, None));
            }
        }
    }
    out
}

#[test]
fn numeric_matches_closed_form() {
    for (family, n, m) in members(50) {
        let closed = closed_form_spectrum(family, n, m).unwrap();
        let numeric = numeric_spectrum(&density_matrix(&family.build(n, m).unwrap()).unwrap()).unwrap();
        assert_eq!(numeric.profile(), closed.profile(), "{family}({n},{m:?})");
        let diff = numeric.max_abs_diff(&closed.to_numeric()).unwrap();
        assert!(diff <= 1e-9, "{family}({n},{m:?}): {diff:e}");
        let total = closed.entries().iter().fold(Rational::zero(), |acc, e| {
            acc + e.value.clone() * Rational::from_integer(e.multiplicity as i64)
        });
        assert_eq!(total, Rational::one());
    }
}

#[test]
fn other_graphs_are_psd_with_one_component() {
    for n in 4..=50 {
        let mut graphs = vec![wheel(n).unwrap()];
        graphs.extend((0..=n - 2).map(|k| star_plus_path(n, k).unwrap()));
        for g in graphs {
            let rho = density_matrix(&g).unwrap();
            let min = *symmetric_eigen(&rho.to_f64()).unwrap().values.last().unwrap();
            assert!(min >= -1e-10);
            let s = numeric_spectrum(&rho).unwrap();
            assert_eq!(s.entries().last().unwrap().multiplicity, 1);
        }
    }
}

#[test]
fn exact_and_numeric_verdicts_agree() {
    let all = members(30);
    for (fa, na, ma) in &all {
        for (fb, nb, mb) in &all {
            if na != nb {
                continue;
            }
            let a = closed_form_spectrum(*fa, *na, *ma).unwrap();
            let b = closed_form_spectrum(*fb, *nb, *mb).unwrap();
            let exact = locc_verdict_pair(&a, &b).unwrap();
            let numeric = locc_verdict_pair(&a.to_numeric(), &b.to_numeric()).unwrap();
            assert_eq!(exact.comparability(), numeric.comparability(), "{fa}({na}) vs {fb}({nb})");
            if exact.a_to_b.holds {
                assert!(entropy(&a).unwrap().bits >= entropy(&b).unwrap().bits - 1e-12);
            }
        }
    }
}

#[test]
fn entropy_expressions_match_spectra() {
    for (family, n, m) in members(100) {
        let s = entropy(&closed_form_spectrum(family, n, m).unwrap()).unwrap().bits;
        let e = entropy_closed_form(family, n, m).unwrap().bits;
        assert!((s - e).abs() <= 1e-10, "{family}({n},{m:?})");
        assert!(s >= 0.0 && s <= (n as f64).log2());
    }
}

#[test]
fn friendship_graph_is_maximal_mlike() {
    // n = 2m + 1: every peripheral vertex lies on exactly one triangle
    for m in 1..=10 {
        let g = star_mlike(2 * m + 1, m).unwrap();
        assert!(g.degrees()[1..].iter().all(|&d| d == 2));
        let s = closed_form_spectrum(Family::StarMlike, 2 * m + 1, Some(m)).unwrap();
        assert_eq!(s.order(), 2 * m + 1);
    }
}
