use laplaceq_core::density::density_matrix;
use laplaceq_core::entropy::entropy_of;
use laplaceq_core::jacobi::{symmetric_eigen, SymMatrix};
use laplaceq_core::majorization::{majorizes, ProbVector};
use laplaceq_core::weighted::{check_triangle_condition, is_real_sign_pattern, TrianglePhases, DEFAULT_TOLERANCE};
use laplaceq_core::{entropy, numeric_spectrum, Graph, Rational};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..14).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.3), len).prop_map(move |mask| {
            let mut edges: Vec<(usize, usize)> =
                pairs.iter().zip(&mask).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            if edges.is_empty() {
                edges.push((0, 1));
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Positive integer weights, normalized exactly.
fn arb_rational_vector(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(0i64..60, len).prop_filter_map("all zero", |w| {
        let total: i64 = w.iter().sum();
        (total > 0).then(|| w.iter().map(|&x| Rational::new(x, total)).collect())
    })
}

fn exact(v: &[Rational]) -> ProbVector<Rational> {
    ProbVector::new(v.to_vec(), "x").unwrap()
}

fn numeric(v: &[Rational]) -> ProbVector<f64> {
    ProbVector::new(v.iter().map(Rational::to_f64).collect(), "x").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn density_matrix_is_a_state(g in arb_graph()) {
        let rho = density_matrix(&g).unwrap();
        prop_assert_eq!(rho.trace(), Rational::one());
        prop_assert!(rho.row_sums().iter().all(Rational::is_zero));
        prop_assert!(rho.is_symmetric());
        let s = numeric_spectrum(&rho).unwrap();
        let values = s.to_f64_values();
        prop_assert!(values.iter().all(|&v| v >= -1e-10));
        prop_assert!((values.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
        let zero = s.entries().iter().find(|e| e.value.abs() < 1e-8).map_or(0, |e| e.multiplicity);
        prop_assert_eq!(zero, g.component_count());
        let bits = entropy(&s).unwrap().bits;
        prop_assert!(bits >= 0.0 && bits <= (g.order() as f64).log2() + 1e-12);
    }

    #[test]
    fn jacobi_reconstructs(n in 1usize..=12, entries in proptest::collection::vec(-1.0f64..1.0, 144)) {
        let a = SymMatrix::from_fn(n, |i, j| entries[i * 12 + j]);
        let d = symmetric_eigen(&a).unwrap();
        let r = d.reconstruct();
        for i in 0..n {
            for j in 0..n {
                prop_assert!((r.get(i, j) - a.get(i, j)).abs() <= 1e-9);
            }
        }
        let trace: f64 = (0..n).map(|i| a.get(i, i)).sum();
        prop_assert!((d.values.iter().sum::<f64>() - trace).abs() <= 1e-9);
    }

    #[test]
    fn majorization_reflexive_and_bounded(v in arb_rational_vector(1..10)) {
        let x = exact(&v);
        prop_assert!(majorizes(&x, &x).unwrap().holds);
        let n = v.len() as i64;
        let uniform = exact(&vec![Rational::new(1, n); v.len()]);
        let mut point = vec![Rational::zero(); v.len()];
        point[0] = Rational::one();
        let point = exact(&point);
        prop_assert!(majorizes(&uniform, &x).unwrap().holds);
        prop_assert!(majorizes(&x, &point).unwrap().holds);
    }

    #[test]
    fn majorization_transitive(
        a in arb_rational_vector(4..5),
        b in arb_rational_vector(4..5),
        c in arb_rational_vector(4..5),
    ) {
        let (x, y, z) = (exact(&a), exact(&b), exact(&c));
        if majorizes(&x, &y).unwrap().holds && majorizes(&y, &z).unwrap().holds {
            prop_assert!(majorizes(&x, &z).unwrap().holds);
        }
    }

    #[test]
    fn exact_and_numeric_modes_agree(a in arb_rational_vector(2..9), b in arb_rational_vector(2..9)) {
        let e = majorizes(&exact(&a), &exact(&b)).unwrap();
        let f = majorizes(&numeric(&a), &numeric(&b)).unwrap();
        prop_assert_eq!(e.holds, f.holds);
        prop_assert_eq!(e.first_failing_k, f.first_failing_k);
    }

    #[test]
    fn first_failing_k_is_the_first_violation(a in arb_rational_vector(2..9), b in arb_rational_vector(2..9)) {
        let r = majorizes(&exact(&a), &exact(&b)).unwrap();
        let k = (0..r.partial_sums_x.len()).find(|&i| r.partial_sums_x[i] > r.partial_sums_y[i]);
        prop_assert_eq!(r.first_failing_k, k.map(|i| i + 1));
        prop_assert_eq!(r.holds, k.is_none());
    }

    #[test]
    fn schur_concavity(a in arb_rational_vector(2..9), b in arb_rational_vector(2..9)) {
        if majorizes(&exact(&a), &exact(&b)).unwrap().holds {
            let f = |v: &[Rational]| entropy_of(&v.iter().map(Rational::to_f64).collect::<Vec<_>>());
            prop_assert!(f(&a) >= f(&b) - 1e-12);
        }
    }

    #[test]
    fn triangle_condition_symmetry(w in proptest::array::uniform3(-10.0f64..10.0)) {
        let p = TrianglePhases::new(w[0], w[1], w[2]);
        let x = check_triangle_condition(&p, DEFAULT_TOLERANCE);
        let y = check_triangle_condition(&p.rotated(), DEFAULT_TOLERANCE);
        prop_assert_eq!(x.satisfied, y.satisfied);
        let mut rx = x.residuals;
        let mut ry = y.residuals;
        rx.sort_by(f64::total_cmp);
        ry.sort_by(f64::total_cmp);
        for (u, v) in rx.iter().zip(&ry) {
            prop_assert!((u - v).abs() <= 1e-12);
        }
    }

    #[test]
    fn quarter_turn_solutions_are_sign_patterns(k in proptest::array::uniform3(0u8..8)) {
        let q = std::f64::consts::FRAC_PI_4;
        let p = TrianglePhases::new(k[0] as f64 * q, k[1] as f64 * q, k[2] as f64 * q);
        prop_assert_eq!(check_triangle_condition(&p, DEFAULT_TOLERANCE).satisfied, is_real_sign_pattern(&p));
    }
}
