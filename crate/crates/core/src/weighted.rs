//! Phase condition on a weighted triangle.
//!
//! Giving the triangle edges unit complex weights `e^{iw1}, e^{iw2}, e^{iw3}`,
//! a weighted-graph state needs
//!
//! ```text
//! e^{iw1} e^{iw2} = e^{iw3},  e^{iw2} e^{iw3} = e^{iw1},  e^{iw3} e^{iw1} = e^{iw2}
//! ```
//!
//! Equal unit complex numbers have equal angles mod 2π, so each equation is
//! checked as a circular distance between angles.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

/// Default tolerance for analytically given phases.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Phases of the three triangle edge weights, normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrianglePhases {
    w: [f64; 3],
}

impl TrianglePhases {
    pub fn new(w1: f64, w2: f64, w3: f64) -> Self {
        TrianglePhases {
            w: [normalize(w1), normalize(w2), normalize(w3)],
        }
    }

    pub fn phases(&self) -> [f64; 3] {
        self.w
    }

    /// `(w2, w3, w1)`.
    pub fn rotated(&self) -> Self {
        TrianglePhases {
            w: [self.w[1], self.w[2], self.w[0]],
        }
    }
}

/// Angle reduced to `[0, 2π)`.
pub fn normalize(angle: f64) -> f64 {
    let r = libm::fmod(angle, TAU);
    let r = if r < 0.0 { r + TAU } else { r };
    // fmod of a value just below a multiple of 2π can round up to 2π
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance between two angles on the circle, in `[0, π]`.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = normalize(a - b);
    d.min(TAU - d)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleCheck {
    pub satisfied: bool,
    /// Residual of each equation: `w1+w2 ↔ w3`, `w2+w3 ↔ w1`, `w3+w1 ↔ w2`.
    pub residuals: [f64; 3],
}

pub fn check_triangle_condition(p: &TrianglePhases, tol: f64) -> TriangleCheck {
    let [w1, w2, w3] = p.w;
    let residuals = [
        circular_distance(w1 + w2, w3),
        circular_distance(w2 + w3, w1),
        circular_distance(w3 + w1, w2),
    ];
    TriangleCheck {
        satisfied: residuals.iter().all(|&r| r <= tol),
        residuals,
    }
}

/// Solutions among phases in `{0, π}³`.
pub fn admissible_phase_set() -> Vec<TrianglePhases> {
    let choices = [0.0, PI];
    let mut out = Vec::new();
    for &w1 in &choices {
        for &w2 in &choices {
            for &w3 in &choices {
                let p = TrianglePhases::new(w1, w2, w3);
                if check_triangle_condition(&p, DEFAULT_TOLERANCE).satisfied {
                    out.push(p);
                }
            }
        }
    }
    debug_assert!(out.iter().all(is_real_sign_pattern));
    out
}

/// Closed-form description of the solutions: every weight is real
/// (`2w ≡ 0`) and the product of the three weights is 1
/// (`w1 + w2 + w3 ≡ 0`).
pub fn is_real_sign_pattern(p: &TrianglePhases) -> bool {
    let tol = DEFAULT_TOLERANCE;
    p.w.iter().all(|&w| circular_distance(2.0 * w, 0.0) <= tol)
        && circular_distance(p.w.iter().sum(), 0.0) <= tol
}

/// Every grid point `(2πi/steps, 2πj/steps, 2πk/steps)` that satisfies the
/// condition at tolerance `tol`.
pub fn grid_scan(steps: usize, tol: f64) -> Vec<TrianglePhases> {
    let step = TAU / steps as f64;
    let mut out = Vec::new();
    for i in 0..steps {
        let w1 = i as f64 * step;
        for j in 0..steps {
            let w2 = j as f64 * step;
            for k in 0..steps {
                let w3 = k as f64 * step;
                // cheap rejection on the first equation before the full check
                if circular_distance(w1 + w2, w3) > tol {
                    continue;
                }
                let p = TrianglePhases { w: [w1, w2, w3] };
                if check_triangle_condition(&p, tol).satisfied {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sat(w1: f64, w2: f64, w3: f64) -> bool {
        check_triangle_condition(&TrianglePhases::new(w1, w2, w3), DEFAULT_TOLERANCE).satisfied
    }

    #[test]
    fn examples() {
        assert!(sat(0.0, 0.0, 0.0));
        assert!(sat(PI, PI, 0.0));
        assert!(!sat(PI / 2.0, PI / 2.0, PI));
        assert!(!sat(PI, 0.0, 0.0));
        let r = check_triangle_condition(&TrianglePhases::new(PI / 2.0, PI / 2.0, PI), 1e-9).residuals;
        assert!(r[0] < 1e-12);
        assert!((r[1] - PI).abs() < 1e-12);
    }

    #[test]
    fn admissible_set_is_sign_pattern() {
        let set = admissible_phase_set();
        assert_eq!(set.len(), 4);
        for p in &set {
            assert!(is_real_sign_pattern(p));
        }
        assert!(set.contains(&TrianglePhases::new(0.0, 0.0, 0.0)));
        assert!(set.contains(&TrianglePhases::new(PI, PI, 0.0)));
        assert!(set.contains(&TrianglePhases::new(0.0, PI, PI)));
        assert!(set.contains(&TrianglePhases::new(PI, 0.0, PI)));
    }

    #[test]
    fn normalization() {
        assert!((normalize(-PI / 2.0) - 1.5 * PI).abs() < 1e-12);
        assert_eq!(normalize(TAU), 0.0);
        assert!(normalize(-1e-18) < TAU);
        assert!((circular_distance(0.1, TAU - 0.1) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn coarse_grid() {
        let sols = grid_scan(36, 1e-9);
        assert_eq!(sols.len(), 4);
        assert!(sols.iter().all(is_real_sign_pattern));
    }

    #[test]
    fn cyclic_relabeling() {
        for &(a, b, c) in &[(0.0, 0.0, 0.0), (PI, PI, 0.0), (0.3, 1.1, 2.0), (PI, 0.0, 0.0)] {
            let p = TrianglePhases::new(a, b, c);
            let x = check_triangle_condition(&p, 1e-9);
            let y = check_triangle_condition(&p.rotated(), 1e-9);
            assert_eq!(x.satisfied, y.satisfied);
        }
    }
}
