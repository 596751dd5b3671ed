//! Cyclic Jacobi eigensolver for real symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` once and applies the
//! plane rotation that zeroes `a[p][q]`. The rotations are accumulated into
//! `Q`, so on exit `A = Q · diag(λ) · Qᵀ`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Iteration stops when the off-diagonal Frobenius norm drops below this
/// (scaled by the matrix norm when that exceeds one).
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

pub const MAX_SWEEPS: usize = 100;

/// From this sweep on, entries negligible next to both diagonal entries are
/// zeroed rather than rotated away.
const NEGLIGIBLE_AFTER_SWEEPS: usize = 4;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: alloc::vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Fills the matrix from `f(i, j)`. Only the lower triangle is sampled;
    /// the upper triangle is mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j) * self.get(i, j);
                }
            }
        }
        libm::sqrt(s)
    }
}

/// Eigenvalues with the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Row-major `n × n`; column `k` is the eigenvector of `values[k]`.
    pub vectors: Vec<f64>,
    pub sweeps: usize,
    /// Off-diagonal norm at exit.
    pub residual: f64,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `Q · diag(λ) · Qᵀ`.
    pub fn reconstruct(&self) -> SymMatrix {
        let n = self.order();
        SymMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.vectors[i * n + k] * self.values[k] * self.vectors[j * n + k])
                .sum()
        })
    }
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_eigen(matrix: &SymMatrix) -> Result<EigenDecomposition> {
    let n = matrix.order();
    let mut a = matrix.clone();
    let mut q = SymMatrix::identity(n);
    let tol = OFF_DIAGONAL_TOLERANCE * matrix.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    let mut off = a.off_diagonal_norm();
    while off >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NumericalFailure {
                sweeps,
                residual: off,
            });
        }
        for p in 0..n {
            for r in p + 1..n {
                if sweeps >= NEGLIGIBLE_AFTER_SWEEPS && negligible(&a, p, r) {
                    a.set(p, r, 0.0);
                    a.set(r, p, 0.0);
                } else {
                    rotate(&mut a, &mut q, p, r);
                }
            }
        }
        sweeps += 1;
        off = a.off_diagonal_norm();
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)));
    let values = order.iter().map(|&k| a.get(k, k)).collect();
    let mut vectors = alloc::vec![0.0; n * n];
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + col] = q.get(i, k);
        }
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
        residual: off,
    })
}

/// Eigenvalues only, descending.
pub fn symmetric_eigenvalues(matrix: &SymMatrix) -> Result<Vec<f64>> {
    symmetric_eigen(matrix).map(|d| d.values)
}

/// `a[p][r]` vanishes in floating point when added to either diagonal entry.
fn negligible(a: &SymMatrix, p: usize, r: usize) -> bool {
    let g = 100.0 * libm::fabs(a.get(p, r));
    let (app, arr) = (libm::fabs(a.get(p, p)), libm::fabs(a.get(r, r)));
    app + g == app && arr + g == arr
}

fn rotate(a: &mut SymMatrix, q: &mut SymMatrix, p: usize, r: usize) {
    let apr = a.get(p, r);
    if apr == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let arr = a.get(r, r);
    let theta = (arr - app) / (2.0 * apr);
    // smaller root of t² + 2θt − 1 = 0
    let t = if libm::fabs(theta) > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    let n = a.order();
    for k in 0..n {
        if k == p || k == r {
            continue;
        }
        let akp = a.get(k, p);
        let akr = a.get(k, r);
        let new_kp = c * akp - s * akr;
        let new_kr = s * akp + c * akr;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp);
        a.set(k, r, new_kr);
        a.set(r, k, new_kr);
    }
    a.set(p, p, app - t * apr);
    a.set(r, r, arr + t * apr);
    a.set(p, r, 0.0);
    a.set(r, p, 0.0);

    for k in 0..n {
        let qkp = q.get(k, p);
        let qkr = q.get(k, r);
        q.set(k, p, c * qkp - s * qkr);
        q.set(k, r, s * qkp + c * qkr);
    }
}
