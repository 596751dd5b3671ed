//! The graph-to-state map `ρ_G = (Δ(G) − A(G)) / d_G`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::jacobi::SymMatrix;
use crate::rational::Rational;

/// Exact density matrix of a graph: the combinatorial Laplacian divided by
/// the total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatrix {
    dim: usize,
    scale: usize,
    entries: Vec<Rational>,
}

impl DensityMatrix {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        density_matrix(g)
    }

    /// Matrix order.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The total degree `d_G` used as the divisor.
    pub fn scale(&self) -> usize {
        self.scale
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Integer Laplacian `d_G · ρ`.
    pub fn laplacian(&self) -> Vec<i64> {
        let scale = Rational::from(self.scale as i64);
        self.entries
            .iter()
            .map(|x| {
                let v = x * &scale;
                i64::try_from(v.numerator()).expect("Laplacian entries are small integers")
            })
            .collect()
    }

    pub fn to_f64(&self) -> SymMatrix {
        SymMatrix::from_fn(self.dim, |i, j| self.get(i, j).to_f64())
    }
}

/// Builds `(Δ − A) / d_G`. An edgeless graph has `d_G = 0` and is rejected.
pub fn density_matrix(g: &Graph) -> Result<DensityMatrix> {
    let n = g.order();
    let scale = g.total_degree();
    if scale == 0 {
        return Err(Error::DegenerateInput(format!(
            "graph on {n} vertices has no edges, so d_G = 0"
        )));
    }
    let mut lap = alloc::vec![0i64; n * n];
    for (u, v) in g.edges() {
        lap[u * n + u] += 1;
        lap[v * n + v] += 1;
        lap[u * n + v] -= 1;
        lap[v * n + u] -= 1;
    }
    let entries = lap
        .into_iter()
        .map(|x| Rational::new(x, scale as i64))
        .collect();
    Ok(DensityMatrix {
        dim: n,
        scale,
        entries,
    })
}
