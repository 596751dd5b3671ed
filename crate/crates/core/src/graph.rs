//! Simple undirected graphs and the star-relevant families.
//!
//! Every family graph puts the hub at vertex 0 and the peripheral vertices at
//! `1..n`. Extra peripheral edges are placed at fixed positions so that the
//! resulting matrices are reproducible: disjoint edges at `(1,2), (3,4), …`,
//! paths along `1-2-3-…`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, so iteration order
/// is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Fails on a self-loop, an endpoint `>= n`, or an edge
    /// that is already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::param("edge", format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::param(
                "edge",
                format!("({u},{v}) has an endpoint outside 0..{}", self.n),
            ));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::param("edge", format!("duplicate edge ({u},{v})")));
        }
        Ok(())
    }

    /// Copy of `self` with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// `d_G`, the sum of all vertex degrees (twice the edge count).
    pub fn total_degree(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = alloc::vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True when vertex 0 is adjacent to every other vertex.
    pub fn is_hub_complete(&self) -> bool {
        (1..self.n).all(|v| self.has_edge(0, v))
    }

    /// Edges among the non-hub vertices.
    pub fn peripheral_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges().filter(|&(u, _)| u != 0)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, E=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({u},{v})")?;
        }
        f.write_str("])")
    }
}

fn require(name: &'static str, ok: bool, what: impl FnOnce() -> alloc::string::String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::param(name, what()))
    }
}

/// Hub 0 joined to each of `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    require("n", n >= 2, || format!("star needs n >= 2, got {n}"))?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// Star plus the peripheral edge `(n-2, n-1)`.
pub fn star_like(n: usize) -> Result<Graph> {
    require("n", n >= 3, || format!("star_like needs n >= 3, got {n}"))?;
    star(n)?.with_edge(n - 2, n - 1)
}

/// Largest number of pairwise disjoint peripheral edges on `n` vertices.
pub fn max_disjoint_edges(n: usize) -> usize {
    n.saturating_sub(1) / 2
}

/// Star plus `m` pairwise disjoint peripheral edges `(1,2), (3,4), …`.
pub fn star_mlike(n: usize, m: usize) -> Result<Graph> {
    require("n", n >= 3, || format!("star_mlike needs n >= 3, got {n}"))?;
    let max = max_disjoint_edges(n);
    require("m", (1..=max).contains(&m), || {
        format!("star_mlike needs 1 <= m <= {max} for n = {n}, got {m}")
    })?;
    let mut g = star(n)?;
    for k in 0..m {
        g.add_edge(2 * k + 1, 2 * k + 2)?;
    }
    Ok(g)
}

/// Star plus the two disjoint peripheral edges `(1,2)` and `(3,4)`.
pub fn star_alike_disjoint(n: usize) -> Result<Graph> {
    require("n", n >= 5, || format!("alike_disjoint needs n >= 5, got {n}"))?;
    star_mlike(n, 2)
}

/// Star plus the two peripheral edges `(1,2)` and `(2,3)` sharing vertex 2.
pub fn star_alike_path(n: usize) -> Result<Graph> {
    require("n", n >= 4, || format!("alike_path needs n >= 4, got {n}"))?;
    star_plus_path(n, 2)
}

/// Star plus the peripheral path `(1,2), (2,3), …, (k,k+1)`.
pub fn star_plus_path(n: usize, k: usize) -> Result<Graph> {
    require("n", n >= 3, || format!("star_plus_path needs n >= 3, got {n}"))?;
    require("k", k <= n - 2, || {
        format!("star_plus_path needs 0 <= k <= {} for n = {n}, got {k}", n - 2)
    })?;
    let mut g = star(n)?;
    for v in 1..=k {
        g.add_edge(v, v + 1)?;
    }
    Ok(g)
}

/// Star plus the peripheral cycle `1-2-…-(n-1)-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    require("n", n >= 4, || format!("wheel needs n >= 4, got {n}"))?;
    let mut g = star_plus_path(n, n - 2)?;
    g.add_edge(1, n - 1)?;
    Ok(g)
}

/// The named graph families. Only the first five have closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Star,
    StarLike,
    AlikeDisjoint,
    AlikePath,
    StarMlike,
    Wheel,
    StarPlusPath,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Star,
        Family::StarLike,
        Family::AlikeDisjoint,
        Family::AlikePath,
        Family::StarMlike,
        Family::Wheel,
        Family::StarPlusPath,
    ];

    /// Families with a closed-form spectrum.
    pub const CLOSED_FORM: [Family; 5] = [
        Family::Star,
        Family::StarLike,
        Family::AlikeDisjoint,
        Family::AlikePath,
        Family::StarMlike,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::StarLike => "star_like",
            Family::AlikeDisjoint => "alike_disjoint",
            Family::AlikePath => "alike_path",
            Family::StarMlike => "star_mlike",
            Family::Wheel => "wheel",
            Family::StarPlusPath => "star_plus_path",
        }
    }

    /// Whether the family takes a second parameter (`m` or the path length).
    pub fn takes_m(self) -> bool {
        matches!(self, Family::StarMlike | Family::StarPlusPath)
    }

    pub fn has_closed_form(self) -> bool {
        Family::CLOSED_FORM.contains(&self)
    }

    /// Smallest `n` for which the graph exists.
    pub fn min_order(self) -> usize {
        match self {
            Family::Star => 2,
            Family::StarLike | Family::StarMlike | Family::StarPlusPath => 3,
            Family::AlikePath | Family::Wheel => 4,
            Family::AlikeDisjoint => 5,
        }
    }

    /// Builds the family member. `m` is required for `star_mlike` and
    /// `star_plus_path` and must be absent otherwise.
    pub fn build(self, n: usize, m: Option<usize>) -> Result<Graph> {
        let m = self.check_m(m)?;
        match self {
            Family::Star => star(n),
            Family::StarLike => star_like(n),
            Family::AlikeDisjoint => star_alike_disjoint(n),
            Family::AlikePath => star_alike_path(n),
            Family::StarMlike => star_mlike(n, m),
            Family::Wheel => wheel(n),
            Family::StarPlusPath => star_plus_path(n, m),
        }
    }

    pub(crate) fn check_m(self, m: Option<usize>) -> Result<usize> {
        match (self.takes_m(), m) {
            (true, Some(m)) => Ok(m),
            (true, None) => Err(Error::param("m", format!("{} requires m", self.name()))),
            (false, None) => Ok(0),
            (false, Some(_)) => Err(Error::param(
                "m",
                format!("{} does not take m", self.name()),
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::param("family", format!("unknown family `{s}`")))
    }
}
