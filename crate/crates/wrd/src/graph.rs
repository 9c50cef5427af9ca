//! Vertex-weighted simple graphs.
//!
//! Vertices are `0..n` internally; all user-facing text (the file format,
//! CLI output, error messages from the parser) is 1-based.

use std::collections::BTreeSet;
use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::weight::{ratio_int, Rational, Weight};

/// A finite simple graph with a strictly positive rational weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    adj: Vec<Vec<usize>>,
    weights: Vec<Weight>,
}

impl WeightedGraph {
    /// Build a graph on `weights.len()` vertices from an edge list.
    ///
    /// Edges are unordered pairs of distinct vertices; loops, duplicates
    /// (in either orientation), and out-of-range endpoints are rejected.
    pub fn new(weights: Vec<Weight>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = weights.len();
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::LoopEdge { v });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(WeightedGraph { adj, weights })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn weight(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Total weight `w(G)`.
    pub fn total_weight(&self) -> Rational {
        self.weights.iter().map(|w| w.ratio()).sum()
    }

    /// True if `w(G)` equals the number of vertices.
    pub fn is_normed(&self) -> bool {
        self.total_weight() == ratio_int(self.n() as i64)
    }

    /// True if the graph has at least one edge.
    pub fn has_any_edge(&self) -> bool {
        self.adj.iter().any(|a| !a.is_empty())
    }

    /// True if all vertex weights are integers.
    pub fn all_weights_integral(&self) -> bool {
        self.weights.iter().all(|w| w.is_integral())
    }

    /// Weight of the open neighborhood, `w(N(v))`.
    pub fn neighborhood_weight(&self, v: usize) -> Rational {
        self.adj[v].iter().map(|&u| self.weights[u].ratio()).sum()
    }

    /// Weighted degree `d_w(v) = w(N(v)) / w(v)`.
    pub fn weighted_degree(&self, v: usize) -> Rational {
        self.neighborhood_weight(v) / self.weights[v].ratio()
    }

    /// Maximum weighted degree `Δ_w(G)`. Errors on the empty vertex set.
    pub fn max_weighted_degree(&self) -> Result<Rational> {
        (0..self.n())
            .map(|v| self.weighted_degree(v))
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// Minimum weighted degree `δ_w(G)`. Errors on the empty vertex set.
    pub fn min_weighted_degree(&self) -> Result<Rational> {
        (0..self.n())
            .map(|v| self.weighted_degree(v))
            .min()
            .ok_or(Error::EmptyGraph)
    }

    /// Complement graph on the same weighted vertices.
    pub fn complement(&self) -> WeightedGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        WeightedGraph::new(self.weights.clone(), &edges).expect("complement edges are simple")
    }

    /// Subgraph induced by `set`, keeping weights. Vertex `i` of the result
    /// is the `i`-th smallest member of `set`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<WeightedGraph> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        for (i, v) in set.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            index[v] = i;
        }
        let weights = set.iter().map(|v| self.weights[v].clone()).collect();
        let mut edges = Vec::new();
        for u in set.iter() {
            for &v in &self.adj[u] {
                if u < v && index[v] != usize::MAX {
                    edges.push((index[u], index[v]));
                }
            }
        }
        WeightedGraph::new(weights, &edges)
    }

    /// Disjoint union; vertices of later parts are shifted up.
    pub fn disjoint_union(parts: &[WeightedGraph]) -> WeightedGraph {
        let mut weights = Vec::new();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            weights.extend(g.weights.iter().cloned());
            edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.n();
        }
        WeightedGraph::new(weights, &edges).expect("parts are simple graphs")
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Neighbor bitmasks for the subset/labeling solvers. Errors when the
    /// graph is too large for machine-word masks.
    pub(crate) fn neighbor_masks(&self) -> Result<Vec<u64>> {
        let n = self.n();
        if n > 64 {
            return Err(Error::SizeGuardExceeded {
                n,
                guard: 64,
                space: "bitmask",
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect())
    }
}

/// A set of vertices of some graph, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Build from arbitrary members, validating against the vertex count `n`.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&big) = v.last() {
            if big >= n {
                return Err(Error::VertexOutOfRange { v: big, n });
            }
        }
        Ok(VertexSet(v))
    }

    /// Build from already-sorted, in-range members (internal fast path).
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&b| mask >> b & 1 == 1).collect())
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Total weight of the set's vertices in `g`.
    pub fn weight_in(&self, g: &WeightedGraph) -> Rational {
        self.0
            .iter()
            .map(|&v| g.weight(v).ratio())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Union of two sets.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend(&other.0);
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Display for VertexSet {
    /// 1-based, e.g. `{1, 3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}
