//! Branch and bound for `γ_wR`.
//!
//! Works per connected component. Vertices are assigned in order of
//! decreasing weighted degree, trying labels 2, 0, 1; subtrees are cut by a
//! residual form of the degree lower bound and by coverage feasibility. The
//! initial incumbent comes from a greedy differential construction, so the
//! search starts near the optimum on most instances.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::Result;
use crate::graph::{VertexSet, WeightedGraph};
use crate::roman::RomanLabeling;
use crate::solvers::{degree_lower_bound_value, Method, SolveResult};
use crate::weight::{Rational, ScaledWeights};

pub fn gamma_wr_bnb(g: &WeightedGraph) -> Result<SolveResult> {
    let mut labels = vec![0u8; g.n()];
    let mut value = Rational::zero();
    for comp in g.components() {
        let set = VertexSet::from_sorted(comp.clone());
        let sub = g.induced_subgraph(&set)?;
        let (sub_value, sub_labels) = solve_component(&sub);
        value += sub_value;
        for (i, &orig) in comp.iter().enumerate() {
            labels[orig] = sub_labels[i];
        }
    }
    Ok(SolveResult {
        value,
        witness: RomanLabeling::new(labels).unwrap(),
        method: Method::BranchAndBound,
        all_optima: None,
    })
}

fn solve_component(g: &WeightedGraph) -> (Rational, Vec<u8>) {
    let n = g.n();
    if n == 1 {
        // An isolated vertex can only be labeled 1.
        return (g.weight(0).ratio().clone(), vec![1]);
    }
    let sw = ScaledWeights::new(g.weights());

    // Δ_w + 1 = p/q; a connected component on >= 2 vertices has an edge, so
    // Δ_w >= 1 and the residual bound below is sound.
    let dp1 = g.max_weighted_degree().expect("component is nonempty") + Rational::one();
    let (p, q) = (dp1.numer().clone(), dp1.denom().clone());

    let mut order: Vec<usize> = (0..n).collect();
    let degrees: Vec<Rational> = (0..n).map(|v| g.weighted_degree(v)).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));

    let (incumbent, incumbent_labels) = greedy_incumbent(g, &sw);

    let floor = degree_lower_bound_value(g).and_then(|b| {
        let scaled = b * Rational::from_integer(sw.denom.clone());
        scaled.is_integer().then(|| scaled.to_integer())
    });

    let total = sw.total();
    let mut search = Bnb {
        g,
        sw: &sw,
        order,
        p,
        q,
        labels: vec![0; n],
        assigned: vec![false; n],
        covered: vec![false; n],
        unassigned_nb: (0..n).map(|v| g.degree(v) as u32).collect(),
        resid_uncov: total,
        committed: BigInt::zero(),
        best: incumbent,
        best_labels: incumbent_labels,
        floor,
        done: false,
    };
    if search.floor.as_ref() == Some(&search.best) {
        search.done = true;
    }
    search.dfs(0);
    (sw.to_ratio(&search.best), search.best_labels)
}

/// Grow a differential set greedily and label 2 on it, 0 on its boundary,
/// 1 elsewhere: a valid labeling of weight `w(G) − ∂(S)`.
fn greedy_incumbent(g: &WeightedGraph, sw: &ScaledWeights) -> (BigInt, Vec<u8>) {
    let n = g.n();
    let mut in_s = vec![false; n];
    let mut nb_in_s = vec![0u32; n];
    loop {
        let mut best: Option<(BigInt, usize)> = None;
        for v in 0..n {
            if in_s[v] {
                continue;
            }
            let mut gain = -&sw.scaled[v];
            if nb_in_s[v] > 0 {
                // v stops counting as boundary once inside.
                gain -= &sw.scaled[v];
            }
            for &u in g.neighbors(v) {
                if !in_s[u] && nb_in_s[u] == 0 {
                    gain += &sw.scaled[u];
                }
            }
            if gain > BigInt::zero() && best.as_ref().is_none_or(|(g0, _)| &gain > g0) {
                best = Some((gain, v));
            }
        }
        match best {
            Some((_, v)) => {
                in_s[v] = true;
                for &u in g.neighbors(v) {
                    nb_in_s[u] += 1;
                }
            }
            None => break,
        }
    }
    let labels: Vec<u8> = (0..n)
        .map(|v| {
            if in_s[v] {
                2
            } else if nb_in_s[v] > 0 {
                0
            } else {
                1
            }
        })
        .collect();
    let cost = (0..n)
        .map(|v| &sw.scaled[v] * BigInt::from(labels[v]))
        .sum();
    (cost, labels)
}

struct Bnb<'a> {
    g: &'a WeightedGraph,
    sw: &'a ScaledWeights,
    order: Vec<usize>,
    p: BigInt,
    q: BigInt,
    labels: Vec<u8>,
    assigned: Vec<bool>,
    covered: Vec<bool>,
    unassigned_nb: Vec<u32>,
    /// Scaled weight of unassigned vertices with no assigned 2-neighbor.
    resid_uncov: BigInt,
    committed: BigInt,
    best: BigInt,
    best_labels: Vec<u8>,
    floor: Option<BigInt>,
    done: bool,
}

impl Bnb<'_> {
    fn dfs(&mut self, depth: usize) {
        if self.done {
            return;
        }
        // Any completion still costs at least 2·w(resid)/(Δ_w + 1).
        let lower = &self.committed * &self.p + BigInt::from(2) * &self.resid_uncov * &self.q;
        if lower >= &self.best * &self.p {
            return;
        }
        if depth == self.g.n() {
            self.best = self.committed.clone();
            self.best_labels = self.labels.clone();
            if self.floor.as_ref() == Some(&self.best) {
                self.done = true;
            }
            return;
        }
        let v = self.order[depth];
        for label in [2u8, 0, 1] {
            let added = &self.sw.scaled[v] * BigInt::from(label);
            self.assigned[v] = true;
            self.labels[v] = label;
            self.committed += &added;
            let mut flipped: Vec<usize> = Vec::new();
            if !self.covered[v] {
                self.resid_uncov -= &self.sw.scaled[v];
            }
            for &u in self.g.neighbors(v) {
                self.unassigned_nb[u] -= 1;
            }
            if label == 2 {
                for &u in self.g.neighbors(v) {
                    if !self.covered[u] {
                        self.covered[u] = true;
                        flipped.push(u);
                        if !self.assigned[u] {
                            self.resid_uncov -= &self.sw.scaled[u];
                        }
                    }
                }
            }
            // A 0-labeled vertex with no assigned 2-neighbor and no
            // unassigned neighbors left can never be covered.
            let dead = std::iter::once(v)
                .chain(self.g.neighbors(v).iter().copied())
                .any(|x| {
                    self.assigned[x]
                        && self.labels[x] == 0
                        && !self.covered[x]
                        && self.unassigned_nb[x] == 0
                });
            if !dead {
                self.dfs(depth + 1);
            }
            for &u in &flipped {
                self.covered[u] = false;
                if !self.assigned[u] {
                    self.resid_uncov += &self.sw.scaled[u];
                }
            }
            for &u in self.g.neighbors(v) {
                self.unassigned_nb[u] += 1;
            }
            if !self.covered[v] {
                self.resid_uncov += &self.sw.scaled[v];
            }
            self.committed -= &added;
            self.assigned[v] = false;
            if self.done {
                return;
            }
        }
    }
}
