//! Exact solvers for the weighted Roman domination number `γ_wR` and the
//! weighted domination number `γ_w`.
//!
//! Four routes compute `γ_wR`: exhaustive labeling search, branch and bound,
//! a linear dynamic program for graphs of maximum degree two, and the
//! differential identity `γ_wR = w(G) − ∂(G)`. They agree on every graph;
//! the test suite leans on that heavily.

mod bnb;
mod brute;
mod dp;

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::Zero;

pub use bnb::gamma_wr_bnb;
pub use brute::gamma_wr_brute;
pub use dp::gamma_wr_dp;

use crate::differential::{differential, induced_labeling};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::roman::RomanLabeling;
use crate::weight::{Rational, ScaledWeights};

/// Tunables for the exact solvers.
///
/// The guards bound which instances the enumeration solvers will even
/// attempt: `labeling_guard` caps the `3^n` labeling search, `subset_guard`
/// the `2^n` subset searches. They are policy, not correctness: raise them to
/// force a large search.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Maximum `n` for `3^n` labeling enumeration.
    pub labeling_guard: usize,
    /// Maximum `n` for `2^n` subset enumeration.
    pub subset_guard: usize,
    /// Collect every optimal labeling, not just one witness.
    pub enumerate_all_optima: bool,
    /// Among optimal labelings, return one minimizing the number of
    /// 1-labeled vertices.
    pub tie_break_min_v1: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            labeling_guard: 14,
            subset_guard: 20,
            enumerate_all_optima: false,
            tie_break_min_v1: false,
        }
    }
}

/// Which route computed a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    BranchAndBound,
    DegreeTwoDp,
    Differential,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::BranchAndBound => "bnb",
            Method::DegreeTwoDp => "dp",
            Method::Differential => "diff",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "bnb" => Ok(Method::BranchAndBound),
            "dp" => Ok(Method::DegreeTwoDp),
            "diff" => Ok(Method::Differential),
            other => Err(Error::InvalidParams(format!(
                "unknown method {other:?}; expected brute, bnb, dp, or diff"
            ))),
        }
    }
}

/// An exact value of `γ_wR` with a witnessing labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: Rational,
    pub witness: RomanLabeling,
    pub method: Method,
    /// Every optimal labeling in lexicographic order, if requested.
    pub all_optima: Option<Vec<RomanLabeling>>,
}

/// An exact value of `γ_w` with a witnessing dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub value: Rational,
    pub witness: VertexSet,
}

/// Compute `γ_wR` by the chosen route.
pub fn gamma_wr(g: &WeightedGraph, method: Method, opts: &SolveOptions) -> Result<SolveResult> {
    if (opts.enumerate_all_optima || opts.tie_break_min_v1) && method != Method::Brute {
        return Err(Error::InvalidParams(
            "optima enumeration and the min-V1 tie-break require the brute method".into(),
        ));
    }
    match method {
        Method::Brute => gamma_wr_brute(g, opts),
        Method::BranchAndBound => gamma_wr_bnb(g),
        Method::DegreeTwoDp => gamma_wr_dp(g),
        Method::Differential => gamma_wr_via_differential(g, opts),
    }
}

/// Compute `γ_wR` by the cheapest exact route for the size at hand: the
/// exhaustive reference solver within the labeling guard, branch and bound
/// beyond it.
pub fn gamma_wr_auto(g: &WeightedGraph, opts: &SolveOptions) -> Result<SolveResult> {
    if g.n() <= opts.labeling_guard {
        gamma_wr_brute(g, opts)
    } else {
        gamma_wr_bnb(g)
    }
}

/// Compute `γ_wR` through the differential: `γ_wR = w(G) − ∂(G)`, with the
/// maximizer's induced labeling as witness.
pub fn gamma_wr_via_differential(g: &WeightedGraph, opts: &SolveOptions) -> Result<SolveResult> {
    let d = differential(g, opts)?;
    let witness = induced_labeling(g, &d.best_set, &d.boundary);
    Ok(SolveResult {
        value: g.total_weight() - d.value,
        witness,
        method: Method::Differential,
        all_optima: None,
    })
}

/// The degree lower bound `2·w(G) / (Δ_w + 1)`, meaningful whenever the graph
/// has an edge; when all weights are integers the bound can be rounded up.
pub(crate) fn degree_lower_bound_value(g: &WeightedGraph) -> Option<Rational> {
    if !g.has_any_edge() {
        return None;
    }
    let two_w = g.total_weight() * Rational::from_integer(2.into());
    let bound = two_w / (g.max_weighted_degree().ok()? + Rational::from_integer(1.into()));
    Some(if g.all_weights_integral() {
        bound.ceil()
    } else {
        bound
    })
}

/// Exhaustive minimum-weight dominating set over all `2^n` subsets.
///
/// Subsets are explored excluding each vertex before including it; the first
/// optimum found in that order is the witness, so results are deterministic.
pub fn gamma_w_brute(g: &WeightedGraph, opts: &SolveOptions) -> Result<DominationResult> {
    let n = g.n();
    if n > opts.subset_guard {
        return Err(Error::SizeGuardExceeded {
            n,
            guard: opts.subset_guard,
            space: "2^n subset",
        });
    }
    let masks = g.neighbor_masks()?;
    let closed: Vec<u64> = (0..n).map(|v| masks[v] | (1u64 << v)).collect();
    let sw = ScaledWeights::new(g.weights());

    // Vertex j's domination status is final once everything in N[j] has been
    // decided, i.e. after position max(N[j] ∪ {j}).
    let mut finalize_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for j in 0..n {
        let last = g.neighbors(j).last().copied().unwrap_or(0).max(j);
        finalize_at[last].push(j);
    }

    struct State<'a> {
        g: &'a WeightedGraph,
        closed: &'a [u64],
        finalize_at: &'a [Vec<usize>],
        sw: &'a ScaledWeights,
        chosen: u64,
        dominated: u64,
        weight: BigInt,
        best: Option<BigInt>,
        best_set: u64,
    }

    fn dfs(st: &mut State, i: usize) {
        if let Some(best) = &st.best {
            if &st.weight >= best {
                return;
            }
        }
        let n = st.g.n();
        if i == n {
            st.best = Some(st.weight.clone());
            st.best_set = st.chosen;
            return;
        }
        // Exclude i, then include it.
        let saved_dominated = st.dominated;
        if st.finalize_at[i].iter().all(|&j| st.dominated >> j & 1 == 1) {
            dfs(st, i + 1);
        }
        st.dominated = saved_dominated | st.closed[i];
        st.chosen |= 1 << i;
        st.weight += &st.sw.scaled[i];
        if st.finalize_at[i].iter().all(|&j| st.dominated >> j & 1 == 1) {
            dfs(st, i + 1);
        }
        st.weight -= &st.sw.scaled[i];
        st.chosen &= !(1u64 << i);
        st.dominated = saved_dominated;
    }

    let mut st = State {
        g,
        closed: &closed,
        finalize_at: &finalize_at,
        sw: &sw,
        chosen: 0,
        dominated: 0,
        weight: BigInt::zero(),
        best: None,
        best_set: 0,
    };
    dfs(&mut st, 0);
    let best = st.best.expect("the full vertex set dominates");
    Ok(DominationResult {
        value: sw.to_ratio(&best),
        witness: VertexSet::from_mask(st.best_set),
    })
}
