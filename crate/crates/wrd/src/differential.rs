//! The weighted differential of a graph.
//!
//! For `S ⊆ V`, the boundary `B(S)` is the set of vertices outside `S` with a
//! neighbor in `S`, and `∂(S) = w(B(S)) − w(S)`. The differential of the
//! graph is `∂(G) = max_S ∂(S)`, the empty set included, so `∂(G) >= 0`.

use num::bigint::BigInt;
use num::Zero;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::roman::RomanLabeling;
use crate::solvers::SolveOptions;
use crate::weight::{Rational, ScaledWeights};

/// A maximizing set together with its boundary and `∂(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialResult {
    pub value: Rational,
    pub best_set: VertexSet,
    pub boundary: VertexSet,
}

/// `B(S)`: vertices outside `S` adjacent to a member of `S`.
pub fn boundary(g: &WeightedGraph, s: &VertexSet) -> Result<VertexSet> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let members: Vec<usize> = (0..g.n())
        .filter(|&v| !s.contains(v) && g.neighbors(v).iter().any(|&u| s.contains(u)))
        .collect();
    Ok(VertexSet::from_sorted(members))
}

/// `∂(S) = w(B(S)) − w(S)`.
pub fn differential_of_set(g: &WeightedGraph, s: &VertexSet) -> Result<Rational> {
    Ok(boundary(g, s)?.weight_in(g) - s.weight_in(g))
}

/// Maximize `∂(S)` over all subsets by a Gray-code walk, so each step toggles
/// one vertex and updates the set and boundary weights incrementally.
///
/// Ties are broken toward smaller sets, then lexicographically smaller vertex
/// lists, making the reported maximizer deterministic.
pub fn differential(g: &WeightedGraph, opts: &SolveOptions) -> Result<DifferentialResult> {
    let n = g.n();
    if n > opts.subset_guard {
        return Err(Error::SizeGuardExceeded {
            n,
            guard: opts.subset_guard,
            space: "2^n subset",
        });
    }
    // The walk tracks membership in a u64, so even a raised guard stops here.
    if n > 63 {
        return Err(Error::SizeGuardExceeded { n, guard: 63, space: "bitmask" });
    }
    let sw = ScaledWeights::new(g.weights());

    let mut in_s = 0u64;
    let mut neighbors_in_s = vec![0u32; n];
    let mut s_weight = BigInt::zero();
    let mut b_weight = BigInt::zero();

    let mut best_value = BigInt::zero();
    let mut best_mask = 0u64;
    let mut best_card = 0usize;

    for step in 1u64..1u64 << n {
        let v = step.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let entering = in_s & bit == 0;
        if entering {
            in_s |= bit;
            s_weight += &sw.scaled[v];
            // v leaves the boundary if it was there.
            if neighbors_in_s[v] > 0 {
                b_weight -= &sw.scaled[v];
            }
            for &u in g.neighbors(v) {
                neighbors_in_s[u] += 1;
                if neighbors_in_s[u] == 1 && in_s & (1 << u) == 0 {
                    b_weight += &sw.scaled[u];
                }
            }
        } else {
            in_s &= !bit;
            s_weight -= &sw.scaled[v];
            for &u in g.neighbors(v) {
                neighbors_in_s[u] -= 1;
                if neighbors_in_s[u] == 0 && in_s & (1 << u) == 0 {
                    b_weight -= &sw.scaled[u];
                }
            }
            // v re-enters the boundary if it still has neighbors in S.
            if neighbors_in_s[v] > 0 {
                b_weight += &sw.scaled[v];
            }
        }

        let value = &b_weight - &s_weight;
        let card = in_s.count_ones() as usize;
        let better = match value.cmp(&best_value) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => match card.cmp(&best_card) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    VertexSet::from_mask(in_s) < VertexSet::from_mask(best_mask)
                }
            },
        };
        if better {
            best_value = value;
            best_mask = in_s;
            best_card = card;
        }
    }

    let best_set = VertexSet::from_mask(best_mask);
    let boundary = boundary(g, &best_set)?;
    Ok(DifferentialResult {
        value: sw.to_ratio(&best_value),
        best_set,
        boundary,
    })
}

/// The Roman labeling induced by a differential maximizer: 2 on `S`, 0 on
/// `B(S)`, 1 everywhere else. It is always a valid weighted Roman dominating
/// function, of weight `w(G) − ∂(S)`.
pub fn induced_labeling(g: &WeightedGraph, s: &VertexSet, boundary: &VertexSet) -> RomanLabeling {
    let labels = (0..g.n())
        .map(|v| {
            if s.contains(v) {
                2
            } else if boundary.contains(v) {
                0
            } else {
                1
            }
        })
        .collect();
    RomanLabeling::new(labels).expect("labels are 0, 1, or 2")
}
