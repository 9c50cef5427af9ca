#![allow(dead_code)]

//! Shared fixtures for the integration suites: naive reference
//! implementations that trade all cleverness for obviousness, plus the
//! seeded corpus used across tests.
//!
//! The oracles below enumerate raw label vectors and subsets directly off
//! the adjacency lists, deliberately bypassing the crate's solvers, pruning,
//! and scaled arithmetic, so agreement is meaningful evidence.

use num::{BigRational, Zero};
use wrd::gen::{generate, GraphKind, WeightSampler};
use wrd::weight::{ratio, Rational};
use wrd::WeightedGraph;

/// Minimum weight over every valid labeling, by walking all 3^n of them.
pub fn naive_gamma_wr(g: &WeightedGraph) -> Rational {
    let n = g.n();
    assert!(n <= 13, "oracle is for desk-scale graphs");
    let mut labels = vec![0u8; n];
    let mut best: Option<Rational> = None;
    loop {
        if labels_are_valid(g, &labels) {
            let weight = labels
                .iter()
                .enumerate()
                .map(|(v, &l)| BigRational::from_integer(l.into()) * g.weight(v).ratio())
                .fold(Rational::zero(), |a, b| a + b);
            if best.as_ref().is_none_or(|b| weight < *b) {
                best = Some(weight);
            }
        }
        // Odometer increment in base 3.
        let mut i = 0;
        loop {
            if i == n {
                return best.expect("every graph admits the all-ones labeling");
            }
            labels[i] += 1;
            if labels[i] < 3 {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

fn labels_are_valid(g: &WeightedGraph, labels: &[u8]) -> bool {
    (0..g.n()).all(|v| labels[v] != 0 || g.neighbors(v).iter().any(|&u| labels[u] == 2))
}

/// Minimum weight of a dominating set, by walking all 2^n subsets.
pub fn naive_gamma_w(g: &WeightedGraph) -> Rational {
    let n = g.n();
    assert!(n <= 20, "oracle is for desk-scale graphs");
    let mut best: Option<Rational> = None;
    for mask in 0u64..1 << n {
        let dominated = (0..n).all(|v| {
            mask >> v & 1 == 1 || g.neighbors(v).iter().any(|&u| mask >> u & 1 == 1)
        });
        if dominated {
            let weight = subset_weight(g, mask);
            if best.as_ref().is_none_or(|b| weight < *b) {
                best = Some(weight);
            }
        }
    }
    best.expect("the full vertex set dominates")
}

/// Maximum of `w(B(S)) − w(S)` over all subsets, by direct evaluation.
pub fn naive_differential(g: &WeightedGraph) -> Rational {
    let n = g.n();
    assert!(n <= 20, "oracle is for desk-scale graphs");
    let mut best = Rational::zero(); // S = ∅
    for mask in 1u64..1 << n {
        let mut boundary = 0u64;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                for &u in g.neighbors(v) {
                    if mask >> u & 1 == 0 {
                        boundary |= 1 << u;
                    }
                }
            }
        }
        let value = subset_weight(g, boundary) - subset_weight(g, mask);
        if value > best {
            best = value;
        }
    }
    best
}

fn subset_weight(g: &WeightedGraph, mask: u64) -> Rational {
    (0..g.n())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| g.weight(v).ratio().clone())
        .fold(Rational::zero(), |a, b| a + b)
}

/// The mixed-weight random corpus shared by the acceptance criteria: graph
/// `t` has `1 + t mod n_max` vertices, cycles through three edge densities,
/// and alternates integer with rational weights.
pub fn corpus_graph(master_seed: u64, t: usize, n_max: usize) -> WeightedGraph {
    let n = 1 + t % n_max;
    let p = match t % 3 {
        0 => ratio(1, 4),
        1 => ratio(1, 2),
        _ => ratio(3, 4),
    };
    let sampler = if t.is_multiple_of(2) {
        WeightSampler::IntUniform { lo: 1, hi: 9 }
    } else {
        WeightSampler::GridUniform { denom: 3, lo: 1, hi: 9 }
    };
    let seed = master_seed ^ (t as u64).wrapping_mul(0x9e3779b97f4a7c15);
    generate(&GraphKind::Random { n, p }, &sampler, seed).expect("corpus parameters are valid")
}
