//! Seeded graph generators.
//!
//! All randomness comes from a ChaCha8 stream seeded via `seed_from_u64`, so
//! a `(kind, sampler, seed)` triple always produces the same graph, on every
//! platform. Draw order is fixed: vertex weights first (in vertex order),
//! then edge coin flips in lexicographic edge order.

use std::fmt;
use std::str::FromStr;

use num::traits::ToPrimitive;
use num::{One, Signed};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::{ratio_to_string, Rational, Weight};

/// A graph family to instantiate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    /// Path on `n >= 1` vertices.
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// Complete graph on `n >= 1` vertices.
    Complete { n: usize },
    /// Complete bipartite graph; side X is vertices `1..=s`, side Y the rest.
    CompleteBipartite { s: usize, t: usize },
    /// Star: one center (vertex 1) joined to `leaves >= 1` leaves.
    Star { leaves: usize },
    /// Edgeless graph on `n >= 1` vertices.
    Empty { n: usize },
    /// Disjoint union of `edges` single edges (both endpoints get the same
    /// sampled weight) and `isolated` isolated vertices.
    DisjointUnion { edges: usize, isolated: usize },
    /// Erdős–Rényi graph: each of the `n(n-1)/2` possible edges appears
    /// independently with exact rational probability `p`.
    Random { n: usize, p: Rational },
}

/// How vertex weights are drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSampler {
    /// Every vertex gets the same weight.
    Constant(Weight),
    /// Uniform integer in `lo..=hi`, `1 <= lo <= hi`.
    IntUniform { lo: u64, hi: u64 },
    /// Uniform over the grid `lo/denom, (lo+1)/denom, ..., hi/denom`.
    GridUniform { denom: u64, lo: u64, hi: u64 },
}

impl WeightSampler {
    pub fn unit() -> Self {
        WeightSampler::Constant(Weight::from_integer(1))
    }

    fn validate(&self) -> Result<()> {
        match self {
            WeightSampler::Constant(_) => Ok(()),
            WeightSampler::IntUniform { lo, hi } | WeightSampler::GridUniform { lo, hi, .. } => {
                if *lo == 0 || lo > hi {
                    return Err(Error::InvalidParams(format!(
                        "weight range {lo}..={hi} must satisfy 1 <= lo <= hi"
                    )));
                }
                if let WeightSampler::GridUniform { denom: 0, .. } = self {
                    return Err(Error::InvalidParams("grid denominator must be positive".into()));
                }
                Ok(())
            }
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Weight {
        match self {
            WeightSampler::Constant(w) => w.clone(),
            WeightSampler::IntUniform { lo, hi } => {
                Weight::from_integer(lo + uniform_below(rng, hi - lo + 1))
            }
            WeightSampler::GridUniform { denom, lo, hi } => {
                let numer = lo + uniform_below(rng, hi - lo + 1);
                Weight::new(Rational::new((numer).into(), (*denom).into()))
                    .expect("grid numerators are positive")
            }
        }
    }
}

impl fmt::Display for WeightSampler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSampler::Constant(w) => write!(f, "const:{w}"),
            WeightSampler::IntUniform { lo, hi } => write!(f, "int:{lo}:{hi}"),
            WeightSampler::GridUniform { denom, lo, hi } => write!(f, "grid:{denom}:{lo}:{hi}"),
        }
    }
}

impl FromStr for WeightSampler {
    type Err = Error;

    /// Parse `const:<weight>`, `int:<lo>:<hi>`, or `grid:<denom>:<lo>:<hi>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParams(msg);
        let parts: Vec<&str> = s.split(':').collect();
        let int = |tok: &str, what: &str| -> Result<u64> {
            tok.parse::<u64>()
                .map_err(|e| bad(format!("bad {what} in weight sampler {s:?}: {e}")))
        };
        let sampler = match parts.as_slice() {
            ["const", w] => WeightSampler::Constant(w.parse()?),
            ["int", lo, hi] => WeightSampler::IntUniform {
                lo: int(lo, "lower bound")?,
                hi: int(hi, "upper bound")?,
            },
            ["grid", denom, lo, hi] => WeightSampler::GridUniform {
                denom: int(denom, "denominator")?,
                lo: int(lo, "lower bound")?,
                hi: int(hi, "upper bound")?,
            },
            _ => {
                return Err(bad(format!(
                    "weight sampler {s:?} must be const:<w>, int:<lo>:<hi>, or grid:<denom>:<lo>:<hi>"
                )))
            }
        };
        sampler.validate()?;
        Ok(sampler)
    }
}

/// Uniform draw from `0..k` by rejection; consumes no randomness when `k == 1`.
pub(crate) fn uniform_below(rng: &mut ChaCha8Rng, k: u64) -> u64 {
    debug_assert!(k > 0);
    if k == 1 {
        return 0;
    }
    let zone = (u64::MAX / k) * k;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % k;
        }
    }
}

/// Exact Bernoulli draw with rational probability `p = a/b`.
fn bernoulli(rng: &mut ChaCha8Rng, numer: u64, denom: u64) -> bool {
    uniform_below(rng, denom) < numer
}

/// Instantiate `kind` with weights drawn from `sampler` under `seed`.
pub fn generate(kind: &GraphKind, sampler: &WeightSampler, seed: u64) -> Result<WeightedGraph> {
    sampler.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample_n = |rng: &mut ChaCha8Rng, n: usize| -> Vec<Weight> {
        (0..n).map(|_| sampler.sample(rng)).collect()
    };
    let require = |cond: bool, msg: &str| -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::InvalidParams(msg.to_string()))
        }
    };
    match *kind {
        GraphKind::Path { n } => {
            require(n >= 1, "path needs n >= 1")?;
            let weights = sample_n(&mut rng, n);
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            WeightedGraph::new(weights, &edges)
        }
        GraphKind::Cycle { n } => {
            require(n >= 3, "cycle needs n >= 3")?;
            let weights = sample_n(&mut rng, n);
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n - 1));
            WeightedGraph::new(weights, &edges)
        }
        GraphKind::Complete { n } => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let weights = sample_n(&mut rng, n);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            WeightedGraph::new(weights, &edges)
        }
        GraphKind::CompleteBipartite { s, t } => {
            require(s >= 1 && t >= 1, "complete bipartite graph needs s, t >= 1")?;
            let weights = sample_n(&mut rng, s + t);
            let mut edges = Vec::new();
            for u in 0..s {
                for v in s..s + t {
                    edges.push((u, v));
                }
            }
            WeightedGraph::new(weights, &edges)
        }
        GraphKind::Star { leaves } => {
            generate(&GraphKind::CompleteBipartite { s: 1, t: leaves }, sampler, seed)
        }
        GraphKind::Empty { n } => {
            require(n >= 1, "empty graph needs n >= 1")?;
            WeightedGraph::new(sample_n(&mut rng, n), &[])
        }
        GraphKind::DisjointUnion { edges: r, isolated: z } => {
            require(r + z >= 1, "disjoint union needs at least one component")?;
            // One draw per edge, shared by its two endpoints, then one per
            // isolated vertex.
            let mut weights = Vec::with_capacity(2 * r + z);
            for _ in 0..r {
                let w = sampler.sample(&mut rng);
                weights.push(w.clone());
                weights.push(w);
            }
            for _ in 0..z {
                weights.push(sampler.sample(&mut rng));
            }
            let edges: Vec<_> = (0..r).map(|i| (2 * i, 2 * i + 1)).collect();
            WeightedGraph::new(weights, &edges)
        }
        GraphKind::Random { n, ref p } => {
            require(n >= 1, "random graph needs n >= 1")?;
            if p.is_negative() || p > &Rational::one() {
                return Err(Error::InvalidParams(format!(
                    "edge probability {} is outside [0, 1]",
                    ratio_to_string(p)
                )));
            }
            let denom = p.denom().to_u64().ok_or_else(|| {
                Error::InvalidParams("edge probability denominator too large".into())
            })?;
            let numer = p.numer().to_u64().unwrap_or(0).min(denom);
            let weights = sample_n(&mut rng, n);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if bernoulli(&mut rng, numer, denom) {
                        edges.push((u, v));
                    }
                }
            }
            WeightedGraph::new(weights, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{ratio, ratio_int};

    #[test]
    fn same_seed_same_graph() {
        let kind = GraphKind::Random { n: 10, p: ratio(1, 2) };
        let sampler: WeightSampler = "int:1:9".parse().unwrap();
        let a = generate(&kind, &sampler, 7).unwrap();
        let b = generate(&kind, &sampler, 7).unwrap();
        assert_eq!(a, b);
        let c = generate(&kind, &sampler, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn shapes_are_right() {
        let unit = WeightSampler::unit();
        let c5 = generate(&GraphKind::Cycle { n: 5 }, &unit, 0).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!(c5.has_edge(0, 4));
        let k23 = generate(&GraphKind::CompleteBipartite { s: 2, t: 3 }, &unit, 0).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        assert!(!k23.has_edge(0, 1));
        assert!(k23.has_edge(0, 2));
        let star = generate(&GraphKind::Star { leaves: 4 }, &unit, 0).unwrap();
        assert_eq!(star.degree(0), 4);
        let k6 = generate(&GraphKind::Complete { n: 6 }, &unit, 0).unwrap();
        assert_eq!(k6.m(), 15);
        let e3 = generate(&GraphKind::Empty { n: 3 }, &unit, 0).unwrap();
        assert_eq!((e3.n(), e3.m()), (3, 0));
    }

    #[test]
    fn disjoint_union_pairs_equal_weights() {
        let kind = GraphKind::DisjointUnion { edges: 3, isolated: 2 };
        let g = generate(&kind, &"int:1:9".parse().unwrap(), 5).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 3);
        for i in 0..3 {
            assert!(g.has_edge(2 * i, 2 * i + 1));
            assert_eq!(g.weight(2 * i), g.weight(2 * i + 1));
        }
        assert_eq!(g.degree(6), 0);
        assert_eq!(g.degree(7), 0);
    }

    #[test]
    fn grid_sampler_stays_on_grid() {
        let sampler: WeightSampler = "grid:3:1:9".parse().unwrap();
        let g = generate(&GraphKind::Empty { n: 30 }, &sampler, 11).unwrap();
        for v in 0..g.n() {
            let w = g.weight(v).ratio();
            let scaled = w * ratio_int(3);
            assert!(scaled.is_integer());
            assert!(w >= &ratio(1, 3) && w <= &ratio_int(3));
        }
    }

    #[test]
    fn extreme_probabilities() {
        let unit = WeightSampler::unit();
        let full = generate(&GraphKind::Random { n: 6, p: ratio_int(1) }, &unit, 0).unwrap();
        assert_eq!(full.m(), 15);
        let none = generate(&GraphKind::Random { n: 6, p: ratio_int(0) }, &unit, 0).unwrap();
        assert_eq!(none.m(), 0);
        assert!(generate(&GraphKind::Random { n: 2, p: ratio(3, 2) }, &unit, 0).is_err());
    }

    #[test]
    fn sampler_parsing() {
        assert_eq!(
            "const:5/2".parse::<WeightSampler>().unwrap().to_string(),
            "const:5/2"
        );
        assert_eq!(
            "grid:3:1:9".parse::<WeightSampler>().unwrap(),
            WeightSampler::GridUniform { denom: 3, lo: 1, hi: 9 }
        );
        for bad in ["", "int:9:1", "int:0:3", "grid:0:1:2", "const:0", "int:1", "flat:1:2"] {
            assert!(bad.parse::<WeightSampler>().is_err(), "accepted {bad:?}");
        }
    }
}
