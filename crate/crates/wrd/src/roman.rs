//! Roman labelings and the defining predicates.
//!
//! A weighted Roman dominating function assigns each vertex a label in
//! {0, 1, 2} so that every 0-labeled vertex has a 2-labeled neighbor; its
//! weight is `Σ f(v)·w(v)`.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::weight::{ratio_int, Rational};

/// An assignment of a label in {0, 1, 2} to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RomanLabeling(Vec<u8>);

impl RomanLabeling {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l > 2) {
            return Err(Error::BadLabel { value: bad as u64 });
        }
        Ok(RomanLabeling(labels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    /// The partition `(V0, V1, V2)` induced by the labels.
    pub fn partition(&self) -> [VertexSet; 3] {
        let mut parts = [Vec::new(), Vec::new(), Vec::new()];
        for (v, &l) in self.0.iter().enumerate() {
            parts[l as usize].push(v);
        }
        parts.map(VertexSet::from_sorted)
    }

    /// Vertices labeled `level` (0, 1, or 2).
    pub fn level_set(&self, level: u8) -> VertexSet {
        VertexSet::from_sorted(
            self.0
                .iter()
                .enumerate()
                .filter(|&(_, &l)| l == level)
                .map(|(v, _)| v)
                .collect(),
        )
    }

    /// Number of vertices labeled 1.
    pub fn ones_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == 1).count()
    }
}

impl fmt::Display for RomanLabeling {
    /// Comma-separated labels in vertex order, e.g. `1,0,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for RomanLabeling {
    type Err = Error;

    /// Parse the `Display` form, e.g. `1,0,2`.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(RomanLabeling(Vec::new()));
        }
        let labels = s
            .split(',')
            .map(|tok| match tok {
                "0" => Ok(0u8),
                "1" => Ok(1),
                "2" => Ok(2),
                other => Err(Error::BadNumber {
                    input: other.to_string(),
                    reason: "expected a Roman label 0, 1, or 2".to_string(),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(RomanLabeling(labels))
    }
}

/// True if `f` is a weighted Roman dominating function on `g`: every vertex
/// labeled 0 has a neighbor labeled 2.
pub fn is_wrdf(g: &WeightedGraph, f: &RomanLabeling) -> Result<bool> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    Ok((0..g.n()).all(|v| {
        f.label(v) != 0 || g.neighbors(v).iter().any(|&u| f.label(u) == 2)
    }))
}

/// The weight `f(V) = Σ f(v)·w(v)` of a labeling.
pub fn labeling_weight(g: &WeightedGraph, f: &RomanLabeling) -> Result<Rational> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    Ok((0..g.n())
        .map(|v| g.weight(v).ratio() * ratio_int(f.label(v) as i64))
        .fold(Rational::zero(), |a, b| a + b))
}

/// True if `set` is a dominating set of `g`: every vertex is in the set or
/// adjacent to a member.
pub fn is_dominating(g: &WeightedGraph, set: &VertexSet) -> Result<bool> {
    if let Some(v) = set.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    Ok((0..g.n()).all(|v| set.contains(v) || g.neighbors(v).iter().any(|&u| set.contains(u))))
}
