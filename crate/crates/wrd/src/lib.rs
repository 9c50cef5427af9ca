//! Weighted Roman domination: exact solvers, closed-form families, bounds,
//! and an executable verification harness.
//!
//! A Roman labeling assigns each vertex 0, 1, or 2 so that every 0-vertex
//! has a 2-neighbor; its cost is the label-weighted vertex weight. The
//! minimum cost over all such labelings is `γ_wR`. This crate computes it
//! exactly — by exhaustive search, branch and bound, a linear-time routine
//! for graphs of maximum degree two, or through the weighted differential
//! `∂(G)` via `γ_wR = w(G) − ∂(G)` — alongside the plain weighted
//! domination number `γ_w`, closed forms for complete, complete bipartite,
//! and cycle graphs, and the standard bounds relating all of these.
//!
//! All arithmetic is exact: weights are arbitrary-precision positive
//! rationals, so every reported value and every verified inequality is free
//! of rounding. Exponential-space entry points are fenced by explicit size
//! guards ([`solvers::SolveOptions`]) rather than silent truncation.
//!
//! Graphs travel in a small text format (see [`io`]); randomized instances
//! come from seeded deterministic generators (see [`gen`]); the [`verify`]
//! module re-derives the structural theorems on demand over reference
//! graphs or seeded corpora.

pub mod bounds;
pub mod differential;
pub mod error;
pub mod families;
pub mod gen;
pub mod graph;
pub mod io;
pub mod roman;
pub mod solvers;
pub mod verify;
pub mod weight;

pub use bounds::{bounds_report, BoundsReport};
pub use differential::{differential, DifferentialResult};
pub use error::{Error, Result};
pub use graph::{VertexSet, WeightedGraph};
pub use io::{parse_wrd, to_wrd_string, ParseError};
pub use roman::{is_wrdf, labeling_weight, RomanLabeling};
pub use solvers::{gamma_w_brute, gamma_wr, gamma_wr_auto, Method, SolveOptions, SolveResult};
pub use weight::{Rational, Weight};
