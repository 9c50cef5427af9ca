use crate::io::ParseError;

/// Errors produced by graph construction, parsing, and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex weight must be positive, got {value}")]
    NonPositiveWeight { value: String },

    #[error("malformed number {input:?}: {reason}")]
    BadNumber { input: String, reason: String },

    #[error("loop edge at vertex {v}")]
    LoopEdge { v: usize },

    #[error("duplicate edge between vertices {u} and {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex index {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },

    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("Roman label must be 0, 1, or 2, got {value}")]
    BadLabel { value: u64 },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("{n} vertices exceeds the {space} enumeration guard of {guard}; raise the guard to force the search")]
    SizeGuardExceeded {
        n: usize,
        guard: usize,
        space: &'static str,
    },

    #[error("vertex {v} has degree {degree}; this solver requires maximum degree 2")]
    DegreeTooHigh { v: usize, degree: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("theorem {theorem} violated: {detail}\ncounterexample:\n{graph}")]
    TheoremViolation {
        theorem: String,
        detail: String,
        graph: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
