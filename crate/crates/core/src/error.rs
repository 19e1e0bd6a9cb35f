use thiserror::Error;

use crate::tree::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {0} not found")]
    VertexNotFound(VertexId),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("subtrees are not vertex-disjoint")]
    NotDisjoint,

    #[error("basis is empty")]
    EmptyBasis,

    #[error("tree has {order} vertices, brute-force limit is {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("vertex {0} is not a core vertex")]
    NotCoreVertex(VertexId),

    #[error("expected {expected} values, got {got}")]
    BadArity { expected: usize, got: usize },

    #[error("k = {k} at vertex {vertex}; every k must be at least 2")]
    KTooSmall { vertex: VertexId, k: usize },

    #[error("vertex {0} is not a supported vertex of its part")]
    NotSupported(VertexId),

    #[error("not an S-tree")]
    NotSTree,

    #[error("vertex {0} is not a supported vertex of degree > 1")]
    NotInternalSupport(VertexId),

    #[error("not an S-atom")]
    NotAtom,

    #[error("S-atom of order {0}; at least 3 vertices are required")]
    TooSmall(usize),

    #[error("Prüfer entry {entry} out of range for n = {n}")]
    BadCode { entry: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),

    #[error("validation failed: {reason} (vertices {vertices:?})")]
    ValidationFailed {
        reason: String,
        vertices: Vec<VertexId>,
    },

    #[error("span mismatch: {0}")]
    SpanMismatch(String),
}

impl Error {
    /// True for failures of an internal consistency check, as opposed to
    /// bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::FormulaMismatch(_) | Error::ValidationFailed { .. } | Error::SpanMismatch(_)
        )
    }
}
