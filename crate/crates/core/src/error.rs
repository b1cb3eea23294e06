use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size or index parameter is outside the domain an operation accepts.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// The request exceeds an explicit computational budget.
    #[error("resource budget exceeded: {0}")]
    Budget(String),

    /// An assignment does not fit the graph it is evaluated on.
    #[error("assignment has order {assignment} but graph has n = {graph}")]
    DimensionMismatch { assignment: usize, graph: usize },

    #[error("assignment is not a Roman dominating function ({} undominated vertices)", .0.len())]
    InvalidRdf(Vec<VertexId>),

    /// Serialized input does not match the assignment schema.
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    /// The caller supplied an assignment that violates an audit hypothesis.
    #[error("audit hypothesis failed: {0}")]
    Hypothesis(String),

    /// Something that must hold by construction did not.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
