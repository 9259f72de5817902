use std::fmt;

use thiserror::Error;

/// A structural problem with a hypergraph's edge table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyEdge {
        edge: usize,
    },
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyEdge { edge } => write!(f, "edge {edge}: empty edge"),
            Violation::VertexOutOfRange {
                edge,
                vertex,
                vertex_count,
            } => write!(
                f,
                "edge {edge}: vertex out of range ({vertex} >= {vertex_count})"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid JSON hypergraph: {0}")]
    Json(String),
    #[error("invalid hypergraph: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("hypergraph has {edges} edges; edge subsets are limited to 63 edges")]
    TooManyEdges { edges: usize },
    #[error("edge cap exceeded: {edges} edges, cap is {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("invalid edge order: {0}")]
    InvalidOrder(String),
    #[error("invalid edge subset: {0}")]
    InvalidSubset(String),
    #[error("edge {edge} is not a member of the subset")]
    EdgeNotInSubset { edge: usize },
    #[error("edge set {edges:?} is not a broken cycle under the given order")]
    NotABrokenCycle { edges: Vec<usize> },
    #[error("broken-cycle selection contains {edges:?}, which is not a broken cycle")]
    InvalidSelection { edges: Vec<usize> },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("{0}")]
    Usage(String),
    #[error("coloring budget exceeded: {colors}^{vertices} colorings is more than 2^30")]
    ColoringBudgetExceeded { colors: u64, vertices: usize },
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
