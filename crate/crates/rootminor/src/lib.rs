//! Rooted minor containment and folio computation for small and medium
//! graphs, with vertex-disjoint paths built on top.
//!
//! The crate pairs a recursive solver with exhaustive oracles so every
//! answer can be cross-checked on small inputs.

pub mod carving;
pub mod cli;
pub mod cuts;
pub mod folio;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod preservers;
pub mod solver;

pub use folio::{Folio, ModelFolio};
pub use graph::{vset, Graph, Separation, VSet, Vertex};
pub use pattern::{MinorModel, RootedGraph, Signature};

/// Errors raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("branch set {vertex} is cut off from the roots by a separator of order {}", separation.order())]
    Separable { vertex: usize, separation: Separation },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Work limits for the exhaustive routines.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    /// Largest `|X| + δ` accepted by pattern enumeration.
    pub pattern_ceiling: usize,
    /// Node budget for brute-force folio enumeration.
    pub brute_nodes: u64,
    /// Node budget for single-pattern search.
    pub search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { pattern_ceiling: 9, brute_nodes: 20_000_000, search_nodes: 20_000_000 }
    }
}
