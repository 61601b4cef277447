//! Exact small-graph tooling for colouring bounds of the form
//! `χ ≤ max{ω, Δ − 1}` on hereditary graph classes.
//!
//! * [`graph`]: bitset graphs on at most 64 vertices and constructions.
//! * [`enumeration`]: canonical certificates, isomorph-free generation,
//!   seeded random graphs.
//! * [`patterns`]: induced-subgraph detection for the forbidden patterns and
//!   class membership, including the dense-neighbourhood condition.
//! * [`invariants`]: exact ω and χ, Brooks' bound and the `max{ω, Δ − 1}`
//!   predicate.
//! * [`recolor`]: neighbourhood colour spectra, Kempe components and swaps,
//!   and extension of a colouring of `G − u` to `G`.
//! * [`harness`]: per-graph reports, exhaustive and sampled sweeps, graph6.
//!
//! ```
//! use bkcheck::graph::Graph;
//! use bkcheck::invariants::{chromatic_number, max_clique};
//!
//! let g = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
//! assert_eq!(g.max_degree(), 8);
//! assert_eq!(max_clique(&g).unwrap().omega, 6);
//! assert_eq!(chromatic_number(&g).unwrap().chi, 8);
//! ```

pub mod coloring;
pub mod enumeration;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod patterns;
pub mod recolor;

pub use coloring::Coloring;
pub use graph::{Graph, VertexSet};

use thiserror::Error;

/// Crate-level error for the batch entry points.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Enumeration(#[from] enumeration::EnumerationError),
    #[error(transparent)]
    Solver(#[from] invariants::SolverError),
    #[error(transparent)]
    Recolor(#[from] recolor::RecolorError),
    #[error(transparent)]
    Graph6(#[from] harness::Graph6Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
