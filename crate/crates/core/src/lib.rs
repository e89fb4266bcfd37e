//! Clique counts of graphs with a bounded number of edges and a bounded
//! maximum degree.
//!
//! The crate covers graph primitives and canonical labeling, colex graphs
//! and the extremal constructions `aK_{r+1} ∪ C(b)`, clusters of
//! degree-`r` vertices and the moves that rewrite them, an isomorph-free
//! search of `G(m, r)`, and executable checks of the supporting
//! inequalities.

pub mod assembly;
pub mod canon;
pub mod cli;
pub mod cliques;
pub mod clusters;
pub mod codec;
pub mod colex;
pub mod combin;
pub mod error;
pub mod graph;
pub mod laws;
pub mod moves;
pub mod search;

pub use assembly::Assembly;
pub use canon::{canonical_form, Certificate};
pub use cliques::{clique_profile, k_total, CliqueProfile};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet, MAX_VERTICES};
