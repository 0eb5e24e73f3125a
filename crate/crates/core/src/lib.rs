//! Decomposition of directed hypergraphs along splits.
//!
//! A directed hypergraph (B-graph) has edges with a nonempty body and a
//! single head. A split is a bipartition of the vertices that no body
//! crosses; recursively splitting yields a binary tree whose internal nodes
//! carry the edges between the two sides. The closed sets of the
//! hypergraph follow the same decomposition.

pub mod closure;
pub mod connectivity;
pub mod decomposition;
pub mod dihypergraph;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod vertex_set;

pub use closure::ClosureSystem;
pub use connectivity::{body_connected_components, is_body_connected, Partition};
pub use decomposition::{build_factor_tree, build_tree, BuildOutcome, FactorTree, HTree, Node, NodeId, Tree};
pub use dihypergraph::{Dihypergraph, Edge, Universe};
pub use error::{Error, Result};
pub use vertex_set::{VertexId, VertexSet};
