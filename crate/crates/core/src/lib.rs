//! Matching covered graphs: perfect-matching queries, removable edges and
//! doubletons, tight and separating cuts, bricks and braces, and the
//! constructions (splicing, triangle insertion, staircases) built on them.
//!
//! Graphs are simple, undirected and have at most [`MAX_ORDER`] vertices.

pub mod canon;
pub mod connectivity;
pub mod constructors;
pub mod cuts;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod structure;
pub mod transform;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, find_isomorphism, is_isomorphic};
pub use connectivity::{connectivity, edge_connectivity, is_bipartite, is_three_connected, is_two_edge_connected};
pub use cuts::{cuts_cross, edge_cut, enumerate_3cuts, enumerate_nontrivial_3cuts, EdgeCut};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet, MAX_ORDER};
pub use graph6::{parse_graph6, read_all_graph6, read_graph6, to_graph6, Graph6Record, ReadError};
pub use matching::{
    allowed_edges, has_perfect_matching, is_barrier, is_bicritical, maximum_matching, odd_components,
    perfect_matching, perfect_matching_with, Matching,
};
pub use structure::{
    classify_cut, classify_removable, depends_on, dm_witness, doubleton_decomposition, is_brace, is_brick,
    is_essentially_4ec, is_matching_covered, is_near_bipartite, mutually_dependent_pairs, removable_doubletons,
    removable_edges, CutClassification, DMPartition, RemovableClassification,
};
pub use transform::{contract, contract_with_map, induced_subgraph, Contraction, CONTRACTED_LABEL};
