//! Graph constructions: splicing, triangle insertion, Δ-replacement,
//! staircases, the family generated from `K₄` by triangle insertion, and the
//! bundled catalog of named graphs.

mod catalog;
mod family;
mod splice;
mod staircase;

pub use catalog::{catalog, named_graph, Catalog, CatalogEntry};
pub use family::{enumerate_family_g, is_in_family_g};
pub use splice::{delta_replacement, insert_triangle, insert_triangles, splice, SplicePairing};
pub use staircase::{staircase, staircase_rungs};

use crate::graph::Graph;

pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("complete graphs are simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycles are simple")
}

/// The complement of a graph.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| !g.has_edge(a, b)))
        .expect("complements of simple graphs are simple")
}

/// Triangular prism: triangles `0 1 2` and `3 4 5` joined by `0-3, 1-4, 2-5`.
pub fn prism() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).expect("prism is simple")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("complete bipartite graphs are simple")
}
