//! Induced subgraphs and shore contraction.

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Label given to the vertex produced by [`contract`].
pub const CONTRACTED_LABEL: &str = "contracted:x";

/// `G[X]`: vertices of `set` renumbered `0..|X|` in ascending original order.
pub fn induced_subgraph(g: &Graph, set: VertexSet) -> Result<Graph> {
    g.check_subset(set)?;
    let (sub, _) = induced_with_map(g, set);
    Ok(sub)
}

/// Like [`induced_subgraph`], also returning the old-to-new vertex map.
pub(crate) fn induced_with_map(g: &Graph, set: VertexSet) -> (Graph, Vec<Option<usize>>) {
    let mut map = vec![None; g.order()];
    for (i, v) in set.iter().enumerate() {
        map[v] = Some(i);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|e| Some((map[e.u()]?, map[e.v()]?)))
        .collect();
    let labels = set.iter().map(|v| g.label(v).map(str::to_string)).collect();
    let sub = Graph::new(set.len(), edges)
        .expect("an induced subgraph of a simple graph is simple")
        .set_labels(labels);
    (sub, map)
}

/// Result of contracting a shore: the graph and where each old vertex went.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// `map[v]` is the new index of old vertex `v`; shore vertices map to `contracted`.
    pub map: Vec<usize>,
    pub contracted: usize,
}

/// `G/X → x`. The contracted vertex gets the highest index and the label
/// `contracted:x`; the remaining vertices keep their relative order.
///
/// Fails with [`Error::Multigraph`] when an outside vertex has two neighbours in `X`.
pub fn contract(g: &Graph, set: VertexSet) -> Result<Graph> {
    contract_with_map(g, set).map(|c| c.graph)
}

pub fn contract_with_map(g: &Graph, set: VertexSet) -> Result<Contraction> {
    g.check_subset(set)?;
    if set.is_empty() {
        return domain("cannot contract an empty vertex set");
    }
    let rest = set.complement(g.order());
    if rest.is_empty() {
        return domain("contraction needs a vertex outside the shore");
    }
    let shore = set.mask();
    for v in rest.iter() {
        if (g.adjacency()[v] & shore).count_ones() > 1 {
            return Err(Error::Multigraph(v));
        }
    }
    let contracted = rest.len();
    let mut map = vec![contracted; g.order()];
    for (i, v) in rest.iter().enumerate() {
        map[v] = i;
    }
    let mut edges = Vec::new();
    for e in g.edges() {
        let (a, b) = (map[e.u()], map[e.v()]);
        if a != b {
            edges.push((a, b));
        }
    }
    let mut labels: Vec<Option<String>> = rest.iter().map(|v| g.label(v).map(str::to_string)).collect();
    // a surviving vertex could already carry the contraction label
    let mut name = CONTRACTED_LABEL.to_string();
    while labels.iter().flatten().any(|l| *l == name) {
        name.push('\'');
    }
    labels.push(Some(name));
    let graph = Graph::new(contracted + 1, edges)?.set_labels(labels);
    Ok(Contraction { graph, map, contracted })
}
