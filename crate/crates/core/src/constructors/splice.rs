use std::collections::BTreeSet;

use serde::Serialize;

use super::complete_graph;
use crate::cuts::edge_cut;
use crate::error::{domain, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::transform::contract_with_map;

/// Which edge at `u` is bonded to which edge at `v` when splicing `G(u) ⊙ H(v)`.
///
/// Each pair `(uu_i, vv_i)` produces the splicing edge `u_i v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplicePairing {
    pairs: Vec<(Edge, Edge)>,
}

impl SplicePairing {
    pub fn new(pairs: impl IntoIterator<Item = (Edge, Edge)>) -> Self {
        SplicePairing { pairs: pairs.into_iter().collect() }
    }

    /// Neighbours of `u` in ascending order matched with neighbours of `v` in ascending order.
    pub fn canonical(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Self> {
        g.check_vertex(u)?;
        h.check_vertex(v)?;
        if g.degree(u) != h.degree(v) {
            return domain(format!("degrees differ: {} in the first graph, {} in the second", g.degree(u), h.degree(v)));
        }
        Ok(SplicePairing::new(
            g.neighbors(u).zip(h.neighbors(v)).map(|(a, b)| (Edge::new(u, a), Edge::new(v, b))),
        ))
    }

    pub fn pairs(&self) -> &[(Edge, Edge)] {
        &self.pairs
    }

    /// The same bonds seen from the other side.
    pub fn inverse(&self) -> Self {
        SplicePairing::new(self.pairs.iter().map(|&(a, b)| (b, a)))
    }

    fn validate(&self, g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Vec<(usize, usize)>> {
        if g.degree(u) != h.degree(v) {
            return domain(format!("degrees differ: {} in the first graph, {} in the second", g.degree(u), h.degree(v)));
        }
        if self.pairs.len() != g.degree(u) {
            return domain(format!("pairing has {} bonds, expected {}", self.pairs.len(), g.degree(u)));
        }
        let mut seen_g = BTreeSet::new();
        let mut seen_h = BTreeSet::new();
        let mut out = Vec::new();
        for &(eg, eh) in &self.pairs {
            let (Some(a), Some(b)) = (eg.other(u), eh.other(v)) else {
                return domain(format!("bond ({eg}, {eh}) is not incident with the splicing vertices"));
            };
            if !g.contains_edge(eg) || !h.contains_edge(eh) {
                return domain(format!("bond ({eg}, {eh}) uses a missing edge"));
            }
            if !seen_g.insert(a) || !seen_h.insert(b) {
                return domain(format!("bond ({eg}, {eh}) repeats an edge"));
            }
            out.push((a, b));
        }
        Ok(out)
    }
}

/// Where the vertices of both inputs went in a splice.
pub(crate) struct SpliceMap {
    pub graph: Graph,
    /// New index of each vertex of `G` (`None` for `u`).
    pub left: Vec<Option<usize>>,
}

/// `G(u) ⊙ H(v)`: the vertices of `G − u` (ascending) followed by those of
/// `H − v` (ascending), plus one edge per bond. Labels of both sides are kept;
/// a label from `H` that collides is primed.
pub fn splice(g: &Graph, u: usize, h: &Graph, v: usize, pairing: &SplicePairing) -> Result<Graph> {
    splice_with_map(g, u, h, v, pairing).map(|s| s.graph)
}

pub(crate) fn splice_with_map(g: &Graph, u: usize, h: &Graph, v: usize, pairing: &SplicePairing) -> Result<SpliceMap> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    let bonds = pairing.validate(g, u, h, v)?;
    let left: Vec<Option<usize>> = (0..g.order()).map(|x| (x != u).then(|| if x < u { x } else { x - 1 })).collect();
    let offset = g.order() - 1;
    let right: Vec<Option<usize>> =
        (0..h.order()).map(|x| (x != v).then(|| offset + if x < v { x } else { x - 1 })).collect();
    let mut edges = Vec::new();
    for e in g.edges() {
        if let (Some(a), Some(b)) = (left[e.u()], left[e.v()]) {
            edges.push((a, b));
        }
    }
    for e in h.edges() {
        if let (Some(a), Some(b)) = (right[e.u()], right[e.v()]) {
            edges.push((a, b));
        }
    }
    for (a, b) in bonds {
        edges.push((left[a].expect("neighbour of u survives"), right[b].expect("neighbour of v survives")));
    }
    let n = g.order() + h.order() - 2;
    let mut labels: Vec<Option<String>> = vec![None; n];
    let mut used: BTreeSet<String> = BTreeSet::new();
    for x in 0..g.order() {
        if let (Some(i), Some(l)) = (left[x], g.label(x)) {
            labels[i] = Some(l.to_string());
            used.insert(l.to_string());
        }
    }
    let h_labels: BTreeSet<&str> = h.labels().iter().flatten().map(String::as_str).collect();
    for x in 0..h.order() {
        if let (Some(i), Some(l)) = (right[x], h.label(x)) {
            let mut name = l.to_string();
            while used.contains(&name) || (name != l && h_labels.contains(name.as_str())) {
                name.push('\'');
            }
            used.insert(name.clone());
            labels[i] = Some(name);
        }
    }
    let graph = Graph::new(n, edges)?.set_labels(labels);
    Ok(SpliceMap { graph, left })
}

/// `G⟨v⟩ = G(v) ⊙ K₄`: replaces the degree-3 vertex `v` by a triangle.
///
/// The neighbours of `v` in ascending order are joined to the new triangle
/// vertices, which come last and are labelled `tri(<v>):0..2` where `<v>` is
/// the label of `v` or its index.
pub fn insert_triangle(g: &Graph, v: usize) -> Result<Graph> {
    insert_triangle_with_map(g, v, None).map(|s| s.graph)
}

fn insert_triangle_with_map(g: &Graph, v: usize, name: Option<usize>) -> Result<SpliceMap> {
    g.check_vertex(v)?;
    if g.degree(v) != 3 {
        return domain(format!("triangle insertion needs a degree-3 vertex, vertex {v} has degree {}", g.degree(v)));
    }
    let k4 = complete_graph(4);
    let pairing = SplicePairing::canonical(g, v, &k4, 0)?;
    let base = g.label(v).map_or_else(|| name.unwrap_or(v).to_string(), str::to_string);
    let mut s = splice_with_map(g, v, &k4, 0, &pairing)?;
    let n = s.graph.order();
    let mut labels = s.graph.labels().to_vec();
    let taken: BTreeSet<String> = labels.iter().flatten().cloned().collect();
    for i in 0..3 {
        let mut name = format!("tri({base}):{i}");
        while taken.contains(&name) {
            name.push('\'');
        }
        labels[n - 3 + i] = Some(name);
    }
    s.graph = s.graph.set_labels(labels);
    Ok(s)
}

/// `G⟨v₁, …, v_k⟩`: triangle insertion at each listed vertex of `G`, in order.
/// Unlabelled vertices name their triangles by their index in `G`.
pub fn insert_triangles(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
    if distinct.len() != vertices.len() {
        return domain("triangle insertion vertices must be distinct");
    }
    let mut current = g.clone();
    // position[x] tracks where original vertex x currently sits
    let mut position: Vec<Option<usize>> = (0..g.order()).map(Some).collect();
    for &v in vertices {
        g.check_vertex(v)?;
        let at = position[v].expect("each vertex is replaced once");
        let s = insert_triangle_with_map(&current, at, Some(v))?;
        for p in position.iter_mut() {
            *p = p.and_then(|x| s.left[x]);
        }
        current = s.graph;
    }
    Ok(current)
}

/// `G^Δ(X) = (G / X̄ → x)⟨x⟩`: contracts the far side of the 3-cut `∂(X)` and
/// replaces the contracted vertex by a triangle.
pub fn delta_replacement(g: &Graph, x: VertexSet) -> Result<Graph> {
    let cut = edge_cut(g, x)?;
    if cut.len() != 3 {
        return domain(format!("Δ-replacement needs a 3-cut, ∂(X) has {} edges", cut.len()));
    }
    let far = x.complement(g.order());
    if far.len() < 5 {
        return domain(format!("Δ-replacement needs |V ∖ X| ≥ 5, found {}", far.len()));
    }
    let c = contract_with_map(g, far)?;
    insert_triangle(&c.graph, c.contracted)
}
