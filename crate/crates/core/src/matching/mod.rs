//! Maximum matchings and constrained perfect-matching queries.

pub(crate) mod blossom;

use std::fmt;

use crate::error::{domain, Result};
use crate::graph::{components_masked, full_mask, Edge, Graph, VertexSet};

pub(crate) use blossom::NONE;

/// A set of pairwise disjoint edges, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Builds a matching, checking that the edges are pairwise disjoint.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Matching> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        edges.dedup();
        let mut covered = 0u64;
        for e in &edges {
            if covered & e.mask() != 0 {
                return domain(format!("edges sharing an endpoint cannot form a matching (at {e})"));
            }
            covered |= e.mask();
        }
        Ok(Matching { edges })
    }

    pub(crate) fn from_mates(mate: &[usize]) -> Matching {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| w != NONE && v < w)
            .map(|(v, &w)| Edge::new(v, w))
            .collect();
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// The vertex matched to `v`, if any.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|e| e.other(v))
    }

    pub fn covered(&self) -> VertexSet {
        VertexSet::from_mask(self.edges.iter().fold(0, |m, e| m | e.mask()))
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        2 * self.len() == g.order() && self.edges.iter().all(|&e| g.contains_edge(e))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A maximum-cardinality matching. Deterministic for a given graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mates(&blossom::maximum_masked(g.adjacency(), full_mask(g.order())))
}

pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    blossom::perfect_masked(g.adjacency(), full_mask(g.order()), None).map(|m| Matching::from_mates(&m))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    blossom::perfect_masked(g.adjacency(), full_mask(g.order()), None).is_some()
}

/// A perfect matching containing every `forced` edge and no `forbidden` edge.
pub fn perfect_matching_with(g: &Graph, forced: &[Edge], forbidden: &[Edge]) -> Result<Option<Matching>> {
    let mut covered = 0u64;
    for &e in forced {
        g.check_edge(e)?;
        if covered & e.mask() != 0 {
            return domain(format!("forced edges must be pairwise disjoint (at {e})"));
        }
        covered |= e.mask();
    }
    for &f in forbidden {
        g.check_edge(f)?;
        if forced.contains(&f) {
            return domain(format!("edge {f} is both forced and forbidden"));
        }
    }
    let mut adj = g.adjacency().to_vec();
    remove_edges(&mut adj, forbidden);
    let alive = full_mask(g.order()) & !covered;
    Ok(blossom::perfect_masked(&adj, alive, None).map(|mate| {
        let mut m = Matching::from_mates(&mate);
        m.edges.extend_from_slice(forced);
        m.edges.sort();
        m
    }))
}

pub(crate) fn remove_edges(adj: &mut [u64], edges: &[Edge]) {
    for e in edges {
        adj[e.u()] &= !(1u64 << e.v());
        adj[e.v()] &= !(1u64 << e.u());
    }
}

/// Whether the graph on `adj` restricted to `alive` has a perfect matching.
pub(crate) fn has_pm_masked(adj: &[u64], alive: u64, warm: Option<&[usize]>) -> bool {
    blossom::perfect_masked(adj, alive, warm).is_some()
}

/// Edges lying in at least one perfect matching.
pub fn allowed_edges(g: &Graph) -> Result<Vec<Edge>> {
    if g.order() % 2 == 1 {
        return domain("allowed edges are only defined for graphs of even order");
    }
    Ok(allowed_masked(g.adjacency(), full_mask(g.order()))
        .map(|mask| g.edges().iter().copied().filter(|e| mask[g.edge_index(*e).unwrap()]).collect())
        .unwrap_or_default())
}

/// Per-edge flags (in `Graph::edges` order of a graph with adjacency `adj`)
/// marking allowed edges; `None` when no perfect matching exists.
pub(crate) fn allowed_masked(adj: &[u64], alive: u64) -> Option<Vec<bool>> {
    let edges = edges_of(adj, alive);
    let base = blossom::perfect_masked(adj, alive, None)?;
    let mut allowed = vec![false; edges.len()];
    let mark = |mate: &[usize], allowed: &mut Vec<bool>| {
        for (i, e) in edges.iter().enumerate() {
            if mate[e.u()] == e.v() {
                allowed[i] = true;
            }
        }
    };
    mark(&base, &mut allowed);
    for (i, e) in edges.iter().enumerate() {
        if allowed[i] {
            continue;
        }
        let rest = alive & !e.mask();
        if let Some(mut mate) = blossom::perfect_masked(adj, rest, Some(&base)) {
            mate[e.u()] = e.v();
            mate[e.v()] = e.u();
            mark(&mate, &mut allowed);
        }
    }
    Some(allowed)
}

/// Edges of the subgraph induced by `alive`, in sorted order.
pub(crate) fn edges_of(adj: &[u64], alive: u64) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in crate::graph::Bits::new(alive) {
        for v in crate::graph::Bits::new(adj[u] & alive & !((2u64 << u) - 1)) {
            out.push(Edge::new(u, v));
        }
    }
    out.sort();
    out
}

/// Number of odd components of `g − S`.
pub fn odd_components(g: &Graph, s: VertexSet) -> Result<usize> {
    g.check_subset(s)?;
    let alive = full_mask(g.order()) & !s.mask();
    Ok(components_masked(g.adjacency(), alive).iter().filter(|c| c.count_ones() % 2 == 1).count())
}

/// `o(G − S) = |S|`, for a non-empty `S` in a graph with a perfect matching.
pub fn is_barrier(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_subset(s)?;
    if s.is_empty() {
        return domain("a barrier must be non-empty");
    }
    if !has_perfect_matching(g) {
        return domain("barriers are considered only in graphs with a perfect matching");
    }
    Ok(odd_components(g, s)? == s.len())
}

/// `G − {x, y}` has a perfect matching for every pair of distinct vertices.
pub fn is_bicritical(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n % 2 == 1 || n < 4 {
        return domain("bicriticality is tested on graphs of even order at least 4");
    }
    Ok(bicritical_unchecked(g))
}

pub(crate) fn bicritical_unchecked(g: &Graph) -> bool {
    let n = g.order();
    let all = full_mask(n);
    let adj = g.adjacency();
    let Some(base) = blossom::perfect_masked(adj, all, None) else {
        return false;
    };
    for x in 0..n {
        for y in x + 1..n {
            let alive = all & !(1u64 << x | 1u64 << y);
            if !has_pm_masked(adj, alive, Some(&base)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn sizes_of_small_graphs() {
        assert_eq!(maximum_matching(&parse_graph6("C~").unwrap()).len(), 2);
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&Graph::empty(3).unwrap()).len(), 0);
    }

    #[test]
    fn forced_and_forbidden() {
        let k4 = parse_graph6("C~").unwrap();
        let m = perfect_matching_with(&k4, &[Edge::new(0, 1)], &[]).unwrap().unwrap();
        assert_eq!(m.edges(), &[Edge::new(0, 1), Edge::new(2, 3)]);
        assert!(perfect_matching_with(&k4, &[Edge::new(0, 1)], &[Edge::new(2, 3)]).unwrap().is_none());
        assert!(perfect_matching_with(&k4, &[Edge::new(0, 1), Edge::new(1, 2)], &[]).is_err());
        assert!(perfect_matching_with(&k4, &[Edge::new(0, 1)], &[Edge::new(0, 1)]).is_err());
        assert!(perfect_matching_with(&cycle(5), &[], &[]).unwrap().is_none());
    }

    #[test]
    fn allowed_edges_of_paths_and_cycles() {
        assert_eq!(allowed_edges(&path(4)).unwrap(), vec![Edge::new(0, 1), Edge::new(2, 3)]);
        assert_eq!(allowed_edges(&cycle(6)).unwrap().len(), 6);
        assert!(allowed_edges(&cycle(5)).is_err());
        assert!(allowed_edges(&Graph::new(4, [(0, 1)]).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn barriers() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(odd_components(&k4, VertexSet::singleton(0)).unwrap(), 1);
        assert!(is_barrier(&k4, VertexSet::singleton(0)).unwrap());
        let c6 = cycle(6);
        assert!(is_barrier(&c6, [0, 2].iter().collect()).unwrap());
        assert!(!is_barrier(&c6, [0, 3].iter().collect()).unwrap());
        assert!(is_barrier(&c6, VertexSet::EMPTY).is_err());
        assert!(is_barrier(&path(3), VertexSet::singleton(1)).is_err());
    }

    #[test]
    fn bicritical_examples() {
        assert!(is_bicritical(&parse_graph6("C~").unwrap()).unwrap());
        assert!(!is_bicritical(&cycle(4)).unwrap());
        assert!(is_bicritical(&cycle(5)).is_err());
        assert!(is_bicritical(&path(2)).is_err());
    }

    #[test]
    fn matching_rejects_shared_endpoints() {
        assert!(Matching::new([Edge::new(0, 1), Edge::new(1, 2)]).is_err());
        let m = Matching::new([Edge::new(2, 3), Edge::new(0, 1)]).unwrap();
        assert_eq!(m.partner(3), Some(2));
        assert_eq!(m.to_string(), "{0-1, 2-3}");
    }
}
