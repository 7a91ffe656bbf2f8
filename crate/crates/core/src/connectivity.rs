//! Vertex/edge connectivity and bipartition.

use std::collections::VecDeque;

use crate::error::{domain, Result};
use crate::graph::{component_of, full_mask, Bits, Edge, Graph, VertexSet};

/// Exact vertex and edge connectivity `(κ, λ)` of a connected graph with at least two vertices.
pub fn connectivity(g: &Graph) -> Result<(usize, usize)> {
    if g.order() < 2 {
        return domain("connectivity needs at least two vertices");
    }
    if !g.is_connected() {
        return domain("connectivity is only defined here for connected graphs");
    }
    Ok((vertex_connectivity(g), edge_connectivity_unchecked(g)))
}

pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    connectivity(g).map(|(_, l)| l)
}

fn edge_connectivity_unchecked(g: &Graph) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for t in 1..n {
        let mut net = FlowNet::new(n);
        for e in g.edges() {
            net.add(e.u(), e.v(), 1);
            net.add(e.v(), e.u(), 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best
}

fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let complete = g.vertices().all(|v| g.degree(v) == n - 1);
    if complete {
        return n - 1;
    }
    let mut best = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
    let mut i = 0;
    // some vertex among the first κ+1 lies outside a minimum separator
    while i <= best && i < n {
        for t in 0..n {
            if t != i && !g.has_edge(i, t) {
                best = best.min(local_vertex_connectivity(g, i, t, best));
            }
        }
        i += 1;
    }
    best
}

/// Number of internally vertex-disjoint `s`–`t` paths (s, t non-adjacent), capped at `cap`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    // vertex v splits into v_in = v and v_out = v + n
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { n } else { 1 };
        net.add(v, v + n, c);
    }
    for e in g.edges() {
        net.add(e.u() + n, e.v(), n);
        net.add(e.v() + n, e.u(), n);
    }
    net.max_flow(s + n, t, cap)
}

struct FlowNet {
    cap: Vec<Vec<usize>>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet { cap: vec![vec![0; n]; n], adj: vec![Vec::new(); n] }
    }

    fn add(&mut self, a: usize, b: usize, c: usize) {
        if self.cap[a][b] == 0 && self.cap[b][a] == 0 {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
        self.cap[a][b] += c;
    }

    /// Augments along shortest paths until `limit` units are reached or no path remains.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.cap.len();
        let mut flow = 0;
        while flow < limit {
            let mut prev = vec![usize::MAX; n];
            prev[s] = s;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                if v == t {
                    break;
                }
                for &w in &self.adj[v] {
                    if prev[w] == usize::MAX && self.cap[v][w] > 0 {
                        prev[w] = v;
                        q.push_back(w);
                    }
                }
            }
            if prev[t] == usize::MAX {
                break;
            }
            let mut bottleneck = usize::MAX;
            let mut v = t;
            while v != s {
                bottleneck = bottleneck.min(self.cap[prev[v]][v]);
                v = prev[v];
            }
            bottleneck = bottleneck.min(limit - flow);
            let mut v = t;
            while v != s {
                let u = prev[v];
                self.cap[u][v] -= bottleneck;
                self.cap[v][u] += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
        flow
    }
}

/// True when the graph has more than three vertices and no separating set of size ≤ 2.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return false;
    }
    let adj = g.adjacency();
    let all = full_mask(n);
    for a in 0..n {
        let alive = all & !(1u64 << a);
        let start = (alive).trailing_zeros() as usize;
        if component_of(adj, alive, start) != alive {
            return false;
        }
        for b in a + 1..n {
            let alive2 = alive & !(1u64 << b);
            let start = alive2.trailing_zeros() as usize;
            if component_of(adj, alive2, start) != alive2 {
                return false;
            }
        }
    }
    true
}

/// Connected and free of bridges.
pub fn is_two_edge_connected(g: &Graph) -> bool {
    g.order() >= 2 && g.is_connected() && g.edges().iter().all(|&e| !disconnects(g, &[e]))
}

/// Whether deleting `edges` leaves the graph disconnected.
pub fn disconnects(g: &Graph, edges: &[Edge]) -> bool {
    let mut adj = g.adjacency().to_vec();
    for e in edges {
        adj[e.u()] &= !(1u64 << e.v());
        adj[e.v()] &= !(1u64 << e.u());
    }
    let all = full_mask(g.order());
    component_of(&adj, all, 0) != all
}

/// Whether `e` belongs to some edge cut of size at most two.
pub fn lies_in_two_cut(g: &Graph, e: Edge) -> bool {
    disconnects(g, &[e]) || g.edges().iter().any(|&f| f != e && disconnects(g, &[e, f]))
}

/// A proper 2-colouring `(A, B)` when one exists; `A` holds the smallest
/// vertex of every component.
pub fn is_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    bipartition_masked(g.adjacency(), full_mask(g.order())).map(|(a, b)| (VertexSet::from_mask(a), VertexSet::from_mask(b)))
}

pub(crate) fn bipartition_masked(adj: &[u64], alive: u64) -> Option<(u64, u64)> {
    let mut side_a = 0u64;
    let mut side_b = 0u64;
    let mut rest = alive;
    while rest != 0 {
        let root = rest.trailing_zeros() as usize;
        let mut frontier = 1u64 << root;
        let mut on_a = true;
        let mut seen = frontier;
        while frontier != 0 {
            if on_a {
                side_a |= frontier;
            } else {
                side_b |= frontier;
            }
            let mut next = 0u64;
            for v in Bits::new(frontier) {
                next |= adj[v] & alive;
            }
            let same = if on_a { side_a } else { side_b };
            if next & same != 0 {
                return None;
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            on_a = !on_a;
        }
        rest &= !seen;
    }
    Some((side_a, side_b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    #[test]
    fn k4_is_three_connected() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(connectivity(&k4).unwrap(), (3, 3));
        assert!(is_three_connected(&k4));
    }

    #[test]
    fn bridged_triangles() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert_eq!(connectivity(&g).unwrap(), (1, 1));
        assert!(!is_two_edge_connected(&g));
        assert!(lies_in_two_cut(&g, Edge::new(2, 3)));
        assert!(!is_three_connected(&g));
    }

    #[test]
    fn connectivity_domain_errors() {
        assert!(connectivity(&Graph::empty(1).unwrap()).is_err());
        assert!(connectivity(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_err());
    }

    #[test]
    fn cycle_connectivity() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(connectivity(&c6).unwrap(), (2, 2));
        let (a, b) = is_bipartite(&c6).unwrap();
        assert_eq!(a.to_vec(), vec![0, 2, 4]);
        assert_eq!(b.to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn odd_cycle_is_not_bipartite() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(is_bipartite(&c5).is_none());
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let (a, b) = is_bipartite(&k33).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 1, 2], vec![3, 4, 5]));
        assert_eq!(connectivity(&k33).unwrap(), (3, 3));
    }
}
