//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which keeps every
//! matching and cut query allocation-light at the sizes this crate targets.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order; matches the short form of graph6.
pub const MAX_ORDER: usize = 62;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    /// Builds the edge `{a, b}`. Panics when `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn touches(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }

    /// The endpoint opposite `x`; `None` when `x` is not an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }

    pub(crate) fn mask(self) -> u64 {
        (1u64 << self.0) | (1u64 << self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// A set of vertices of a graph with at most [`MAX_ORDER`] vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    /// Complement relative to the vertex set `0..n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & full_mask(n))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Serialised as the ascending list of its vertices.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Bits {
    pub fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple graph with optional per-vertex role labels.
///
/// Equality compares order, edges and labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
    edges: Vec<Edge>,
    labels: Vec<Option<String>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn new<I, E>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut adj = vec![0u64; order];
        let mut list = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if adj[a] >> b & 1 == 1 {
                let e = Edge::new(a, b);
                return Err(Error::ParallelEdge(e.u(), e.v()));
            }
            adj[a] |= 1u64 << b;
            adj[b] |= 1u64 << a;
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        Ok(Graph {
            order,
            adj,
            edges: list,
            labels: vec![None; order],
        })
    }

    /// Graph from adjacency bitmasks. Masks must be symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let order = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in Bits(row >> u >> 1) {
                edges.push(Edge(u, u + 1 + v));
            }
        }
        Graph {
            order,
            adj,
            edges,
            labels: vec![None; order],
        }
    }

    pub fn empty(order: usize) -> Result<Graph> {
        Graph::new(order, std::iter::empty::<(usize, usize)>())
    }

    /// Attaches labels; every label must be unique.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = (usize, S)>) -> Result<Graph> {
        for (v, s) in labels {
            if v >= self.order {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
            }
            self.labels[v] = Some(s.into());
        }
        self.check_labels()?;
        Ok(self)
    }

    pub(crate) fn set_labels(mut self, labels: Vec<Option<String>>) -> Graph {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }

    fn check_labels(&self) -> Result<()> {
        let mut seen = BTreeMap::new();
        for l in self.labels.iter().flatten() {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.adj[a] >> b & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Looks up a labelled vertex, failing with a domain error when absent.
    pub fn labelled(&self, label: &str) -> Result<usize> {
        self.vertex_by_label(label)
            .ok_or_else(|| Error::Domain(format!("no vertex labelled {label:?}")))
    }

    /// The edge between two labelled vertices.
    pub fn labelled_edge(&self, a: &str, b: &str) -> Result<Edge> {
        let (x, y) = (self.labelled(a)?, self.labelled(b)?);
        if !self.has_edge(x, y) {
            return Err(Error::Domain(format!("{a} and {b} are not adjacent")));
        }
        Ok(Edge::new(x, y))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.order > 0 && self.is_regular(3)
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_connected(&self) -> bool {
        self.order > 0 && component_of(&self.adj, self.vertex_set().mask(), 0) == full_mask(self.order)
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        components_masked(&self.adj, full_mask(self.order))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// A copy without the given edges. Labels are kept.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut adj = self.adj.clone();
        for e in removed {
            adj[e.u()] &= !(1u64 << e.v());
            adj[e.v()] &= !(1u64 << e.u());
        }
        Graph::from_adjacency(adj).set_labels(self.labels.clone())
    }

    /// A copy with extra edges added.
    pub fn with_edges(&self, added: &[Edge]) -> Result<Graph> {
        let mut all: Vec<(usize, usize)> = self.edges.iter().map(|e| e.ends()).collect();
        all.extend(added.iter().map(|e| e.ends()));
        Ok(Graph::new(self.order, all)?.set_labels(self.labels.clone()))
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::Domain("permutation length differs from graph order".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.order || seen >> p & 1 == 1 {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen |= 1u64 << p;
        }
        let mut labels = vec![None; self.order];
        for (v, l) in self.labels.iter().enumerate() {
            labels[perm[v]] = l.clone();
        }
        Ok(Graph::new(self.order, self.edges.iter().map(|e| (perm[e.u()], perm[e.v()])))?.set_labels(labels))
    }

    /// Edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| set.contains(e.u()) && set.contains(e.v()))
            .collect()
    }

    /// Edges with exactly one end in `set`.
    pub fn boundary(&self, set: VertexSet) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| set.contains(e.u()) != set.contains(e.v()))
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_edge(&self, e: Edge) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{e} is not an edge of the graph")))
        }
    }

    pub(crate) fn check_subset(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertex_set()) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{set} is not a subset of the vertex set")))
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Vertices reachable from `start` inside `alive`.
pub(crate) fn component_of(adj: &[u64], alive: u64, start: usize) -> u64 {
    if alive >> start & 1 == 0 {
        return 0;
    }
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= adj[v];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn components_masked(adj: &[u64], alive: u64) -> Vec<u64> {
    let mut rest = alive;
    let mut out = Vec::new();
    while rest != 0 {
        let c = component_of(adj, alive, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}
