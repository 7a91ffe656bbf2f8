//! Edmonds' blossom algorithm on bitmask adjacency restricted to a vertex mask.

use std::collections::VecDeque;

use crate::graph::Bits;

pub(crate) const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [u64],
    alive: u64,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], alive: u64, mate: Vec<usize>) -> Self {
        let n = adj.len();
        Search {
            adj,
            alive,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Breadth-first search for an augmenting path from `root`; returns its free far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in Bits::new(self.adj[v] & self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.alive >> i & 1 == 1 && self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Greedy matching in ascending vertex order, used as a starting point.
fn greedy(adj: &[u64], alive: u64) -> Vec<usize> {
    let mut mate = vec![NONE; adj.len()];
    let mut free = alive;
    for v in Bits::new(alive) {
        if free >> v & 1 == 0 {
            continue;
        }
        let cand = adj[v] & free & !(1u64 << v);
        if cand != 0 {
            let w = cand.trailing_zeros() as usize;
            mate[v] = w;
            mate[w] = v;
            free &= !(1u64 << v | 1u64 << w);
        }
    }
    mate
}

/// Drops pairs of `warm` that leave `alive` or are not edges of `adj`.
fn sanitize(adj: &[u64], alive: u64, warm: &[usize]) -> Vec<usize> {
    let mut mate = vec![NONE; adj.len()];
    for v in Bits::new(alive) {
        let w = warm[v];
        if w != NONE && alive >> w & 1 == 1 && adj[v] >> w & 1 == 1 && warm[w] == v {
            mate[v] = w;
        }
    }
    mate
}

/// Maximum matching of the subgraph induced by `alive`, as a mate array.
pub(crate) fn maximum_masked(adj: &[u64], alive: u64) -> Vec<usize> {
    let mut s = Search::new(adj, alive, greedy(adj, alive));
    for v in Bits::new(alive) {
        if s.mate[v] == NONE {
            if let Some(end) = s.find_path(v) {
                s.augment(end);
            }
        }
    }
    s.mate
}

/// A perfect matching of the subgraph induced by `alive`, if one exists.
/// `warm` (a mate array, possibly stale) seeds the search.
pub(crate) fn perfect_masked(adj: &[u64], alive: u64, warm: Option<&[usize]>) -> Option<Vec<usize>> {
    if alive.count_ones() % 2 == 1 {
        return None;
    }
    let start = match warm {
        Some(w) => sanitize(adj, alive, w),
        None => greedy(adj, alive),
    };
    let mut s = Search::new(adj, alive, start);
    for v in Bits::new(alive) {
        if s.mate[v] == NONE {
            // no augmenting path from an exposed vertex rules out a perfect matching
            let end = s.find_path(v)?;
            s.augment(end);
        }
    }
    Some(s.mate)
}
