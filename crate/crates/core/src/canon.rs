//! Canonical labelling by partition refinement with individualisation.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, pick the first smallest non-singleton cell, individualise each
//! of its vertices in turn. Every node carries a hash of the refinement steps
//! that produced it; the canonical leaf maximises (trace path, relabelled
//! adjacency). Subtrees whose trace falls below the incumbent are pruned, and
//! automorphisms discovered at equal leaves prune sibling orbits.

use std::collections::VecDeque;

use crate::graph::{Bits, Graph};
use crate::graph6::to_graph6;

/// `lab[i]` is the vertex placed at position `i` of the canonical ordering.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search { adj: g.adjacency(), n, best: None, automorphisms: Vec::new() };
    let mut part = Partition::initial(g);
    let mut path = vec![part.refine(g.adjacency(), (0..n).filter(|&i| part.is_start[i]).collect())];
    search.dfs(&mut part, &mut path, &mut Vec::new());
    search.best.expect("search always reaches a leaf").lab
}

/// The graph relabelled into canonical order (labels dropped).
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut pos = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_adjacency(relabel_rows(g.adjacency(), &lab, &pos))
}

/// graph6 text of the canonical relabelling; equal exactly for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> String {
    to_graph6(&canonical_graph(g)).expect("graph order never exceeds the graph6 limit")
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// An explicit isomorphism `g → h` as a vertex map, when one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if !is_isomorphic(g, h) {
        return None;
    }
    let lg = canonical_labeling(g);
    let lh = canonical_labeling(h);
    let mut map = vec![0; g.order()];
    for i in 0..g.order() {
        map[lg[i]] = lh[i];
    }
    Some(map)
}

fn relabel_rows(adj: &[u64], lab: &[usize], pos: &[usize]) -> Vec<u64> {
    lab.iter()
        .map(|&v| Bits::new(adj[v]).fold(0u64, |acc, w| acc | 1u64 << pos[w]))
        .collect()
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    is_start: Vec<bool>,
    /// For a cell starting at `s`, `end[s]` is one past its last position.
    end: Vec<usize>,
}

impl Partition {
    fn initial(g: &Graph) -> Partition {
        let n = g.order();
        let adj = g.adjacency();
        let key = |v: usize| {
            let tri: u32 = Bits::new(adj[v]).map(|w| (adj[v] & adj[w]).count_ones()).sum();
            (g.degree(v), tri / 2)
        };
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| key(v));
        let mut is_start = vec![false; n];
        let mut end = vec![0; n];
        let mut s = 0;
        for i in 1..=n {
            if i == n || key(lab[i]) != key(lab[s]) {
                is_start[s] = true;
                end[s] = i;
                s = i;
            }
        }
        Partition { lab, is_start, end }
    }

    fn cell_mask(&self, s: usize) -> u64 {
        self.lab[s..self.end[s]].iter().fold(0u64, |m, &v| m | 1u64 << v)
    }

    fn is_discrete(&self) -> bool {
        self.is_start.iter().all(|&b| b)
    }

    /// Refines to the coarsest equitable refinement; returns the step trace hash.
    fn refine(&mut self, adj: &[u64], initial: Vec<usize>) -> u64 {
        let n = self.lab.len();
        let mut hash = Fnv::new();
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        for s in initial {
            queued[s] = true;
            queue.push_back(s);
        }
        let mut counts = vec![0u32; n];
        while let Some(sp) = queue.pop_front() {
            queued[sp] = false;
            let splitter = self.cell_mask(sp);
            hash.add(sp as u64);
            let mut c = 0;
            while c < n {
                let e = self.end[c];
                if e - c > 1 {
                    for &v in &self.lab[c..e] {
                        counts[v] = (adj[v] & splitter).count_ones();
                    }
                    let first = counts[self.lab[c]];
                    if self.lab[c..e].iter().any(|&v| counts[v] != first) {
                        self.lab[c..e].sort_by_key(|&v| counts[v]);
                        let mut s = c;
                        for i in c + 1..=e {
                            if i == e || counts[self.lab[i]] != counts[self.lab[s]] {
                                self.is_start[s] = true;
                                self.end[s] = i;
                                hash.add(((s as u64) << 32) | ((i - s) as u64) << 8 | counts[self.lab[s]] as u64);
                                if !queued[s] {
                                    queued[s] = true;
                                    queue.push_back(s);
                                }
                                s = i;
                            }
                        }
                    }
                }
                c = e;
            }
        }
        hash.finish()
    }

    fn target_cell(&self) -> Option<usize> {
        let n = self.lab.len();
        let mut best: Option<(usize, usize)> = None;
        let mut c = 0;
        while c < n {
            let size = self.end[c] - c;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((c, size));
            }
            c = self.end[c];
        }
        best.map(|(c, _)| c)
    }

    fn individualise(&mut self, c: usize, v: usize) {
        let e = self.end[c];
        let i = self.lab[c..e].iter().position(|&w| w == v).expect("vertex in cell") + c;
        self.lab.swap(c, i);
        // keep the remainder in ascending vertex order so the split is deterministic
        self.lab[c + 1..e].sort_unstable();
        self.end[c] = c + 1;
        self.is_start[c + 1] = true;
        self.end[c + 1] = e;
    }
}

struct Leaf {
    path: Vec<u64>,
    rows: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn dfs(&mut self, part: &mut Partition, path: &mut Vec<u64>, fixed: &mut Vec<usize>) {
        if let Some(best) = &self.best {
            let k = path.len().min(best.path.len());
            match path[..k].cmp(&best.path[..k]) {
                std::cmp::Ordering::Less => return,
                std::cmp::Ordering::Greater => self.best = None,
                std::cmp::Ordering::Equal => {}
            }
        }
        let Some(c) = part.target_cell() else {
            self.leaf(part, path);
            return;
        };
        let cell: Vec<usize> = {
            let mut v = part.lab[c..part.end[c]].to_vec();
            v.sort_unstable();
            v
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(v, &explored, fixed) {
                continue;
            }
            explored.push(v);
            let mut child = part.clone();
            child.individualise(c, v);
            let h = child.refine(self.adj, vec![c]);
            path.push(h);
            fixed.push(v);
            self.dfs(&mut child, path, fixed);
            fixed.pop();
            path.pop();
        }
    }

    fn leaf(&mut self, part: &Partition, path: &[u64]) {
        debug_assert!(part.is_discrete());
        let mut pos = vec![0; self.n];
        for (i, &v) in part.lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows = relabel_rows(self.adj, &part.lab, &pos);
        match &self.best {
            None => {
                self.best = Some(Leaf { path: path.to_vec(), rows, lab: part.lab.clone() });
            }
            Some(best) => match (path, &rows[..]).cmp(&(&best.path[..], &best.rows[..])) {
                std::cmp::Ordering::Greater => {
                    self.best = Some(Leaf { path: path.to_vec(), rows, lab: part.lab.clone() });
                }
                std::cmp::Ordering::Equal => {
                    // best.lab[i] ↦ part.lab[i] preserves adjacency
                    let mut gamma = vec![0; self.n];
                    for i in 0..self.n {
                        gamma[best.lab[i]] = part.lab[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the known
    /// automorphisms that fix every individualised vertex.
    fn same_orbit(&self, v: usize, explored: &[usize], fixed: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| fixed.iter().all(|&f| a[f] == f))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for a in gens {
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn add(&mut self, x: u64) {
        for b in x.to_le_bytes() {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}
