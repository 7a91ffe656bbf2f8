//! Brute-force reference routines used to cross-check the fast algorithms.
//!
//! Everything here works on a plain `(order, edge list)` description and
//! shares no code with `mcov-core`. The routines are exponential and meant
//! for graphs of roughly a dozen vertices.

use std::collections::BTreeSet;

pub type Pair = (usize, usize);

/// A small simple graph with an adjacency matrix.
#[derive(Clone, Debug)]
pub struct Small {
    pub n: usize,
    pub edges: Vec<Pair>,
    adj: Vec<Vec<bool>>,
}

fn norm((a, b): Pair) -> Pair {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Small {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Pair>) -> Small {
        let mut adj = vec![vec![false; n]; n];
        let mut list = BTreeSet::new();
        for (a, b) in edges {
            assert!(a != b && a < n && b < n, "bad edge {a}-{b}");
            adj[a][b] = true;
            adj[b][a] = true;
            list.insert(norm((a, b)));
        }
        Small { n, edges: list.into_iter().collect(), adj }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn without(&self, removed: &[Pair]) -> Small {
        let gone: BTreeSet<Pair> = removed.iter().map(|&e| norm(e)).collect();
        Small::new(self.n, self.edges.iter().copied().filter(|e| !gone.contains(e)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    /// Components of the subgraph induced by `alive`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !alive[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in 0..self.n {
                    if alive[w] && !seen[w] && self.adj[v][w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components_within(&vec![true; self.n]).len() == 1
    }

    /// Two-colouring by depth-first search, `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for w in 0..self.n {
                    if !self.adj[v][w] {
                        continue;
                    }
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }
}

/// Every perfect matching of the subgraph induced by `alive`.
pub fn perfect_matchings_within(g: &Small, alive: &[bool]) -> Vec<Vec<Pair>> {
    fn rec(g: &Small, free: &mut Vec<bool>, cur: &mut Vec<Pair>, out: &mut Vec<Vec<Pair>>) {
        let Some(v) = (0..g.n).find(|&v| free[v]) else {
            out.push(cur.clone());
            return;
        };
        free[v] = false;
        for w in v + 1..g.n {
            if free[w] && g.adj[v][w] {
                free[w] = false;
                cur.push((v, w));
                rec(g, free, cur, out);
                cur.pop();
                free[w] = true;
            }
        }
        free[v] = true;
    }
    let mut out = Vec::new();
    let mut free = alive.to_vec();
    rec(g, &mut free, &mut Vec::new(), &mut out);
    out
}

pub fn perfect_matchings(g: &Small) -> Vec<Vec<Pair>> {
    perfect_matchings_within(g, &vec![true; g.n])
}

/// Size of a maximum matching by exhaustive branching.
pub fn max_matching_size(g: &Small) -> usize {
    fn rec(g: &Small, free: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) = (from..g.n).find(|&v| free[v]) else {
            return 0;
        };
        free[v] = false;
        let mut best = rec(g, free, v + 1);
        for w in v + 1..g.n {
            if free[w] && g.adj[v][w] {
                free[w] = false;
                best = best.max(1 + rec(g, free, v + 1));
                free[w] = true;
            }
        }
        free[v] = true;
        best
    }
    rec(g, &mut vec![true; g.n], 0)
}

/// `½ · min_S (|V| − o(G − S) + |S|)` over every vertex subset `S`.
pub fn tutte_berge(g: &Small) -> usize {
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << g.n) {
        let alive: Vec<bool> = (0..g.n).map(|v| mask >> v & 1 == 0).collect();
        let s = mask.count_ones() as usize;
        let odd = g.components_within(&alive).iter().filter(|c| c.len() % 2 == 1).count();
        best = best.min(g.n + s - odd);
    }
    best / 2
}

/// Whether some path alternating between non-matching and matching edges
/// joins two exposed vertices (explores all simple paths).
pub fn has_augmenting_path(g: &Small, matching: &[Pair]) -> bool {
    let mut mate = vec![usize::MAX; g.n];
    for &(a, b) in matching {
        mate[a] = b;
        mate[b] = a;
    }
    fn walk(g: &Small, mate: &[usize], v: usize, want_matched: bool, on_path: &mut Vec<bool>) -> bool {
        for w in 0..g.n {
            if on_path[w] || !g.adj[v][w] || (mate[v] == w) != want_matched {
                continue;
            }
            if !want_matched && mate[w] == usize::MAX {
                return true;
            }
            on_path[w] = true;
            let found = walk(g, mate, w, !want_matched, on_path);
            on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
    (0..g.n).filter(|&v| mate[v] == usize::MAX).any(|v| {
        let mut on_path = vec![false; g.n];
        on_path[v] = true;
        walk(g, &mate, v, false, &mut on_path)
    })
}

/// Union of all perfect matchings.
pub fn allowed_edges(g: &Small) -> BTreeSet<Pair> {
    perfect_matchings(g).into_iter().flatten().collect()
}

pub fn is_matching_covered(g: &Small) -> bool {
    g.n >= 2 && g.n.is_multiple_of(2) && g.is_connected() && allowed_edges(g).len() == g.edges.len()
}

/// Every perfect matching containing `e` contains `f`.
pub fn depends_on(g: &Small, e: Pair, f: Pair) -> bool {
    let (e, f) = (norm(e), norm(f));
    perfect_matchings(g).iter().filter(|m| m.contains(&e)).all(|m| m.contains(&f))
}

pub fn removable_edges(g: &Small) -> Vec<Pair> {
    g.edges.iter().copied().filter(|&e| is_matching_covered(&g.without(&[e]))).collect()
}

pub fn removable_doubletons(g: &Small) -> Vec<(Pair, Pair)> {
    let removable: BTreeSet<Pair> = removable_edges(g).into_iter().collect();
    let mut out = Vec::new();
    for (i, &e) in g.edges.iter().enumerate() {
        for &f in &g.edges[i + 1..] {
            if !removable.contains(&e) && !removable.contains(&f) && is_matching_covered(&g.without(&[e, f])) {
                out.push((e, f));
            }
        }
    }
    out
}

fn boundary(g: &Small, shore: &[bool]) -> Vec<Pair> {
    g.edges.iter().copied().filter(|&(a, b)| shore[a] != shore[b]).collect()
}

/// `(separating, tight)` of `∂(X)` from the full list of perfect matchings.
pub fn cut_type(g: &Small, shore: &[bool]) -> (bool, bool) {
    let cut: BTreeSet<Pair> = boundary(g, shore).into_iter().collect();
    let pms = perfect_matchings(g);
    let meets = |m: &Vec<Pair>| m.iter().filter(|e| cut.contains(e)).count();
    let tight = pms.iter().all(|m| meets(m) == 1);
    let separating = g.edges.iter().all(|e| pms.iter().any(|m| m.contains(e) && meets(m) == 1));
    (separating, tight)
}

/// Shores `X ∋ 0` with `2 ≤ |X| ≤ n − 2`, as membership vectors.
pub fn nontrivial_shores(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..(1u64 << n.saturating_sub(1))).filter_map(move |rest| {
        let mask = rest << 1 | 1;
        let size = mask.count_ones() as usize;
        (size >= 2 && n - size >= 2).then(|| (0..n).map(|v| mask >> v & 1 == 1).collect())
    })
}

/// Whether some nontrivial cut is tight.
pub fn has_nontrivial_tight_cut(g: &Small) -> bool {
    let pms = perfect_matchings(g);
    nontrivial_shores(g.n).any(|shore| {
        let cut: BTreeSet<Pair> = boundary(g, &shore).into_iter().collect();
        pms.iter().all(|m| m.iter().filter(|e| cut.contains(e)).count() == 1)
    })
}

/// Matching covered, non-bipartite and free of nontrivial tight cuts.
pub fn is_brick_by_definition(g: &Small) -> bool {
    is_matching_covered(g) && g.bipartition().is_none() && !has_nontrivial_tight_cut(g)
}

/// Matching covered, bipartite and free of nontrivial tight cuts.
pub fn is_brace_by_definition(g: &Small) -> bool {
    is_matching_covered(g) && g.bipartition().is_some() && !has_nontrivial_tight_cut(g)
}

/// Shores (containing vertex 0, both sides ≥ 2) whose boundary has exactly three edges.
pub fn nontrivial_three_cut_shores(g: &Small) -> Vec<Vec<usize>> {
    nontrivial_shores(g.n)
        .filter(|s| boundary(g, s).len() == 3)
        .map(|s| (0..g.n).filter(|&v| s[v]).collect())
        .collect()
}

/// No set of at most two vertices disconnects the graph (and n ≥ 4).
pub fn is_three_connected(g: &Small) -> bool {
    if g.n < 4 || !g.is_connected() {
        return false;
    }
    for a in 0..g.n {
        for b in a..g.n {
            let alive: Vec<bool> = (0..g.n).map(|v| v != a && v != b).collect();
            if g.components_within(&alive).len() > 1 {
                return false;
            }
        }
    }
    true
}

/// An explicit isomorphism `g → h` found by backtracking over bijections.
pub fn isomorphism(g: &Small, h: &Small) -> Option<Vec<usize>> {
    if g.n != h.n || g.edges.len() != h.edges.len() {
        return None;
    }
    let mut gd: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (0..h.n).map(|v| h.degree(v)).collect();
    let (gdv, hdv) = (gd.clone(), hd.clone());
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    fn rec(g: &Small, h: &Small, gdv: &[usize], hdv: &[usize], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.n {
            return true;
        }
        for w in 0..h.n {
            if used[w] || gdv[v] != hdv[w] {
                continue;
            }
            if (0..v).all(|u| g.adj[u][v] == h.adj[map[u]][w]) {
                used[w] = true;
                map.push(w);
                if rec(g, h, gdv, hdv, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut map = Vec::new();
    rec(g, h, &gdv, &hdv, &mut map, &mut vec![false; h.n]).then_some(map)
}
