//! 3-cuts: separating and tight cuts, crossing, and removability inside a shore.

use mcov_core::constructors::named_graph;
use mcov_core::{
    allowed_edges, classify_cut, contract, cuts_cross, enumerate_3cuts, induced_subgraph, is_bipartite,
    is_isomorphic, is_matching_covered, perfect_matching_with, Edge, Graph, VertexSet,
};

use super::{Check, Outcome};
use crate::facts::{removable_matching_size, Facts};

pub struct ThreeCutsSeparating;

impl Check for ThreeCutsSeparating {
    fn id(&self) -> &'static str {
        "prop-3cut-sep"
    }

    fn statement(&self) -> &'static str {
        "every 3-cut of a 2-edge-connected cubic graph is separating"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.two_edge_connected() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let g = &f.graph;
        for cut in enumerate_3cuts(g).expect("graph is connected and cubic") {
            let x = cut.shore;
            let separating = match classify_cut(g, x) {
                Ok(c) => c.separating,
                Err(e) => {
                    out.violation(format!("cut {x}: {e}"));
                    continue;
                }
            };
            if !separating {
                out.violation(format!("3-cut with shore {x} is not separating"));
            }
            // second route through the two contractions, when both are simple
            let far = x.complement(g.order());
            if let (Ok(a), Ok(b)) = (contract(g, x), contract(g, far)) {
                out.tally("contraction_route");
                if (is_matching_covered(&a) && is_matching_covered(&b)) != separating {
                    out.violation(format!("cut {x}: perfect-matching and contraction routes disagree"));
                }
            }
        }
        out
    }
}

pub struct TightIffBipartiteContraction;

impl Check for TightIffBipartiteContraction {
    fn id(&self) -> &'static str {
        "cor-tc"
    }

    fn statement(&self) -> &'static str {
        "a nontrivial 3-cut of a 3-edge-connected near-bipartite cubic graph is tight exactly when one of its contractions is bipartite"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.three_edge_connected() || !f.near_bipartite() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let g = &f.graph;
        for cut in f.nontrivial_3cuts() {
            out.tally("cuts");
            let x = cut.shore;
            let tight = classify_cut(g, x).expect("graph is matching covered").tight;
            let (a, b) = match (contract(g, x), contract(g, x.complement(g.order()))) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    out.violation(format!("cut {x}: a contraction is not simple"));
                    continue;
                }
            };
            let bipartite = is_bipartite(&a).is_some() || is_bipartite(&b).is_some();
            if tight {
                out.tally("tight_cuts");
            }
            if tight != bipartite {
                out.violation(format!("cut {x}: tight = {tight} but a contraction is bipartite = {bipartite}"));
            }
        }
        out
    }
}

pub struct NoCrossing;

impl Check for NoCrossing {
    fn id(&self) -> &'static str {
        "prop-nocross"
    }

    fn statement(&self) -> &'static str {
        "no two 3-cuts of a cubic brick cross"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.brick() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let g = &f.graph;
        let cuts = enumerate_3cuts(g).expect("bricks are connected");
        for (i, c) in cuts.iter().enumerate() {
            for d in &cuts[i + 1..] {
                if cuts_cross(g, c.shore, d.shore).expect("shores are proper") {
                    out.violation(format!("3-cuts with shores {} and {} cross", c.shore, d.shore));
                }
            }
        }
        out
    }
}

/// Edges of `G[X̄]` that depend on the cut edge `c`, i.e. lie in no perfect
/// matching of `G − c`.
fn dependents_within(g: &Graph, c: Edge, far: VertexSet) -> Vec<Edge> {
    let rest = g.without_edges(&[c]);
    let allowed = allowed_edges(&rest).unwrap_or_default();
    g.edges_within(far).into_iter().filter(|e| !allowed.contains(e)).collect()
}

/// Whether `G[set] − removed` has a perfect matching, containing `forced` when given.
fn pm_inside(g: &Graph, set: VertexSet, removed: Edge, forced: Option<Edge>) -> bool {
    let index: Vec<usize> = {
        let mut idx = vec![usize::MAX; g.order()];
        for (i, v) in set.iter().enumerate() {
            idx[v] = i;
        }
        idx
    };
    let sub = induced_subgraph(&g.without_edges(&[removed]), set).expect("set is a vertex subset");
    let forced: Vec<Edge> = forced.into_iter().map(|e| Edge::new(index[e.u()], index[e.v()])).collect();
    matches!(perfect_matching_with(&sub, &forced, &[]), Ok(Some(_)))
}

/// Whether `G − e0` has a matching that contains `e` and covers every vertex
/// of the shore `x`. With `exactly_once` the matching meets the boundary
/// `cut` in a single edge. Tries each admissible set of cut edges in turn.
fn covers_shore(g: &Graph, x: VertexSet, cut: &[Edge], e0: Edge, e: Edge, exactly_once: bool) -> bool {
    let inside = |c: Edge| if x.contains(c.u()) { c.u() } else { c.v() };
    let outside = |c: Edge| if x.contains(c.u()) { c.v() } else { c.u() };
    let e_is_cut = cut.contains(&e);
    for subset in 0u32..(1 << cut.len()) {
        let used: Vec<Edge> = (0..cut.len()).filter(|&i| subset >> i & 1 == 1).map(|i| cut[i]).collect();
        if e_is_cut && !used.contains(&e) {
            continue;
        }
        if exactly_once && used.len() != 1 {
            continue;
        }
        let mut ins = VertexSet::EMPTY;
        let mut outs = VertexSet::EMPTY;
        let mut disjoint = true;
        for &c in &used {
            disjoint &= !ins.contains(inside(c)) && !outs.contains(outside(c));
            ins.insert(inside(c));
            outs.insert(outside(c));
        }
        if !disjoint {
            continue;
        }
        let forced = (!e_is_cut).then_some(e);
        if forced.is_some_and(|e| ins.contains(e.u()) || ins.contains(e.v())) {
            continue;
        }
        if pm_inside(g, x.difference(ins), e0, forced) {
            return true;
        }
    }
    false
}

pub struct EasyRemovability;

impl Check for EasyRemovability {
    fn id(&self) -> &'static str {
        "prop-easy"
    }

    fn statement(&self) -> &'static str {
        "for a good 3-cut C = ∂(X), an edge e0 inside X and a cut edge e1 no edge beyond X depends on: if G - e0 has, for each other edge e of C and G[X], a matching through e covering X (meeting C only in e when e ≠ e1 is a cut edge), then e0 is removable"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.matching_covered() || f.nontrivial_3cuts().is_empty() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let g = &f.graph;
        let n = g.order();
        let removable = &f.classification().expect("graph is matching covered").removable;
        for cut in f.nontrivial_3cuts() {
            if !classify_cut(g, cut.shore).expect("graph is matching covered").good {
                continue;
            }
            out.tally("good_cuts");
            for x in [cut.shore, cut.shore.complement(n)] {
                let far = x.complement(n);
                let boundary = &cut.boundary;
                let e1_candidates: Vec<Edge> =
                    boundary.iter().copied().filter(|&c| dependents_within(g, c, far).is_empty()).collect();
                if e1_candidates.is_empty() {
                    continue;
                }
                let inner = g.edges_within(x);
                for &e0 in &inner {
                    let inner_ok =
                        inner.iter().filter(|&&e| e != e0).all(|&e| covers_shore(g, x, boundary, e0, e, false));
                    if !inner_ok {
                        continue;
                    }
                    let any: Vec<bool> = boundary.iter().map(|&c| covers_shore(g, x, boundary, e0, c, false)).collect();
                    let once: Vec<bool> = boundary.iter().map(|&c| covers_shore(g, x, boundary, e0, c, true)).collect();
                    for &e1 in &e1_candidates {
                        let holds = boundary
                            .iter()
                            .enumerate()
                            .all(|(i, &c)| if c == e1 { any[i] } else { once[i] });
                        if !holds {
                            continue;
                        }
                        out.tally("hypothesis_instances");
                        if !removable.contains(&e0) {
                            out.violation(format!(
                                "shore {x}, e0 = {e0}, e1 = {e1}: hypothesis holds but e0 is not removable"
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

pub struct ShoreMatchingBounds;

impl Check for ShoreMatchingBounds {
    fn id(&self) -> &'static str {
        "prop-ne"
    }

    fn statement(&self) -> &'static str {
        "in a cubic brick, a shore inducing G1* holds a removable matching of size 2 (4 when all three cut edges are free of dependants beyond the shore); a shore inducing G2* holds one of size 1 (2 when at least two are)"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.brick() || f.nontrivial_3cuts().is_empty() {
            return Outcome::out_of_scope();
        }
        let (g1, g2) = shore_patterns();
        let mut out = Outcome::in_scope();
        let g = &f.graph;
        let n = g.order();
        let removable = &f.classification().expect("bricks are matching covered").removable;
        for cut in f.nontrivial_3cuts() {
            for x in [cut.shore, cut.shore.complement(n)] {
                let pattern = match x.len() {
                    11 => (g1, "G1*", [2, 2, 2, 4]),
                    5 => (g2, "G2*", [1, 1, 2, 2]),
                    _ => continue,
                };
                let ((shore_graph, name, bounds), sub) = (pattern, induced_subgraph(g, x).expect("x ⊆ V"));
                if !is_isomorphic(&sub, shore_graph) {
                    continue;
                }
                out.tally(if name == "G1*" { "g1_shores" } else { "g2_shores" });
                let far = x.complement(n);
                let e1 = cut.boundary.iter().filter(|&&c| dependents_within(g, c, far).is_empty()).count();
                let inside: Vec<Edge> = removable.iter().copied().filter(|e| x.contains(e.u()) && x.contains(e.v())).collect();
                let m = removable_matching_size(g, &inside);
                let need = bounds[e1];
                if m < need {
                    out.violation(format!(
                        "shore {x} induces {name} with |E1| = {e1}: removable matching inside has {m} edges, needs {need}"
                    ));
                }
            }
        }
        out
    }
}

fn shore_patterns() -> (&'static Graph, &'static Graph) {
    static PATTERNS: std::sync::OnceLock<(Graph, Graph)> = std::sync::OnceLock::new();
    let (a, b) = PATTERNS.get_or_init(|| {
        let g1 = named_graph("g1star").expect("G1* is bundled");
        let g2 = named_graph("g2star").expect("G2* is bundled");
        (g1, g2)
    });
    (a, b)
}
