//! Removability in 2-edge-connected, bipartite and essentially
//! 4-edge-connected cubic graphs, and mutual dependence in bricks.

use mcov_core::connectivity::lies_in_two_cut;
use mcov_core::{doubleton_decomposition, is_bipartite, mutually_dependent_pairs, perfect_matching_with, Edge};

use super::{Check, Outcome};
use crate::facts::Facts;

fn show(es: &[Edge]) -> String {
    es.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub struct TwoEdgeConnectedCovered;

impl Check for TwoEdgeConnectedCovered {
    fn id(&self) -> &'static str {
        "lem-2e"
    }

    fn statement(&self) -> &'static str {
        "every 2-edge-connected cubic graph is matching covered"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.two_edge_connected() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        if !f.matching_covered() {
            out.violation("not matching covered");
        }
        out
    }
}

pub struct BipartiteRemovable;

impl Check for BipartiteRemovable {
    fn id(&self) -> &'static str {
        "cor-bip"
    }

    fn statement(&self) -> &'static str {
        "in a connected cubic bipartite graph every edge is removable or lies in a 2-cut; with 3-edge-connectivity every edge is removable"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.connected() || !f.bipartite() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let Some(c) = f.classification() else {
            out.violation("not matching covered");
            return out;
        };
        let stuck: Vec<Edge> = f
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !c.removable.contains(e) && !lies_in_two_cut(&f.graph, *e))
            .collect();
        if !stuck.is_empty() {
            out.violation(format!("edges neither removable nor in a 2-cut: {}", show(&stuck)));
        }
        if f.three_edge_connected() {
            out.tally("three_edge_connected");
            if c.removable.len() != f.graph.size() {
                out.violation(format!("3-edge-connected but non-removable edges remain: {}", show(&c.neither)));
            }
        }
        out
    }
}

fn essentially_4ec_brick(f: &Facts) -> bool {
    f.cubic() && f.essentially_4ec() && f.brick()
}

pub struct Essentially4ecClasses;

impl Check for Essentially4ecClasses {
    fn id(&self) -> &'static str {
        "thm-4ecr"
    }

    fn statement(&self) -> &'static str {
        "in an essentially 4-edge-connected cubic brick every edge is removable or lies in a removable doubleton"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !essentially_4ec_brick(f) {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let c = f.classification().expect("bricks are matching covered");
        if !c.neither.is_empty() {
            out.violation(format!("edges in no removable class: {}", show(&c.neither)));
        }
        if !c.doubletons.is_empty() {
            out.tally("with_doubletons");
        }
        if c.has_overlapping_doubletons() {
            out.tally("overlapping_doubletons");
            out.list();
        }
        out
    }
}

pub struct Essentially4ecPerfectMatching;

impl Check for Essentially4ecPerfectMatching {
    fn id(&self) -> &'static str {
        "cor-4ecr"
    }

    fn statement(&self) -> &'static str {
        "an essentially 4-edge-connected cubic graph other than K4 has a perfect matching of removable edges"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || f.order() == 4 || !f.essentially_4ec() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        out.tally(if f.brick() { "bricks" } else { "non_bricks" });
        match f.max_removable_matching() {
            None => out.violation("not matching covered"),
            Some(m) if 2 * m < f.order() => {
                out.violation(format!("largest removable matching has {m} edges, short of a perfect matching"))
            }
            Some(_) => {}
        }
        out
    }
}

pub struct DoubletonFreeMatching;

impl Check for DoubletonFreeMatching {
    fn id(&self) -> &'static str {
        "prop-4econ-ii"
    }

    fn statement(&self) -> &'static str {
        "an essentially 4-edge-connected cubic brick other than K4 with removable doubletons has a perfect matching avoiding every doubleton edge; with two or more doubletons it splits into a cycle of balanced bipartite pieces"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !essentially_4ec_brick(f) || f.order() == 4 {
            return Outcome::out_of_scope();
        }
        let c = f.classification().expect("bricks are matching covered");
        if c.doubletons.is_empty() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let e0: Vec<Edge> = c.doubleton_edges().into_iter().collect();
        match perfect_matching_with(&f.graph, &[], &e0) {
            Ok(Some(_)) => {}
            Ok(None) => out.violation("every perfect matching uses a doubleton edge"),
            Err(e) => out.violation(format!("matching query failed: {e}")),
        }
        if c.doubletons.len() >= 2 {
            match doubleton_decomposition(&f.graph) {
                Ok(_) => out.tally("decomposed"),
                Err(e) => out.violation(format!("doubleton decomposition failed: {e}")),
            }
        }
        out
    }
}

pub struct MutualDependence;

impl Check for MutualDependence {
    fn id(&self) -> &'static str {
        "thm-lo"
    }

    fn statement(&self) -> &'static str {
        "in a cubic brick, deleting two mutually dependent edges leaves a bipartite graph"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.brick() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let pairs = mutually_dependent_pairs(&f.graph).expect("bricks are matching covered");
        out.add("pairs", pairs.len() as u64);
        for (e, g) in pairs {
            if is_bipartite(&f.graph.without_edges(&[e, g])).is_none() {
                out.violation(format!("G - {{{e}, {g}}} is not bipartite"));
            }
        }
        out
    }
}
