//! Lower bounds on removable matchings and counts of removable classes.

use mcov_core::constructors::{staircase, staircase_rungs};
use mcov_core::Graph;

use super::{Check, Outcome};
use crate::facts::Facts;

pub struct MainBound;

impl Check for MainBound {
    fn id(&self) -> &'static str {
        "thm-main"
    }

    fn statement(&self) -> &'static str {
        "every cubic brick other than K4, the complement of C6 and R8 has a removable matching of size at least n/7"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.brick() {
            return Outcome::out_of_scope();
        }
        if let Some(name) = f.exception() {
            let mut out = Outcome::out_of_scope();
            out.tally(match name {
                "k4" => "excluded_k4",
                "c6bar" => "excluded_c6bar",
                _ => "excluded_r8",
            });
            return out;
        }
        let mut out = Outcome::in_scope();
        let n = f.order();
        let m = f.max_removable_matching().expect("bricks are matching covered");
        if 7 * m < n {
            out.violation(format!("largest removable matching has {m} edges, below n/7 for n = {n}"));
        } else if 7 * m < n + 7 {
            // m = ⌈n/7⌉: the bound is attained
            out.tally("attains_bound");
            out.list();
        }
        out
    }
}

pub struct NearBipartiteBound;

impl Check for NearBipartiteBound {
    fn id(&self) -> &'static str {
        "thm-con"
    }

    fn statement(&self) -> &'static str {
        "every 3-edge-connected near-bipartite cubic graph other than K4 has a removable matching of size at least n/2 - 3"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || f.order() == 4 || !f.three_edge_connected() || !f.near_bipartite() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        out.tally(if f.brick() { "bricks" } else { "non_bricks" });
        let n = f.order();
        let m = f.max_removable_matching().expect("near-bipartite graphs are matching covered");
        if 2 * m + 6 < n {
            out.violation(format!("largest removable matching has {m} edges, below n/2 - 3 for n = {n}"));
        } else if 2 * m + 6 < n + 2 {
            out.tally("attains_bound");
            out.list();
        }
        out
    }
}

/// Largest order a cubic brick with exactly three removable classes may have.
const THREE_CLASS_MAX_ORDER: usize = 16;

pub struct ThreeClasses;

impl Check for ThreeClasses {
    fn id(&self) -> &'static str {
        "prop-three-classes"
    }

    fn statement(&self) -> &'static str {
        "cubic bricks with exactly three removable classes number nine in total and have at most 16 vertices; members are listed"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.brick() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let classes = f.classification().expect("bricks are matching covered").class_count();
        if classes == 3 {
            out.tally("three_classes");
            out.list();
            if f.order() > THREE_CLASS_MAX_ORDER {
                out.violation(format!("three removable classes on {} vertices", f.order()));
            }
        }
        out
    }
}

/// Staircases checked by [`StaircaseRungs`].
pub const STAIRCASE_RANGE: std::ops::RangeInclusive<usize> = 1..=8;

pub struct StaircaseRungs;

impl Check for StaircaseRungs {
    fn id(&self) -> &'static str {
        "prop-3con"
    }

    fn statement(&self) -> &'static str {
        "the removable edges of the staircase S_k (k = 1..8) are exactly its k rungs u_i v_i"
    }

    fn fixed_inputs(&self) -> Option<Vec<Graph>> {
        Some(STAIRCASE_RANGE.map(|k| staircase(k).expect("k ≥ 1")).collect())
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        let n = f.order();
        if n < 8 || n % 2 == 1 {
            return Outcome::out_of_scope();
        }
        let k = (n - 6) / 2;
        let reference = staircase(k).expect("k ≥ 1");
        if reference.edges() != f.graph.edges() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let removable = &f.classification().expect("staircases are matching covered").removable;
        let rungs = staircase_rungs(k);
        if *removable != rungs {
            let show = |es: &[mcov_core::Edge]| es.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            out.violation(format!("removable edges [{}] differ from the rungs [{}]", show(removable), show(&rungs)));
        }
        out
    }
}
