//! Per-graph properties computed on first use and shared by every check.

use std::cell::OnceCell;

use mcov_core::constructors::named_graph;
use mcov_core::{
    canonical_form, classify_removable, edge_connectivity, enumerate_nontrivial_3cuts, is_bipartite, is_brace,
    is_brick, is_essentially_4ec, is_matching_covered, is_near_bipartite, is_two_edge_connected, maximum_matching,
    EdgeCut, Graph, RemovableClassification,
};

/// Catalog names of the cubic bricks excluded from the `|V|/7` bound.
pub const EXCEPTIONS: [&str; 3] = ["k4", "c6bar", "r8"];

pub struct Facts {
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
    canonical: OnceCell<String>,
    edge_connectivity: OnceCell<Option<usize>>,
    matching_covered: OnceCell<bool>,
    bipartite: OnceCell<bool>,
    brick: OnceCell<bool>,
    brace: OnceCell<bool>,
    near_bipartite: OnceCell<bool>,
    essentially_4ec: OnceCell<bool>,
    classification: OnceCell<Option<RemovableClassification>>,
    max_removable_matching: OnceCell<Option<usize>>,
    nontrivial_3cuts: OnceCell<Vec<EdgeCut>>,
}

impl Facts {
    pub fn new(line: usize, graph6: impl Into<String>, graph: Graph) -> Facts {
        Facts {
            line,
            graph6: graph6.into(),
            graph,
            canonical: OnceCell::new(),
            edge_connectivity: OnceCell::new(),
            matching_covered: OnceCell::new(),
            bipartite: OnceCell::new(),
            brick: OnceCell::new(),
            brace: OnceCell::new(),
            near_bipartite: OnceCell::new(),
            essentially_4ec: OnceCell::new(),
            classification: OnceCell::new(),
            max_removable_matching: OnceCell::new(),
            nontrivial_3cuts: OnceCell::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn cubic(&self) -> bool {
        self.graph.is_cubic()
    }

    pub fn connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn canonical(&self) -> &str {
        self.canonical.get_or_init(|| canonical_form(&self.graph))
    }

    /// `λ(G)` for connected graphs with at least two vertices.
    pub fn edge_connectivity(&self) -> Option<usize> {
        *self.edge_connectivity.get_or_init(|| edge_connectivity(&self.graph).ok())
    }

    pub fn two_edge_connected(&self) -> bool {
        if self.cubic() {
            // λ of a cubic graph is at most 3, so the cheap bridge test suffices
            is_two_edge_connected(&self.graph)
        } else {
            self.edge_connectivity().is_some_and(|l| l >= 2)
        }
    }

    pub fn three_edge_connected(&self) -> bool {
        self.two_edge_connected() && self.edge_connectivity().is_some_and(|l| l >= 3)
    }

    pub fn matching_covered(&self) -> bool {
        *self.matching_covered.get_or_init(|| is_matching_covered(&self.graph))
    }

    pub fn bipartite(&self) -> bool {
        *self.bipartite.get_or_init(|| is_bipartite(&self.graph).is_some())
    }

    pub fn brick(&self) -> bool {
        *self.brick.get_or_init(|| is_brick(&self.graph))
    }

    pub fn brace(&self) -> bool {
        *self.brace.get_or_init(|| is_brace(&self.graph))
    }

    pub fn near_bipartite(&self) -> bool {
        *self.near_bipartite.get_or_init(|| {
            self.matching_covered()
                && !self.bipartite()
                && is_near_bipartite(&self.graph).expect("preconditions checked above").is_some()
        })
    }

    /// Only cubic graphs qualify.
    pub fn essentially_4ec(&self) -> bool {
        *self.essentially_4ec.get_or_init(|| self.cubic() && is_essentially_4ec(&self.graph).unwrap_or(false))
    }

    /// Removable edges and doubletons; `None` unless matching covered.
    pub fn classification(&self) -> Option<&RemovableClassification> {
        self.classification
            .get_or_init(|| {
                self.matching_covered()
                    .then(|| classify_removable(&self.graph).expect("graph is matching covered"))
            })
            .as_ref()
    }

    pub fn max_removable_matching(&self) -> Option<usize> {
        *self.max_removable_matching.get_or_init(|| {
            self.classification().map(|c| removable_matching_size(&self.graph, &c.removable))
        })
    }

    /// Nontrivial 3-cuts of a connected cubic graph; empty otherwise.
    pub fn nontrivial_3cuts(&self) -> &[EdgeCut] {
        self.nontrivial_3cuts.get_or_init(|| {
            if self.cubic() && self.connected() {
                enumerate_nontrivial_3cuts(&self.graph).expect("graph is connected and cubic")
            } else {
                Vec::new()
            }
        })
    }

    /// The catalog name when the graph is one of [`EXCEPTIONS`].
    pub fn exception(&self) -> Option<&'static str> {
        if !self.cubic() || self.order() > 8 {
            return None;
        }
        exception_forms().iter().find(|(_, form)| form == self.canonical()).map(|(name, _)| *name)
    }
}

fn exception_forms() -> &'static [(&'static str, String)] {
    static FORMS: std::sync::OnceLock<Vec<(&'static str, String)>> = std::sync::OnceLock::new();
    FORMS.get_or_init(|| {
        EXCEPTIONS
            .iter()
            .map(|&name| (name, canonical_form(&named_graph(name).expect("exception graphs are bundled"))))
            .collect()
    })
}

/// Size of a maximum matching inside the spanning subgraph on `edges`.
pub(crate) fn removable_matching_size(g: &Graph, edges: &[mcov_core::Edge]) -> usize {
    let sub = Graph::new(g.order(), edges.iter().map(|e| e.ends())).expect("a subset of a simple edge set");
    maximum_matching(&sub).len()
}
