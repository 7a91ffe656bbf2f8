//! Bundled named graphs, described by `catalog/manifest.toml`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::structure::{classify_removable, is_matching_covered};

const MANIFEST: &str = include_str!("../../catalog/manifest.toml");

const FILES: &[(&str, &str)] = &[
    ("k4.g6", include_str!("../../catalog/k4.g6")),
    ("c6bar.g6", include_str!("../../catalog/c6bar.g6")),
    ("r8.g6", include_str!("../../catalog/r8.g6")),
    ("g0star.g6", include_str!("../../catalog/g0star.g6")),
    ("g1star.g6", include_str!("../../catalog/g1star.g6")),
    ("g2star.g6", include_str!("../../catalog/g2star.g6")),
    ("g3star.g6", include_str!("../../catalog/g3star.g6")),
    ("g4star.g6", include_str!("../../catalog/g4star.g6")),
];

#[derive(Deserialize)]
struct Manifest {
    entry: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    file: Option<String>,
    provenance: String,
    order: usize,
    degrees: BTreeMap<String, usize>,
    removable_edges: Option<usize>,
    removable_classes: Option<usize>,
    #[serde(default)]
    ports: Vec<usize>,
}

/// One named graph and the invariants it was checked against.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub provenance: String,
    pub order: usize,
    /// degree → number of vertices of that degree
    pub degrees: BTreeMap<usize, usize>,
    pub removable_edges: Option<usize>,
    pub removable_classes: Option<usize>,
    /// Degree-2 attachment vertices of shore graphs; labelled `port0`, `port1`, ...
    pub ports: Vec<usize>,
    #[serde(skip)]
    graph: Option<Graph>,
}

impl CatalogEntry {
    /// The bundled adjacency, or [`Error::Untranscribed`] when only invariants are known.
    pub fn graph(&self) -> Result<&Graph> {
        self.graph.as_ref().ok_or_else(|| Error::Untranscribed { name: self.name.clone() })
    }

    pub fn is_transcribed(&self) -> bool {
        self.graph.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
    }
}

/// The validated catalog, loaded once.
pub fn catalog() -> Result<&'static Catalog> {
    static CATALOG: OnceLock<Result<Catalog>> = OnceLock::new();
    CATALOG.get_or_init(load).as_ref().map_err(Clone::clone)
}

pub fn named_graph(name: &str) -> Result<Graph> {
    catalog()?.get(name)?.graph().cloned()
}

fn integrity(name: &str, reason: impl Into<String>) -> Error {
    Error::CatalogIntegrity { name: name.to_string(), reason: reason.into() }
}

fn load() -> Result<Catalog> {
    let manifest: Manifest =
        toml::from_str(MANIFEST).map_err(|e| integrity("manifest", e.to_string()))?;
    let mut entries = Vec::new();
    for raw in manifest.entry {
        let name = raw.name.as_str();
        let mut degrees = BTreeMap::new();
        for (d, c) in &raw.degrees {
            let d: usize = d.parse().map_err(|_| integrity(name, format!("degree key {d:?} is not a number")))?;
            degrees.insert(d, *c);
        }
        if degrees.values().sum::<usize>() != raw.order {
            return Err(integrity(name, "degree profile does not add up to the order"));
        }
        let graph = match &raw.file {
            None => None,
            Some(file) => {
                let text = FILES
                    .iter()
                    .find(|(f, _)| f == file)
                    .map(|(_, t)| t.trim())
                    .ok_or_else(|| integrity(name, format!("data file {file} is not bundled")))?;
                let g = parse_graph6(text).map_err(|e| integrity(name, e.to_string()))?;
                Some(validate(&raw, &degrees, g)?)
            }
        };
        entries.push(CatalogEntry {
            name: raw.name,
            provenance: raw.provenance,
            order: raw.order,
            degrees,
            removable_edges: raw.removable_edges,
            removable_classes: raw.removable_classes,
            ports: raw.ports,
            graph,
        });
    }
    Ok(Catalog { entries })
}

fn validate(raw: &RawEntry, degrees: &BTreeMap<usize, usize>, g: Graph) -> Result<Graph> {
    let name = raw.name.as_str();
    if g.order() != raw.order {
        return Err(integrity(name, format!("order {} differs from the expected {}", g.order(), raw.order)));
    }
    let mut actual = BTreeMap::new();
    for v in g.vertices() {
        *actual.entry(g.degree(v)).or_insert(0usize) += 1;
    }
    if &actual != degrees {
        return Err(integrity(name, format!("degree profile {actual:?} differs from the expected {degrees:?}")));
    }
    for &p in &raw.ports {
        if p >= g.order() || g.degree(p) != 2 {
            return Err(integrity(name, format!("port {p} is not a degree-2 vertex")));
        }
    }
    if raw.removable_edges.is_some() || raw.removable_classes.is_some() {
        if !is_matching_covered(&g) {
            return Err(integrity(name, "expected a matching covered graph"));
        }
        let c = classify_removable(&g)?;
        if let Some(r) = raw.removable_edges {
            if c.removable.len() != r {
                return Err(integrity(name, format!("{} removable edges, expected {r}", c.removable.len())));
            }
        }
        if let Some(k) = raw.removable_classes {
            if c.class_count() != k {
                return Err(integrity(name, format!("{} removable classes, expected {k}", c.class_count())));
            }
        }
    }
    g.with_labels(raw.ports.iter().enumerate().map(|(i, &p)| (p, format!("port{i}"))))
}
