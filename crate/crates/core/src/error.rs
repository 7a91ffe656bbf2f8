use thiserror::Error;

/// Errors raised by the graph toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("label {0:?} is used by more than one vertex")]
    DuplicateLabel(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("contraction would create a parallel edge at vertex {0}")]
    Multigraph(usize),
    #[error("{0}")]
    Domain(String),
    #[error("edge {0} lies in a perfect matching; no Dulmage-Mendelsohn witness exists")]
    WitnessNotApplicable(crate::graph::Edge),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error("catalog entry {name:?} has no bundled adjacency yet")]
    Untranscribed { name: String },
    #[error("catalog entry {name:?} failed validation: {reason}")]
    CatalogIntegrity { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
