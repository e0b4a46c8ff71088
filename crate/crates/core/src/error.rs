use thiserror::Error;

/// Errors reported by the library. Precondition failures are distinct variants
/// so callers can tell "bad input" apart from "the hypothesis does not hold".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is out of range")]
    UnknownVertex(usize),
    #[error("edge {0} is out of range")]
    UnknownEdge(usize),
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("the null graph is not accepted here")]
    NullGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a forest")]
    NotForest,
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("edge set is not a matching")]
    NotMatching,
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not {0}-tree-connected")]
    NotTreeConnected(usize),
    #[error("host subgraph is not {0}-tree-connected")]
    HostNotTreeConnected(usize),
    #[error("edge {0} does not join different tree-connected components of H minus M")]
    EdgeNotCrossing(usize),
    #[error("edge {0} already belongs to the subgraph")]
    EdgeInSubgraph(usize),
    #[error("removal set is empty")]
    EmptyRemovalSet,
    #[error("odd number of prescribed odd-degree vertices")]
    OddParitySet,
    #[error("enumeration cap exceeded: {size} > {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not Eulerian: {0}")]
    NotEulerian(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
