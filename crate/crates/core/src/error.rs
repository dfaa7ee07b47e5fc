//! Error type shared across the library.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path} at line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("node index {index} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { index: usize, node_count: usize },

    #[error("partition coverage error: {0}")]
    PartitionCoverage(String),

    #[error("graph has no edges; {0} is undefined")]
    EdgelessGraph(&'static str),

    #[error("graph is disconnected; {0} requires a connected graph")]
    Disconnected(&'static str),

    #[error("node `{0}` is isolated (degree 0)")]
    IsolatedNode(String),

    #[error("removing node `{0}` empties the edge set")]
    EmptiesEdgeSet(String),

    #[error("katz attenuation {s} >= 1/lambda_max ~ {limit}; series diverges")]
    KatzDivergence { s: f64, limit: f64 },

    #[error("{what} did not converge after {iterations} iterations (residual {residual})")]
    NonConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("graph has {node_count} nodes, above the {cap}-node cap for {what}; raise the cap or use a series fallback")]
    NodeCapExceeded {
        what: &'static str,
        node_count: usize,
        cap: usize,
    },

    #[error("eigendecomposition failed")]
    EigenFailure,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{0} requires a non-constant input vector")]
    ConstantInput(&'static str),

    #[error("{what} needs at least {min} values, got {got}")]
    InsufficientData {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty corpus: no edge-list files found in {0}")]
    EmptyCorpus(PathBuf),

    #[error("no partition file for network `{0}` in partitions directory")]
    MissingPartitionFile(String),

    #[error("network `{id}` failed: {source}")]
    Network {
        id: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn for_network(self, id: &str) -> Self {
        Error::Network {
            id: id.to_string(),
            source: Box::new(self),
        }
    }
}
