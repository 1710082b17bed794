use std::fmt;

use thiserror::Error;

/// A cut of size at most two that witnesses a graph is not 3-edge-connected.
///
/// Edge ids refer to the graph the check was run on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallCut {
    /// The graph is disconnected; `vertex` cannot be reached from the DFS root.
    Disconnected {
        vertex: usize,
    },
    Bridge {
        edge: usize,
    },
    TwoCut {
        edges: [usize; 2],
    },
}

impl fmt::Display for SmallCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallCut::Disconnected { vertex } => {
                write!(f, "graph is disconnected (vertex {vertex} unreachable)")
            }
            SmallCut::Bridge { edge } => write!(f, "edge {edge} is a bridge"),
            SmallCut::TwoCut { edges: [a, b] } => write!(f, "edges {{{a}, {b}}} form a 2-cut"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("edge {edge}: endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { edge: usize, vertex: usize, n: usize },

    #[error("edge {edge}: self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },

    #[error("graph is disconnected: vertex {0} is not reachable from the root")]
    Disconnected(usize),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is not 2-edge-connected: {0}")]
    NotTwoEdgeConnected(SmallCut),

    #[error("graph is not 3-edge-connected: {0}")]
    NotThreeEdgeConnected(SmallCut),

    #[error("{what} = {value} exceeds the oracle size guard of {limit}")]
    SizeGuard { what: &'static str, value: usize, limit: usize },

    #[error("generator gave up after {0} attempts")]
    RetryExhausted(usize),

    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
