use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("graph of order {n} exceeds the supported limit of {limit} for {what}")]
    Capability {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is empty")]
    EmptyGraph,

    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(usize, usize),

    #[error("graph is not {0}-regular")]
    NotRegular(usize),

    #[error("vertex set {0:?} is not a block of the graph")]
    NotABlock(Vec<usize>),

    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),

    #[error("illegal graph type {0}")]
    IllegalType(String),
}

pub type Result<T> = std::result::Result<T, Error>;
