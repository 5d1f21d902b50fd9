use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {order} exceeds the supported maximum of {max} for {what}")]
    OrderTooLarge {
        what: &'static str,
        order: usize,
        max: usize,
    },

    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("colouring does not match graph: {0}")]
    ColouringMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid sweep spec: {0}")]
    InvalidSweep(String),
}

pub type Result<T> = std::result::Result<T, Error>;
