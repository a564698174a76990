use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) out of range for order {n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop ({v}, {v}) rejected")]
    SelfLoop { v: usize },

    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("input graph is not a tree")]
    NotATree,

    #[error("order {n} exceeds the exact-counter guard of {limit}")]
    OrderGuard { n: usize, limit: usize },

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("{0}")]
    InvalidParam(String),

    /// A violated internal invariant. Reaching this is a bug in the
    /// library, never a consequence of bad input.
    #[error("defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
