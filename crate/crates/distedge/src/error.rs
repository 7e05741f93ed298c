use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("loop ({u}, {u}) rejected: loops are not allowed")]
    Loop { u: usize },
    #[error("parallel edge ({u}, {v}) rejected: the pair already exists")]
    ParallelEdge { u: usize, v: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge id {id} out of range for a graph with {m} edges")]
    EdgeOutOfRange { id: usize, m: usize },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("edge {edge} has no colour assigned")]
    MissingColour { edge: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
