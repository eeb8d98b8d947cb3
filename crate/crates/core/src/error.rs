use thiserror::Error;

use crate::graph::VertexRef;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a host needs at least 3 parts, got {0}")]
    TooFewParts(usize),

    #[error("part sizes must be positive, got {0:?}")]
    EmptyPart(Vec<usize>),

    #[error("part sizes must be non-increasing: got {given:?}, expected {sorted:?}")]
    Unsorted { given: Vec<usize>, sorted: Vec<usize> },

    #[error("vertex {0} does not exist in this host")]
    NoSuchVertex(VertexRef),

    #[error("edge {0}-{1} joins two vertices of the same part")]
    IntraPartEdge(VertexRef, VertexRef),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} is {required}, above the cap of {cap}; raise the cap to at least {required}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        required: usize,
    },

    #[error("operation requires exactly 3 parts, got {0}")]
    NotTripartite(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for refusals caused by a size cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
