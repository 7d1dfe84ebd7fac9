use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("operation undefined on the null graph")]
    NullGraph,

    /// An exponential routine refused to run past its configured limit.
    #[error("cap exceeded: {what} is {actual}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        cap: u64,
        actual: u64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// No finite value exists (for instance every single vertex already
    /// violates `f <= p`).
    #[error("no finite value: {0}")]
    Unbounded(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, cap: u64, actual: u64) -> Self {
        Error::CapExceeded { what, cap, actual }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
