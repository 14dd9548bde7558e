use thiserror::Error;

/// Errors produced by graph construction, parsing, solving and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph spec `{0}`")]
    MalformedSpec(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("diameter undefined for a disconnected graph")]
    DiameterUndefined,

    #[error("graph of order {0} is too small (order >= 2 required)")]
    OrderTooSmall(usize),

    #[error("graph of order {order} exceeds the solver limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction produced a non-resolving partition: {0}")]
    VerificationFailed(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
