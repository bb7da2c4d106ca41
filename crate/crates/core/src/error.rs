use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{requested} vertices exceed the capacity of {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },

    #[error("invalid order {0}")]
    InvalidOrder(usize),

    #[error("invalid adjacency rows: {0}")]
    InvalidRows(String),

    #[error("induced subgraph requested on an empty vertex set")]
    EmptyVertexSet,

    #[error("not a permutation of the vertex set")]
    InvalidPermutation,

    #[error("order {0} is a long run; opt in explicitly")]
    LongRunRequired(usize),

    #[error("invalid target size k={0}")]
    InvalidTarget(usize),

    #[error("invalid graph6 code: {0}")]
    Graph6(#[from] crate::codec::Graph6Error),

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: graph on {found} vertices in a stream of order {expected}")]
    MixedOrders {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("{code} has an LC-orbit member with an independent set of size {k}")]
    WitnessExists { code: String, k: usize },

    #[error("orbit search hit its budget of {0} before the orbit was exhausted")]
    BudgetExceeded(usize),

    #[error("malformed certificate: {0}")]
    CertificateFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
