use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("loop at vertex {0} is not allowed")]
    LoopForbidden(usize),

    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("cut side must be a non-empty proper subset of the vertices")]
    EmptySide,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph6 can only encode graphs without parallel edges")]
    SimpleOnly,

    #[error("vertices {0} and {1} are adjacent")]
    AdjacentVertices(usize, usize),

    #[error("node budget exhausted after {0} search nodes")]
    BudgetExceeded(u64),

    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),

    #[error("bay vertices below degree {required}: {vertices:?}")]
    NotFull { required: usize, vertices: Vec<usize> },

    #[error("pod {0} attaches to more than one bay")]
    CrossBayAttachment(usize),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
