use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge list not canonical: {0}")]
    NotCanonical(String),
    #[error("unknown generator kind `{0}`")]
    UnknownKind(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{what} too large for exact solver: {size} exceeds budget {budget}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        budget: usize,
    },
    #[error("improper colouring: edge ({0}, {1}) is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("invalid order family: {0}")]
    InvalidOrders(String),
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("edges {0} and {1} do not share exactly one endpoint")]
    NotAdjacent(usize, usize),
    #[error("certificate rejected: {0}")]
    Rejected(String),
    #[error("base graph is not triangle-free")]
    NotTriangleFree,
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn budget(what: &'static str, size: usize, budget: usize) -> Self {
        Error::BudgetExceeded { what, size, budget }
    }
}
