use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("labels are not a bijection onto 1..={order}: {msg}")]
    NotBijective { order: usize, msg: String },

    #[error("labeling covers {got} vertices but the graph has order {expected}")]
    OrderMismatch { expected: usize, got: usize },

    #[error("invalid rectangle parameters: {0}")]
    InvalidRectangle(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("not covered by an implemented construction: {0}")]
    NotCovered(String),

    #[error("self-verification failed: {0}")]
    SelfCheck(String),

    #[error("graph order {order} exceeds the search cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("vertex {0} is isolated; minimum color counts are defined over graphs without isolated vertices")]
    IsolatedVertex(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
