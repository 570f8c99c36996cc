use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} but loops are not allowed")]
    ForbiddenLoop(usize),
    #[error("operation requires a loop-free graph")]
    LoopsPresent,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("label mismatch at vertex {0}")]
    LabelMismatch(usize),
    #[error("duplicate label at vertex {0}")]
    DuplicateLabel(usize),
    #[error("label list has length {got}, expected {expected}")]
    LabelCount { got: usize, expected: usize },
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("coloring is partial: vertex {0} has no color")]
    PartialColoring(usize),
    #[error("improper assembly: edge {0}-{1} is monochromatic")]
    ImproperAssembly(usize, usize),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
