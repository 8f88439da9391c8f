use thiserror::Error;

/// Errors produced by graph construction, solvers, generators and the parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge id {edge} out of range for a graph with {size} edges")]
    EdgeOutOfRange { edge: usize, size: usize },
    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),
    #[error("cartesian product requires non-empty factors")]
    EmptyFactor,
    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily { family: &'static str, reason: String },
    #[error(
        "exact search budget exhausted after {tests} coverage tests \
         on a component of {component_order} vertices"
    )]
    BudgetExceeded { component_order: usize, tests: u64 },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
