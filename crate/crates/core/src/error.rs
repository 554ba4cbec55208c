use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("operation undefined on the null graph")]
    EmptyGraph,
    #[error("{family} needs at least {min} vertices, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph has {n} vertices, over the budget of {budget}")]
    TooLarge { n: usize, budget: usize },
    #[error("mincut enumeration on {n} vertices exceeds the budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("the two cuts are identical")]
    IdenticalCuts,
    #[error("the two cuts do not cross")]
    NotCrossing,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid ensemble: {0}")]
    InvalidSpec(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
