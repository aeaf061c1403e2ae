use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("vertex `{0}` appears twice in one cut member")]
    DuplicateMemberVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have at least two vertices")]
    TooFewVertices,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("arithmetic overflow computing t_{{{level},n}}")]
    Overflow { level: u32 },
    #[error("instance needs {required} vertices but the build budget is {budget}")]
    BudgetExceeded { required: u128, budget: usize },
    #[error("no construction: {0}")]
    NoConstruction(String),
    #[error("malformed label `{0}`")]
    BadLabel(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
