use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("unknown builtin presentation `{0}`")]
    UnknownBuiltin(String),
    #[error("no occurrence of the {side} side at position {position}")]
    NotApplicable { side: &'static str, position: usize },
    #[error("symbol {0} is outside the alphabet")]
    WrongAlphabet(u16),
    #[error("presentation `{0}` carries no confluence certificate")]
    NotConfluent(String),
    #[error("presentation `{0}` has no finite explicit relation list")]
    NotEnumerable(String),
    #[error("{what} budget of {budget} exceeded")]
    BudgetExceeded { what: &'static str, budget: usize },
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("paths are not parallel")]
    NotParallel,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("boundary safety: {0}")]
    BoundarySafety(String),
    #[error("invalid constants: {0}")]
    InvalidSpec(String),
    #[error("vertex map is not total: source vertex {0} has no image")]
    NonTotalMap(usize),
    #[error("vertex map target {0} is not a vertex of the target space")]
    MapOutOfRange(usize),
    #[error("map fails its quasi-isometry constants: {0}")]
    HypothesisFailed(String),
    #[error("no point of the image lies within {mu} of vertex {vertex} in both directions")]
    NoNearbyImagePoint { vertex: usize, mu: String },
    #[error("empty checkable range")]
    EmptyRange,
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid membership oracle: {0}")]
    InvalidOracle(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
