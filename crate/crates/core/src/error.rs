use thiserror::Error;

/// Errors reading the text graph format. Each carries the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed record: {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: edge record before the `p cut` header")]
    MissingHeader { line: usize },
    #[error("line {line}: second `p cut` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: self-loop at node {node}")]
    SelfLoop { line: usize, node: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: node {node} out of range 1..={n}")]
    NodeOutOfRange { line: usize, node: usize, n: usize },
    #[error("line {line}: weight {weight} exceeds the supported magnitude 2^40")]
    WeightOutOfRange { line: usize, weight: i64 },
    #[error("header announced {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("no `p cut` header found")]
    EmptyInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("node {node} out of range (node count {n})")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("weight {0} exceeds the supported magnitude 2^40")]
    WeightOutOfRange(i64),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("{what}: size {got} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("graph has a K3,3 minor (non-planar 3-connected component on nodes {witness:?})")]
    HasK33Minor { witness: Vec<usize> },
    #[error("graph is neither K5-minor-free nor K3,3-minor-free (component on nodes {witness:?})")]
    UnsupportedClass { witness: Vec<usize> },
    #[error("T-join terminal set has odd size {0}")]
    OddTerminalCount(usize),
    #[error("perfect matching needs an even number of points, got {0}")]
    OddPointCount(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed elimination state: {0}")]
    MalformedState(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
