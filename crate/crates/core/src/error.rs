use thiserror::Error;

/// What went wrong on a single line of an edge-list document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty document, expected `graph` or `digraph` header")]
    MissingHeader,
    #[error("unknown header `{0}`, expected `graph` or `digraph`")]
    BadHeader(String),
    #[error("malformed line, expected `u v`")]
    Malformed,
    #[error("loop edge on `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("undeclared vertex `{0}`")]
    UndeclaredVertex(String),
    #[error("duplicate vertex declaration `{0}`")]
    DuplicateVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{0} -> {1} is not an edge")]
    NotAnEdge(String, String),
    #[error("oracle too large: closure exceeds the cap of {cap} elements")]
    OracleTooLarge { cap: usize },
    #[error("oracle supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid defect size {k} for {n} vertices")]
    InvalidDefect { k: usize, n: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
