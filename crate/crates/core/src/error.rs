use thiserror::Error;

/// Errors produced by the halfgraph toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown named graph `{0}`")]
    UnknownGraph(String),
    #[error("integrity check failed for {name}: {message}")]
    Integrity { name: String, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
