use thiserror::Error;

/// Errors raised while building graphs, labelings, decompositions and reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("self-pair ({0}, {0}) in edge list; loops go in the loop list")]
    SelfPair(usize),

    #[error("permutation is not a bijection on 1..={0}")]
    NotBijective(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("graph has zero total degree; no density matrix exists")]
    EmptyGraph,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("entry {0} is not binary")]
    NotBinary(i64),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("search space too large: {0}")]
    SearchCap(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
