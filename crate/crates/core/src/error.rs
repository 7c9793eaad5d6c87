use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A table entry outside `0..n`, or a ragged table.
    #[error("malformed table: {0}")]
    MalformedTable(String),

    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Laurent polynomial whose extreme coefficients are not units.
    #[error("infinite quandle: {0}")]
    InfiniteQuandle(String),

    /// A chain used in a variant it does not belong to.
    #[error("variant error: {0}")]
    Variant(String),

    /// A mathematical precondition failed (e.g. a non-cycle given where a cycle is required).
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
