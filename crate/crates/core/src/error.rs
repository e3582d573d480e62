use alloc::string::String;

use crate::orderings::CaterpillarReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A vertex id outside `1..=n`.
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("validation: {0}")]
    Validation(String),
    /// Input too large for an exhaustive routine.
    #[error("size cap: {0}")]
    SizeCap(String),
    /// Input outside the domain of a formula (width 0 for the base layer).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid caterpillar: {0}")]
    InvalidCaterpillar(CaterpillarReport),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
