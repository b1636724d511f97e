use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}: {constraint}")]
    InvalidType {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("cannot parse type string {0:?}")]
    Parse(String),

    #[error("{0} is only defined for irreducible root systems")]
    Reducible(&'static str),

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("capability exceeded: {what} (bound: {bound})")]
    Capability { what: String, bound: String },

    #[error("root subset is not a closed subsystem: {0}")]
    NotClosed(String),

    #[error("subsystem is not complete (differs from its completion)")]
    NotComplete,

    #[error("unrecognised Dynkin diagram component: {0}")]
    UnknownDiagram(String),

    #[error("non-integral result: {0}")]
    Inexact(String),
}

impl Error {
    pub(crate) fn capability(what: impl Into<String>, bound: impl ToString) -> Self {
        Error::Capability {
            what: what.into(),
            bound: bound.to_string(),
        }
    }
}
