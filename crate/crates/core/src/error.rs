use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("identity element does not act as a two-sided identity")]
    NoIdentity,
    #[error("ill-formed structure constants: {0}")]
    IllFormedConstants(String),
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("{what} has size {actual}, exceeding the limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("modules are defined over different rings")]
    RingMismatch,
    #[error("element set is not a submodule")]
    NotSubmodule,
    #[error("submodules belong to different parent modules")]
    ParentMismatch,
    #[error("no primitive idempotent found for a simple module")]
    IdempotentSearchExceeded,
    #[error("malformed description: {0}")]
    Description(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

impl AlgebraError {
    pub(crate) fn limit(what: &'static str, limit: usize, actual: usize) -> Self {
        AlgebraError::SizeLimitExceeded {
            what,
            limit,
            actual,
        }
    }
}
