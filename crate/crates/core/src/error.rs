use thiserror::Error;

/// Errors raised by ring constructions, ideal computations and predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),

    #[error("not an ideal: {0}")]
    InvalidIdeal(String),

    #[error("not a module: {0}")]
    InvalidModule(String),

    #[error("not a ring homomorphism: {0}")]
    InvalidHom(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("subset meets the ideal at element {0}")]
    NotDisjoint(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("elements belong to different rings")]
    RingMismatch,

    #[error("invalid element literal: {0}")]
    InvalidElement(String),

    #[error("{0}")]
    Parse(#[from] crate::expr::ParseError),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
