use thiserror::Error;

use crate::structure::ForbiddenWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The input graph contains a configuration the operation does not accept.
    #[error("precondition violated: {0}")]
    Forbidden(Box<ForbiddenWitness>),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid constants: {0}")]
    InvalidConstants(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("constraint system is infeasible")]
    Infeasible,

    #[error("not supported: {0}")]
    NotSupported(String),

    /// Internal invariant failure: the extracted set is smaller than the proven bound.
    #[error("guarantee violated: extracted {found} vertices, bound requires {required}")]
    GuaranteeViolation { found: usize, required: String },
}
