use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopError {
    #[error("generator #{index} contains point {point}, out of range for {n} points")]
    InvalidGenerator {
        index: usize,
        point: usize,
        n: usize,
    },

    #[error("{what}: {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("not a valid topology: {0}")]
    InvalidSpace(String),

    #[error("invalid point map: {0}")]
    InvalidMap(String),

    #[error("not a discretization: {0}")]
    NotADiscretization(String),

    #[error("theorem hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("set {0} is not open")]
    NotOpen(String),

    #[error("element is not in the algebra: {0}")]
    NotInAlgebra(String),

    #[error("not a morphism of the isolated-point category: {0}")]
    NotACMorphism(String),

    #[error("outside the computable slice: {0}")]
    OutOfComputableSlice(String),

    #[error("malformed symbolic set: {0}")]
    InvalidSet(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}
