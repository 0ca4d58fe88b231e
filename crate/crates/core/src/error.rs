use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis index {index} does not belong to {instance}")]
    InstanceMismatch { index: String, instance: String },
    #[error("{0} is not grouplike")]
    NotGrouplike(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Parameter validation failure; `pointer` is a JSON-pointer-style location
/// of the offending field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct InvalidParams {
    pub pointer: String,
    pub message: String,
}

impl InvalidParams {
    pub fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        InvalidParams { pointer: pointer.into(), message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("quotient {name:?} is not available for {instance}")]
    Unavailable { name: String, instance: String },
    #[error("quotient map does not kill relation {0}")]
    RelationNotPreserved(String),
    #[error("quotient map is not a Hopf map on generator {0}")]
    NotHopf(String),
    #[error("image of generator {0} is not allowed for this quotient kind")]
    BadImage(String),
    #[error("operation requires a {expected} quotient")]
    KindMismatch { expected: &'static str },
}
