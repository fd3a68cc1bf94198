use thiserror::Error;

use crate::qsym::QSymElement;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Conversion into the peak basis of an element outside the peak algebra.
    #[error("element is not in the span of the K basis; residual {residual}")]
    NotInSpan { residual: Box<QSymElement> },

    #[error("degree bound {bound} is below the element degree {degree}")]
    DegreeBound { bound: usize, degree: usize },

    #[error("invalid poset: {0}")]
    Poset(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
