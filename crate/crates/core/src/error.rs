use thiserror::Error;

use crate::algebra::Var;

/// Errors raised by the algebra, series and family layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in rational construction")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("no value assigned to indeterminate {0}")]
    MissingAssignment(Var),

    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("non-series quotient: numerator valuation {numerator} is below denominator valuation {denominator}")]
    NonSeriesQuotient {
        numerator: usize,
        denominator: usize,
    },

    #[error("division by a series that vanishes to the truncation order")]
    ZeroDivisor,

    #[error("leading coefficient of the divisor is not invertible")]
    NotInvertible,

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

impl Error {
    /// True for failures caused by the mathematics of the requested
    /// parameters (singular kernels, bad divisions) rather than by usage.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::NonSeriesQuotient { .. }
                | Error::ZeroDivisor
                | Error::NotInvertible
                | Error::InvalidParameter(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
