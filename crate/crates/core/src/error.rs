use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a root: {0} does not vanish at the divisor's root")]
    NotARoot(String),
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("leading coefficient of the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid sweep for {id}: {reason}")]
    InvalidSweep { id: String, reason: String },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
