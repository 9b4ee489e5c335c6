use thiserror::Error;

/// Failures of exact polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division left a nonzero remainder")]
    NonZeroRemainder,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Failures while building a named polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid rank for {family}: {detail}")]
    InvalidRank { family: String, detail: String },
    #[error("{0} has no f+ polynomial in the catalog")]
    UnsupportedType(String),
    #[error("the two Rodrigues forms of {0} disagree")]
    RodriguesFormMismatch(String),
    #[error("identity mismatch: {0}")]
    IdentityMismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Failures of the real-root machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SturmError {
    #[error("polynomial vanishes at interval endpoint {0}")]
    EndpointRoot(String),
    #[error("empty interval: lo must be < hi")]
    EmptyInterval,
    #[error("zero polynomial has no Sturm chain")]
    ZeroPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
