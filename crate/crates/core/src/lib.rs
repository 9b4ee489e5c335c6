//! Exact f- and f+-polynomials of finite-type cluster complexes, with
//! certified statements about the location and interlacing of their real
//! roots.
//!
//! Polynomial arithmetic ([`Poly`]) is generic over the coefficient field via
//! [`Scalar`]. Everything that certifies a statement runs over [`Rational`]
//! (arbitrary-precision, always in lowest terms) so that every sign and every
//! equality is decided exactly.

pub mod catalog;
pub mod error;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod sturm;
pub mod verify;

pub use catalog::{f_poly, fplus_poly, h_poly, CoxeterData, FVector, RootSystemType};
pub use error::{CatalogError, PolyError, SturmError};
pub use poly::Poly;
pub use scalar::Scalar;
pub use sturm::{Interval, RootBox, SturmChain};
pub use verify::{Report, Status};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

/// Polynomial over exact rationals; the type every certificate is built on.
pub type RatPoly = Poly<Rational>;

/// Double-precision polynomial, for display and plotting.
pub type F64Poly = Poly<f64>;

/// Single-precision polynomial.
pub type F32Poly = Poly<f32>;
