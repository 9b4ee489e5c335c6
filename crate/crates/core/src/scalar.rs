//! Coefficient field abstraction.
//!
//! Polynomial arithmetic is written once against [`Scalar`] and instantiated
//! for exact rationals (the only field the certification code trusts) and for
//! `f32`/`f64` (approximate evaluation, plotting, quick sanity checks).

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// A field the polynomial code can compute over.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync {
    /// Embed a machine integer.
    fn from_i64(value: i64) -> Self;

    /// Nearest `f64`, for display only.
    fn approx(&self) -> f64;

    /// `true` when arithmetic is exact, so that a zero test is a proof.
    fn is_exact() -> bool;

    /// Rescale a nonzero coefficient vector by a nonzero constant so that it
    /// stays small. Used by the Euclidean gcd; the result only matters up to
    /// a unit. The default makes the vector monic.
    fn reduce_associate(coeffs: &mut [Self]) {
        if let Some(lead) = coeffs.last().cloned() {
            if !lead.is_zero() {
                for c in coeffs.iter_mut() {
                    *c = c.clone() / lead.clone();
                }
            }
        }
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(value: i64) -> Self {
                value as $t
            }

            fn approx(&self) -> f64 {
                *self as f64
            }

            fn is_exact() -> bool {
                false
            }
        }
    )*};
}

float_scalar!(f32, f64);

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    fn is_exact() -> bool {
        true
    }

    /// Primitive integer part with positive leading coefficient.
    fn reduce_associate(coeffs: &mut [Self]) {
        let Some(lead) = coeffs.last() else { return };
        if lead.is_zero() {
            return;
        }
        let negate = lead.is_negative();
        let (num, den) = primitive_scaling(coeffs);
        let factor = if negate {
            -BigRational::new(num, den)
        } else {
            BigRational::new(num, den)
        };
        for c in coeffs.iter_mut() {
            *c = &*c * &factor;
        }
    }
}

/// Returns `(lcm of denominators, gcd of scaled numerators)` flipped into the
/// positive factor `lcm / gcd` that maps `coeffs` onto a primitive integer
/// vector. The factor is returned as `(numerator, denominator)`.
pub(crate) fn primitive_scaling(coeffs: &[BigRational]) -> (BigInt, BigInt) {
    let lcm = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let content = coeffs.iter().filter(|c| !c.is_zero()).fold(BigInt::zero(), |acc, c| {
        let scaled = c.numer() * (&lcm / c.denom());
        acc.gcd(&scaled)
    });
    if content.is_zero() {
        (BigInt::one(), BigInt::one())
    } else {
        (lcm, content)
    }
}
