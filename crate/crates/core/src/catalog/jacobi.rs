//! Derivative (Rodrigues-type) constructions and shifted Jacobi polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{factorial, RootSystemType};
use crate::error::CatalogError;
use crate::rational::int;
use crate::RatPoly;

fn t_pow(k: u32) -> RatPoly {
    RatPoly::var().pow(k)
}

fn one_minus_t_pow(k: u32) -> RatPoly {
    RatPoly::from_ints(&[1, -1]).pow(k)
}

fn inv_factorial(n: u64) -> BigRational {
    BigRational::new(BigInt::from(1), factorial(n))
}

/// Shifted Jacobi polynomial `P_l^{(alpha, beta)}(2t - 1)`, computed as
/// `(1/l!) d^l/dt^l [(t-1)^{l+alpha} t^{l+beta}]` divided by `(t-1)^alpha t^beta`.
pub fn jacobi_shifted(l: u32, alpha: u32, beta: u32) -> Result<RatPoly, CatalogError> {
    let t_minus_one = RatPoly::from_ints(&[-1, 1]);
    let body = &t_minus_one.pow(l + alpha) * &t_pow(l + beta);
    let weight = &t_minus_one.pow(alpha) * &t_pow(beta);
    let numer = body.derivative(l as usize).scale(&inv_factorial(l as u64));
    Ok(numer.exact_divide(&weight)?)
}

/// The derivative forms of `f_P` for `P` in A, B, D.
///
/// For D both the two-term form and the single-derivative form are evaluated
/// and required to agree.
pub fn rodrigues_f(ty: RootSystemType) -> Result<RatPoly, CatalogError> {
    match ty.validate()? {
        RootSystemType::A(l) => {
            let body = &t_pow(l + 1) * &one_minus_t_pow(l + 1);
            let numer = body.derivative(l as usize).scale(&inv_factorial(l as u64 + 1));
            let weight = RatPoly::from_ints(&[0, 1, -1]);
            Ok(numer.exact_divide(&weight)?)
        }
        RootSystemType::B(l) => {
            let body = &t_pow(l) * &one_minus_t_pow(l);
            Ok(body.derivative(l as usize).scale(&inv_factorial(l as u64)))
        }
        RootSystemType::D(l) => {
            let two_term = rodrigues_d_two_term(l);
            let single = rodrigues_d_single(l);
            if two_term != single {
                return Err(CatalogError::RodriguesFormMismatch(ty.to_string()));
            }
            Ok(single)
        }
        other => Err(CatalogError::UnsupportedType(other.to_string())),
    }
}

/// `(1/(l-1)!) d^{l-1}[t^{l-1}(1-t)^l] + (1/(l-2)!) d^{l-2}[t^l (1-t)^{l-2}]`.
pub(crate) fn rodrigues_d_two_term(l: u32) -> RatPoly {
    let first = (&t_pow(l - 1) * &one_minus_t_pow(l))
        .derivative(l as usize - 1)
        .scale(&inv_factorial(l as u64 - 1));
    let second = (&t_pow(l) * &one_minus_t_pow(l - 2))
        .derivative(l as usize - 2)
        .scale(&inv_factorial(l as u64 - 2));
    &first + &second
}

/// `(1/(l-1)!) d^{l-2}[t^{l-2}(1-t)^{l-2}((l-1) - (3l-2)t + (3l-2)t^2)]`.
pub(crate) fn rodrigues_d_single(l: u32) -> RatPoly {
    let li = l as i64;
    let quad = RatPoly::from_ints(&[li - 1, -(3 * li - 2), 3 * li - 2]);
    (&(&t_pow(l - 2) * &one_minus_t_pow(l - 2)) * &quad)
        .derivative(l as usize - 2)
        .scale(&inv_factorial(l as u64 - 1))
}

/// `(1/(l-2)!) d^{l-3}[t^{l-3}(1-t)^{l-2}((l-2) - (3l-4)t + (3l-4)t^2)]`,
/// the derivative form of the D-type f+ polynomial.
pub fn rodrigues_fplus_d(l: u32) -> Result<RatPoly, CatalogError> {
    RootSystemType::D(l).validate()?;
    let li = l as i64;
    let quad = RatPoly::from_ints(&[li - 2, -(3 * li - 4), 3 * li - 4]);
    Ok((&(&t_pow(l - 3) * &one_minus_t_pow(l - 2)) * &quad)
        .derivative(l as usize - 3)
        .scale(&inv_factorial(l as u64 - 2)))
}

/// `(-1)^n` as a rational.
pub(crate) fn sign_pow(n: i64) -> BigRational {
    if n.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}
