//! Helpers around the exact rational scalar.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::Rational;

/// `num / den` as an exact rational.
///
/// # Panics
/// If `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact division, rejecting a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, PolyError> {
    if b.is_zero() {
        Err(PolyError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Sign as -1, 0 or 1.
pub fn sign(x: &Rational) -> i8 {
    match x.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Serialize as `"num/den"` (always with an explicit denominator).
pub fn to_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse `"n"`, `"n/d"` or a finite decimal such as `"-0.125"`.
pub fn parse(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(n, d);
        return Ok(if negative { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// `2^-bits`.
pub fn pow2_neg(bits: u32) -> Rational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Round outward to a dyadic grid of `2^-bits`: `(floor, ceil)`.
pub fn dyadic_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    let lo = BigRational::new(scaled.floor().to_integer(), scale.clone());
    let hi = BigRational::new(scaled.ceil().to_integer(), scale);
    (lo, hi)
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
