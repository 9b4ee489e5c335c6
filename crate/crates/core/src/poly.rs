//! Dense univariate polynomials over a [`Scalar`] field.
//!
//! Coefficients are stored in ascending order of powers and are always
//! trimmed, so the last stored coefficient is nonzero. The zero polynomial is
//! the empty vector and reports `degree() == None`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::PolyError;
use crate::scalar::{primitive_scaling, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The formal variable `t`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `a + b t`.
    pub fn linear(a: T, b: T) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero of degree zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides every coefficient by the leading one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() / lead.clone()).collect())
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `n`-th formal derivative; `derivative(0)` is the identity.
    pub fn derivative(&self, n: usize) -> Self {
        if n == 0 {
            return self.clone();
        }
        if n >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = (n..self.coeffs.len())
            .map(|k| {
                // k * (k-1) * ... * (k-n+1)
                let falling = ((k - n + 1)..=k).fold(T::one(), |acc, j| acc * T::from_i64(j as i64));
                self.coeffs[k].clone() * falling
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Euclidean division: `self = divisor * quot + rem`, `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            // exact for rationals; forces the cancellation for floats
            rem[k + dd] = T::zero();
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NonZeroRemainder)
        }
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            let mut coeffs = r.coeffs;
            T::reduce_associate(&mut coeffs);
            b = Self::from_coeffs(coeffs);
        }
        a.monic()
    }

    /// `gcd(p, p')` is constant. The zero polynomial is not square-free.
    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative(1)).degree() == Some(0)
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative(1));
        self.exact_divide(&g).expect("gcd divides its argument")
    }

    /// `self(a t + b)`.
    pub fn compose_affine(&self, a: &T, b: &T) -> Self {
        let inner = Self::linear(b.clone(), a.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &inner) + &Self::constant(c.clone()))
    }

    /// Substitute another polynomial for `t`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Divides out `(t - r)` as often as it divides; returns the cofactor and
    /// the multiplicity.
    pub fn deflate(&self, r: &T) -> (Self, usize) {
        let factor = Self::linear(-r.clone(), T::one());
        let mut p = self.clone();
        let mut mult = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.exact_divide(&factor).expect("root implies exact division");
            mult += 1;
        }
        (p, mult)
    }

    /// Coefficientwise conversion into another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<BigRational> {
    /// Positive rescaling onto a primitive integer polynomial. Signs of all
    /// values are preserved, so root counts and Sturm variations are too.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (num, den) = primitive_scaling(&self.coeffs);
        self.scale(&BigRational::new(num, den))
    }

    /// Exact sign of `self(x)`: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        crate::rational::sign(&self.eval(x))
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Scalar> $tr<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    /// Ascending powers, e.g. `1 - 6t + 6t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::{RatPoly, Rational};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn add_mul_examples() {
        assert_eq!(&p(&[1, -2]) + &RatPoly::zero(), p(&[1, -2]));
        assert_eq!(&p(&[1, -2]) * &p(&[1, -2]), p(&[1, -4, 4]));
        // f_B2 + f_B1 = 2 f+_B2
        assert_eq!(&p(&[1, -6, 6]) + &p(&[1, -2]), p(&[2, -8, 6]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), RatPoly::zero());
        assert_eq!(
            p(&[1, -2]).scale(&ratio(1, 2)),
            RatPoly::from_coeffs(vec![ratio(1, 2), int(-1)])
        );
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[3]).degree(), Some(0));
        assert_eq!((&p(&[1, 1]) * &RatPoly::zero()).degree(), None);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 0, 1]).derivative(1), p(&[0, 2]));
        // t^2 (1-t)^2 = t^2 - 2t^3 + t^4
        assert_eq!(p(&[0, 0, 1, -2, 1]).derivative(2), p(&[2, -12, 12]));
        assert_eq!(p(&[1, 2, 3]).derivative(5), RatPoly::zero());
        assert_eq!(p(&[1, 2, 3]).derivative(0), p(&[1, 2, 3]));
    }

    #[test]
    fn eval_examples() {
        let g2 = p(&[1, -8, 8]);
        assert_eq!(g2.eval(&int(0)), int(1));
        assert_eq!(g2.eval(&int(1)), int(1));
        assert_eq!(p(&[1, -6, 6]).eval(&ratio(1, 2)), ratio(-1, 2));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p(&[1, -18, 48, -32]).divrem(&p(&[1, -2])).unwrap();
        assert_eq!(q, p(&[1, -16, 16]));
        assert!(r.is_zero());
        let x = p(&[3, 1, 4]);
        assert_eq!(x.divrem(&RatPoly::one()).unwrap(), (x.clone(), RatPoly::zero()));
        let (q, r) = p(&[1, -6, 6]).divrem(&p(&[-6, 12])).unwrap();
        assert_eq!(q.degree(), Some(1));
        assert_eq!(r, RatPoly::constant(ratio(-1, 2)));
        assert_eq!(x.divrem(&RatPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn gcd_and_square_free() {
        assert_eq!(p(&[0, 0, 1]).gcd(&p(&[0, 1])), p(&[0, 1]));
        assert!(p(&[1, -6, 6]).is_square_free());
        assert!(!p(&[1, -4, 4]).is_square_free());
        assert_eq!(p(&[1, -4, 4]).square_free_part(), p(&[-2, 4]));
        assert_eq!(RatPoly::zero().gcd(&RatPoly::zero()), RatPoly::zero());
        assert_eq!(
            p(&[2, 4]).gcd(&RatPoly::zero()),
            RatPoly::from_coeffs(vec![ratio(1, 2), int(1)])
        );
    }

    #[test]
    fn compose_affine_examples() {
        assert_eq!(p(&[1, -2]).compose_affine(&int(-1), &int(1)), p(&[-1, 2]));
        assert_eq!(p(&[1, -6, 6]).compose_affine(&int(-1), &int(1)), p(&[1, -6, 6]));
        assert_eq!(p(&[0, 1]).compose_affine(&int(2), &int(-1)), p(&[-1, 2]));
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(p(&[0, -1, 1]).exact_divide(&p(&[0, 1])).unwrap(), p(&[-1, 1]));
        // f+_A2 = (1-t) f_A1
        assert_eq!(p(&[1, -3, 2]).exact_divide(&p(&[1, -1])).unwrap(), p(&[1, -2]));
        assert_eq!(p(&[1, -2]).exact_divide(&p(&[0, 1])), Err(PolyError::NonZeroRemainder));
    }

    #[test]
    fn deflate_counts_multiplicity() {
        let q = &p(&[1, -1]).pow(3) * &p(&[1, -3]);
        let (rest, m) = q.deflate(&int(1));
        assert_eq!(m, 3);
        // (1 - t)^3 = -(t - 1)^3
        assert_eq!(rest, p(&[-1, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -6, 6]).to_string(), "1 - 6t + 6t^2");
        assert_eq!(p(&[0, 1, 0, -1]).to_string(), "t - t^3");
        assert_eq!(RatPoly::zero().to_string(), "0");
        let q: Poly<Rational> = RatPoly::from_coeffs(vec![ratio(-1, 2)]);
        assert_eq!(q.to_string(), "-1/2");
    }

    #[test]
    fn generic_over_floats() {
        let q = Poly::<f64>::from_ints(&[1, -8, 8]);
        assert!((q.eval(&0.5) + 1.0).abs() < 1e-12);
        let (quot, rem) = Poly::<f64>::from_ints(&[-1, 0, 1])
            .divrem(&Poly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(quot.coeffs(), &[1.0, 1.0]);
        assert!(rem.is_zero());
        let qf = p(&[1, -8, 8]).map(|c| c.approx() as f32);
        assert_eq!(qf.coeffs(), &[1.0_f32, -8.0, 8.0]);
    }
}
