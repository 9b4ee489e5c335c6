//! Named polynomials of finite-type cluster complexes.
//!
//! Everything here is built from closed forms: binomial sums for the three
//! infinite series, literal coefficient lists for the exceptional and
//! non-crystallographic types, and derivative formulas for the Jacobi and
//! auxiliary families. No complex is ever enumerated.

mod h_family;
mod jacobi;
mod ode;
mod recurrence;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CatalogError;
use crate::rational::{int, ratio};
use crate::{RatPoly, Rational};

pub use h_family::{
    expansion_even, expansion_odd, formula_b_at_half, formula_c_at_zero, fplus_d_from_h, h_deriv, k_poly, tilde_f_d,
    tilde_f_d_rodrigues, upper_h, upper_h_deriv,
};
pub use jacobi::{jacobi_shifted, rodrigues_f, rodrigues_fplus_d};
pub use ode::{fuchsian_residual_d, fuchsian_residual_nhat};
pub use recurrence::{
    recurrence_series, recurrence_step_a, recurrence_step_b, recurrence_step_d, DRecurrenceCoefficients,
};

/// An irreducible finite root system, identified by family and rank data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootSystemType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    /// Dihedral type; the payload is `p`, not the rank.
    I2(u32),
}

/// Types whose f-polynomials are literal tables rather than binomial sums.
pub const TABULATED_TYPES: [RootSystemType; 7] = [
    RootSystemType::E6,
    RootSystemType::E7,
    RootSystemType::E8,
    RootSystemType::F4,
    RootSystemType::G2,
    RootSystemType::H3,
    RootSystemType::H4,
];

impl RootSystemType {
    /// Rejects parameters outside the family's range.
    pub fn validate(self) -> Result<Self, CatalogError> {
        let bad = |detail: &str| {
            Err(CatalogError::InvalidRank {
                family: self.family().to_string(),
                detail: detail.to_string(),
            })
        };
        match self {
            Self::A(0) => bad("A requires l >= 1"),
            Self::B(0) => bad("B requires l >= 1"),
            Self::D(l) if l < 4 => bad("D requires l >= 4"),
            Self::I2(p) if p < 3 => bad("I2 requires p >= 3"),
            _ => Ok(self),
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            Self::A(l) | Self::B(l) | Self::D(l) => l,
            Self::E6 => 6,
            Self::E7 => 7,
            Self::E8 => 8,
            Self::F4 | Self::H4 => 4,
            Self::H3 => 3,
            Self::G2 | Self::I2(_) => 2,
        }
    }

    pub fn family(self) -> &'static str {
        match self {
            Self::A(_) => "A",
            Self::B(_) => "B",
            Self::D(_) => "D",
            Self::E6 => "E6",
            Self::E7 => "E7",
            Self::E8 => "E8",
            Self::F4 => "F4",
            Self::G2 => "G2",
            Self::H3 => "H3",
            Self::H4 => "H4",
            Self::I2(_) => "I2",
        }
    }

    /// Build from a family name plus the rank (A, B, D) or `p` (I2).
    pub fn from_parts(family: &str, param: Option<u32>) -> Result<Self, CatalogError> {
        let need = |f: fn(u32) -> Self| {
            param.map(f).ok_or_else(|| CatalogError::InvalidRank {
                family: family.to_string(),
                detail: "missing rank parameter".to_string(),
            })
        };
        let ty = match family.to_ascii_uppercase().as_str() {
            "A" => need(Self::A)?,
            "B" => need(Self::B)?,
            "D" => need(Self::D)?,
            "I2" | "I" => need(Self::I2)?,
            "E6" => Self::E6,
            "E7" => Self::E7,
            "E8" => Self::E8,
            "F4" => Self::F4,
            "G2" => Self::G2,
            "H3" => Self::H3,
            "H4" => Self::H4,
            other => {
                return Err(CatalogError::InvalidRank {
                    family: other.to_string(),
                    detail: "unknown family".to_string(),
                })
            }
        };
        ty.validate()
    }

    /// `true` for A, B and D, the only families with an f+ polynomial here.
    pub fn has_fplus(self) -> bool {
        matches!(self, Self::A(_) | Self::B(_) | Self::D(_))
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(l) => write!(f, "A{l}"),
            Self::B(l) => write!(f, "B{l}"),
            Self::D(l) => write!(f, "D{l}"),
            Self::I2(p) => write!(f, "I2({p})"),
            other => f.write_str(other.family()),
        }
    }
}

impl FromStr for RootSystemType {
    type Err = CatalogError;

    /// Accepts `A5`, `A_5`, `I2(7)`, `E8`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().replace('_', "");
        let upper = s.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let p = rest.parse().map_err(|_| CatalogError::InvalidRank {
                family: "I2".into(),
                detail: format!("bad parameter {rest:?}"),
            })?;
            return Self::from_parts("I2", Some(p));
        }
        if matches!(upper.as_str(), "E6" | "E7" | "E8" | "F4" | "G2" | "H3" | "H4") {
            return Self::from_parts(&upper, None);
        }
        let (fam, num) = upper.split_at(upper.len().min(1));
        let l = num.parse().map_err(|_| CatalogError::InvalidRank {
            family: fam.to_string(),
            detail: format!("bad rank {num:?}"),
        })?;
        Self::from_parts(fam, Some(l))
    }
}

/// Exponents, Coxeter number and group order of the reflection group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterData {
    /// Ascending, so `exponents[0] == 1`.
    pub exponents: Vec<u64>,
    pub coxeter_number: u64,
    pub group_order: BigInt,
}

impl CoxeterData {
    /// Closed forms for A, B, D and I2; other types are not tabulated.
    pub fn of(ty: RootSystemType) -> Result<Self, CatalogError> {
        let ty = ty.validate()?;
        let (mut exponents, h): (Vec<u64>, u64) = match ty {
            RootSystemType::A(l) => ((1..=l as u64).collect(), l as u64 + 1),
            RootSystemType::B(l) => ((0..l as u64).map(|i| 2 * i + 1).collect(), 2 * l as u64),
            RootSystemType::D(l) => {
                let mut e: Vec<u64> = (0..l as u64 - 1).map(|i| 2 * i + 1).collect();
                e.push(l as u64 - 1);
                (e, 2 * l as u64 - 2)
            }
            RootSystemType::I2(p) => (vec![1, p as u64 - 1], p as u64),
            other => return Err(CatalogError::UnsupportedType(other.to_string())),
        };
        exponents.sort_unstable();
        let group_order = match ty {
            RootSystemType::A(l) => factorial(l as u64 + 1),
            RootSystemType::B(l) => (BigInt::one() << l as usize) * factorial(l as u64),
            RootSystemType::D(l) => (BigInt::one() << (l as usize - 1)) * factorial(l as u64),
            RootSystemType::I2(p) => BigInt::from(2 * p as u64),
            _ => unreachable!(),
        };
        Ok(Self {
            exponents,
            coxeter_number: h,
            group_order,
        })
    }

    /// `prod (e_i + 1)`, which must equal the group order.
    pub fn exponent_product(&self) -> BigInt {
        self.exponents.iter().map(|&e| BigInt::from(e + 1)).product()
    }

    /// `((-1)^l / |W|) * l h * prod_{i>=2} (e_i - 1)`.
    pub fn derivative_at_one(&self) -> Rational {
        let l = self.exponents.len();
        let prod: BigInt = self.exponents[1..].iter().map(|&e| BigInt::from(e - 1)).product();
        let num = BigInt::from(l as u64 * self.coxeter_number) * prod;
        let value = BigRational::new(num, self.group_order.clone());
        if l.is_multiple_of(2) {
            value
        } else {
            -value
        }
    }
}

/// Unsigned face numbers `f_{-1} = 1, f_0, ..., f_{l-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<BigInt>);

impl FVector {
    /// Reads the f-vector off an f-polynomial `sum f_{i-1} (-t)^i`.
    pub fn from_poly(p: &RatPoly) -> Self {
        Self(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let v = c.to_integer();
                    if i % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .collect(),
        )
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.0
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let v = BigRational::from_integer(f.clone());
                    if i % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .collect(),
        )
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn alternating(coeffs: impl Iterator<Item = BigRational>) -> RatPoly {
    RatPoly::from_coeffs(
        coeffs
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c } else { -c })
            .collect(),
    )
}

/// Binomial sum for type A; `l = 0` gives the constant 1.
pub(crate) fn f_a(l: u32) -> RatPoly {
    let l = l as i64;
    alternating((0..=l).map(|k| BigRational::new(binomial(l, k) * binomial(l + k + 2, k + 1), BigInt::from(l + 2))))
}

/// Binomial sum for type B; `l = 0` gives 1 and `l = 1` gives `1 - 2t`.
pub(crate) fn f_b(l: u32) -> RatPoly {
    let l = l as i64;
    alternating((0..=l).map(|k| BigRational::from_integer(binomial(l, k) * binomial(l + k, k))))
}

pub(crate) fn f_d(l: u32) -> RatPoly {
    let l = l as i64;
    alternating((0..=l).map(|k| {
        BigRational::from_integer(
            binomial(l, k) * binomial(l + k - 1, k) + binomial(l - 2, k - 2) * binomial(l + k - 2, k),
        )
    }))
}

fn tabulated(ty: RootSystemType) -> Option<&'static [i64]> {
    Some(match ty {
        RootSystemType::E6 => &[1, -42, 399, -1547, 2856, -2499, 833],
        RootSystemType::E7 => &[1, -70, 945, -5180, 14105, -20202, 14560, -4160],
        RootSystemType::E8 => &[1, -128, 2408, -17936, 67488, -140448, 163856, -100320, 25080],
        RootSystemType::F4 => &[1, -28, 133, -210, 105],
        RootSystemType::G2 => &[1, -8, 8],
        RootSystemType::H3 => &[1, -18, 48, -32],
        RootSystemType::H4 => &[1, -64, 344, -560, 280],
        _ => return None,
    })
}

/// The f-polynomial `sum_i f_{i-1} (-t)^i`.
pub fn f_poly(ty: RootSystemType) -> Result<RatPoly, CatalogError> {
    Ok(match ty.validate()? {
        RootSystemType::A(l) => f_a(l),
        RootSystemType::B(l) => f_b(l),
        RootSystemType::D(l) => f_d(l),
        RootSystemType::I2(p) => {
            let c = p as i64 + 2;
            RatPoly::from_ints(&[1, -c, c])
        }
        other => RatPoly::from_ints(tabulated(other).expect("tabulated type")),
    })
}

/// The f+-polynomial of the positive part, for A, B and D only.
pub fn fplus_poly(ty: RootSystemType) -> Result<RatPoly, CatalogError> {
    Ok(match ty.validate()? {
        RootSystemType::A(l) => &RatPoly::from_ints(&[1, -1]) * &f_a(l - 1),
        RootSystemType::B(l) => (&f_b(l) + &f_b(l - 1)).scale(&ratio(1, 2)),
        RootSystemType::D(l) => fplus_d_via_b(l),
        other => return Err(CatalogError::UnsupportedType(other.to_string())),
    })
}

/// `(1/(2(l-1))) [ (l t - 2) f_{B_l} + (2(2l-1) t^2 - 5 l t + 2 l) f_{B_{l-1}} ]`.
pub(crate) fn fplus_d_via_b(l: u32) -> RatPoly {
    let li = l as i64;
    let lin = RatPoly::from_ints(&[-2, li]);
    let quad = RatPoly::from_ints(&[2 * li, -5 * li, 2 * (2 * li - 1)]);
    (&(&lin * &f_b(l)) + &(&quad * &f_b(l - 1))).scale(&ratio(1, 2 * (li - 1)))
}

/// The h-polynomial, from `sum f_{i-1} (x-1)^{l-i} = sum h_i x^{l-i}`.
pub fn h_poly(ty: RootSystemType) -> Result<RatPoly, CatalogError> {
    let f = f_poly(ty)?;
    let l = ty.rank() as usize;
    let fv = FVector::from_poly(&f);
    let x_minus_one = RatPoly::from_ints(&[-1, 1]);
    let mut lhs = RatPoly::zero();
    for (i, fi) in fv.0.iter().enumerate() {
        let term = x_minus_one
            .pow((l - i) as u32)
            .scale(&BigRational::from_integer(fi.clone()));
        lhs = &lhs + &term;
    }
    // h_i is the coefficient of x^{l-i}
    Ok(RatPoly::from_coeffs((0..=l).map(|i| lhs.coeff(l - i)).collect()))
}

/// `sum_i h_i (-1)^i t^i (1-t)^{l-i}`, which reproduces the f-polynomial.
pub fn f_from_h(h: &RatPoly, rank: u32) -> RatPoly {
    let one_minus_t = RatPoly::from_ints(&[1, -1]);
    (0..=rank as usize).fold(RatPoly::zero(), |acc, i| {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let term = &RatPoly::monomial(h.coeff(i) * sign, i) * &one_minus_t.pow(rank - i as u32);
        &acc + &term
    })
}

/// `true` when every coefficient has denominator one.
pub fn is_integral(p: &RatPoly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer())
}

/// Unsigned coefficients alternate in sign and are all nonzero.
pub fn has_alternating_positive_fvector(p: &RatPoly) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| if k % 2 == 0 { c.is_positive() } else { c.is_negative() })
}
