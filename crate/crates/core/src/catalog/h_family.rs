//! Auxiliary polynomials used to locate the D-type f+ roots.
//!
//! `H_l = (t^2 - t)^{l-3} ((l-2) - (3l-4) t + (3l-4) t^2)` and its derivatives
//! `H_l^{(l-3)}`, `H_l^{(l-4)}` generate the D-type f+ polynomial, its
//! symmetrised companion `f~_{D_l}` and the difference `K_l = f+ - f~`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::jacobi::sign_pow;
use super::{f_b, f_d, factorial, fplus_d_via_b};
use crate::error::CatalogError;
use crate::rational::{int, ratio};
use crate::{RatPoly, Rational};

fn check_rank(l: u32) -> Result<(), CatalogError> {
    if l < 5 {
        return Err(CatalogError::InvalidRank {
            family: "D".into(),
            detail: format!("auxiliary family needs l >= 5, got {l}"),
        });
    }
    Ok(())
}

fn t_sq_minus_t() -> RatPoly {
    RatPoly::from_ints(&[0, -1, 1])
}

fn two_t_minus_one() -> RatPoly {
    RatPoly::from_ints(&[-1, 2])
}

/// `d^i/dt^i (t(t-1))^k`.
pub fn h_deriv(k: u32, i: u32) -> RatPoly {
    t_sq_minus_t().pow(k).derivative(i as usize)
}

/// Closed form of `h_k^{(i)}(1/2)`: zero for odd `i`, and
/// `(-1/4)^{k-j} k! (2j)! / ((k-j)! j!)` for `i = 2j`. Zero when `i > 2k`.
pub fn formula_b_at_half(k: u32, i: u32) -> Rational {
    if i % 2 == 1 || i > 2 * k {
        return Rational::zero();
    }
    let j = i / 2;
    let quarter = num_traits::pow(ratio(-1, 4), (k - j) as usize);
    let num = factorial(k as u64) * factorial(2 * j as u64);
    let den = factorial((k - j) as u64) * factorial(j as u64);
    quarter * BigRational::new(num, den)
}

/// Closed form of `h_k^{(m)}(0)` for `k = m` and `k = m + 1`:
/// `(-1)^m m!` and `0` respectively. `None` for other `k`.
pub fn formula_c_at_zero(k: u32, m: u32) -> Option<Rational> {
    if k == m {
        Some(sign_pow(m as i64) * BigRational::from_integer(factorial(m as u64)))
    } else if k == m + 1 {
        Some(Rational::zero())
    } else {
        None
    }
}

fn frac_factorial(num: &[i64], den: &[i64]) -> Option<Rational> {
    if den.iter().any(|&d| d < 0) {
        return None;
    }
    let n: BigInt = num.iter().map(|&x| factorial(x as u64)).product();
    let d: BigInt = den.iter().map(|&x| factorial(x as u64)).product();
    Some(BigRational::new(n, d))
}

/// Expansion of `h_k^{(2i-1)}` in powers of `t^2 - t` and `2t - 1`,
/// `sum_{j=1}^{i} k!(2i-1)! / ((i-j)!(2j-1)!(k-i-j+1)!) (t^2-t)^{k-i-j+1} (2t-1)^{2j-1}`.
/// Terms with a negative factorial argument vanish.
pub fn expansion_odd(k: u32, i: u32) -> RatPoly {
    let (k, i) = (k as i64, i as i64);
    (1..=i).fold(RatPoly::zero(), |acc, j| {
        match frac_factorial(&[k, 2 * i - 1], &[i - j, 2 * j - 1, k - i - j + 1]) {
            None => acc,
            Some(c) => {
                let term = &t_sq_minus_t().pow((k - i - j + 1) as u32) * &two_t_minus_one().pow((2 * j - 1) as u32);
                &acc + &term.scale(&c)
            }
        }
    })
}

/// Expansion of `h_k^{(2i)}`,
/// `sum_{j=0}^{i} k!(2i)! / ((i-j)!(2j)!(k-i-j)!) (t^2-t)^{k-i-j} (2t-1)^{2j}`.
pub fn expansion_even(k: u32, i: u32) -> RatPoly {
    let (k, i) = (k as i64, i as i64);
    (0..=i).fold(RatPoly::zero(), |acc, j| {
        match frac_factorial(&[k, 2 * i], &[i - j, 2 * j, k - i - j]) {
            None => acc,
            Some(c) => {
                let term = &t_sq_minus_t().pow((k - i - j) as u32) * &two_t_minus_one().pow((2 * j) as u32);
                &acc + &term.scale(&c)
            }
        }
    })
}

/// `H_l` itself, of degree `2l - 4`.
pub fn upper_h(l: u32) -> Result<RatPoly, CatalogError> {
    check_rank(l)?;
    let li = l as i64;
    let quad = RatPoly::from_ints(&[li - 2, -(3 * li - 4), 3 * li - 4]);
    Ok(&t_sq_minus_t().pow(l - 3) * &quad)
}

/// `H_l^{(i)}`.
pub fn upper_h_deriv(l: u32, i: u32) -> Result<RatPoly, CatalogError> {
    Ok(upper_h(l)?.derivative(i as usize))
}

/// `(-1)^{l-3} / (l-2)!`.
fn h_prefactor(l: u32) -> Rational {
    sign_pow(l as i64 - 3) / BigRational::from_integer(factorial(l as u64 - 2))
}

/// `(-1)^{l-3}/(l-2)! [ (1-t) H^{(l-3)} - (l-3) H^{(l-4)} ]`.
pub fn fplus_d_from_h(l: u32) -> Result<RatPoly, CatalogError> {
    let h3 = upper_h_deriv(l, l - 3)?;
    let h4 = upper_h_deriv(l, l - 4)?;
    let body = &(&RatPoly::from_ints(&[1, -1]) * &h3) - &h4.scale(&int(l as i64 - 3));
    Ok(body.scale(&h_prefactor(l)))
}

/// `(1/(l-2)!) d^{l-3}[ t^{l-3} (1-t)^{l-3} (1-2t) ((l-2) - (3l-4)t + (3l-4)t^2) ]`.
pub fn tilde_f_d_rodrigues(l: u32) -> Result<RatPoly, CatalogError> {
    check_rank(l)?;
    let li = l as i64;
    let quad = RatPoly::from_ints(&[li - 2, -(3 * li - 4), 3 * li - 4]);
    let body = &(&RatPoly::from_ints(&[0, 1, -1]).pow(l - 3) * &RatPoly::from_ints(&[1, -2])) * &quad;
    Ok(body
        .derivative(l as usize - 3)
        .scale(&BigRational::new(BigInt::from(1), factorial(l as u64 - 2))))
}

/// `f~_{D_l}`, the symmetrised companion of `f_{D_l}`.
///
/// Evaluated three ways (the defining H-derivative form, the single
/// derivative form and `((l+2)/l) f_{D_l} - (2/l) f_{B_l}`); any disagreement
/// is reported as [`CatalogError::IdentityMismatch`].
pub fn tilde_f_d(l: u32) -> Result<RatPoly, CatalogError> {
    let h3 = upper_h_deriv(l, l - 3)?;
    let h4 = upper_h_deriv(l, l - 4)?;
    let li = l as i64;
    let by_h = (&(&RatPoly::from_ints(&[1, -2]) * &h3) - &h4.scale(&int(2 * (li - 3)))).scale(&h_prefactor(l));
    let by_rodrigues = tilde_f_d_rodrigues(l)?;
    let by_fd = &f_d(l).scale(&ratio(li + 2, li)) - &f_b(l).scale(&ratio(2, li));
    if by_h != by_rodrigues {
        return Err(CatalogError::IdentityMismatch(format!(
            "f~_D{l}: H form vs derivative form"
        )));
    }
    if by_rodrigues != by_fd {
        return Err(CatalogError::IdentityMismatch(format!(
            "f~_D{l}: derivative form vs f_D/f_B form"
        )));
    }
    Ok(by_fd)
}

/// `K_l = (-1)^{l-3}/(l-2)! [ t H^{(l-3)} + (l-3) H^{(l-4)} ]`, checked against
/// `f+_{D_l} - f~_{D_l}`.
pub fn k_poly(l: u32) -> Result<RatPoly, CatalogError> {
    let h3 = upper_h_deriv(l, l - 3)?;
    let h4 = upper_h_deriv(l, l - 4)?;
    let k = (&(&RatPoly::var() * &h3) + &h4.scale(&int(l as i64 - 3))).scale(&h_prefactor(l));
    let diff = &fplus_d_via_b(l) - &tilde_f_d(l)?;
    if k != diff {
        return Err(CatalogError::IdentityMismatch(format!("K_{l} != f+_D{l} - f~_D{l}")));
    }
    Ok(k)
}
