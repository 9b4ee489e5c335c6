//! Third-order Fuchsian operators annihilating `f_{D_l}` and `f+_{D_l}/(1-t)`.
//!
//! The residual is returned as a polynomial; it is identically zero exactly
//! when the equation holds.

use super::{f_d, fplus_d_via_b, RootSystemType};
use crate::error::CatalogError;
use crate::RatPoly;

fn apply(coeffs: [RatPoly; 4], y: &RatPoly) -> RatPoly {
    coeffs.iter().enumerate().fold(RatPoly::zero(), |acc, (order, c)| {
        &acc + &(c * &y.derivative(3 - order))
    })
}

/// `t(t-1)(2t-1) y''' + ((l+6)(t^2-t)+2) y'' - l(l-1)(2t-1) y' - l(l-1)(l+2) y`
/// evaluated at `y = f_{D_l}`.
pub fn fuchsian_residual_d(l: u32) -> Result<RatPoly, CatalogError> {
    RootSystemType::D(l).validate()?;
    let li = l as i64;
    let c3 = RatPoly::from_ints(&[0, 1, -3, 2]);
    let c2 = RatPoly::from_ints(&[2, -(li + 6), li + 6]);
    let c1 = RatPoly::from_ints(&[li * (li - 1), -2 * li * (li - 1)]);
    let c0 = RatPoly::from_ints(&[-li * (li - 1) * (li + 2)]);
    Ok(apply([c3, c2, c1, c0], &f_d(l)))
}

/// `t(t-1)(2(l-1)t - l) y''' + ((l+8)(l-1)t^2 - (l^2+6l-2)t + 2l) y''
///  - ((l-1)(2l^2-5l-2)t - (l^3-2l^2-l-2)) y' - (l-1)^3 (l+2) y`
/// evaluated at `y = f+_{D_l} / (1-t)`.
pub fn fuchsian_residual_nhat(l: u32) -> Result<RatPoly, CatalogError> {
    RootSystemType::D(l).validate()?;
    let li = l as i64;
    let y = fplus_d_via_b(l).exact_divide(&RatPoly::from_ints(&[1, -1]))?;
    // t(t-1) = -t + t^2, times (-l + 2(l-1)t)
    let c3 = &RatPoly::from_ints(&[0, -1, 1]) * &RatPoly::from_ints(&[-li, 2 * (li - 1)]);
    let c2 = RatPoly::from_ints(&[2 * li, -(li * li + 6 * li - 2), (li + 8) * (li - 1)]);
    let c1 = RatPoly::from_ints(&[
        li * li * li - 2 * li * li - li - 2,
        -(li - 1) * (2 * li * li - 5 * li - 2),
    ]);
    let c0 = RatPoly::from_ints(&[-(li - 1).pow(3) * (li + 2)]);
    Ok(apply([c3, c2, c1, c0], &y))
}
