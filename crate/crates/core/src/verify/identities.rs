//! Exact polynomial identities among the catalog families.

use rayon::prelude::*;

use super::{Checker, Report, WitnessValue};
use crate::catalog::{
    binomial, expansion_even, expansion_odd, f_from_h, f_poly, formula_b_at_half, formula_c_at_zero, fplus_d_from_h,
    fplus_poly, fuchsian_residual_d, fuchsian_residual_nhat, h_deriv, h_poly, jacobi_shifted, k_poly,
    recurrence_series, rodrigues_f, rodrigues_fplus_d, tilde_f_d, tilde_f_d_rodrigues, upper_h_deriv, RootSystemType,
    TABULATED_TYPES,
};
use crate::catalog::{f_b, f_d};
use crate::rational::{int, ratio};
use crate::{RatPoly, Rational};

use RootSystemType::{A, B, D};

fn alternating(coeffs: impl Iterator<Item = Rational>) -> RatPoly {
    RatPoly::from_coeffs(
        coeffs
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c } else { -c })
            .collect(),
    )
}

/// Binomial table of the A-type f+ polynomial,
/// `sum_k (-1)^k (1/L) C(L, k) C(L + k, k + 1) t^k`.
fn fplus_a_table(big_l: i64) -> RatPoly {
    alternating((0..=big_l).map(|k| Rational::new(binomial(big_l, k) * binomial(big_l + k, k + 1), big_l.into())))
}

/// Binomial table of the B-type f+ polynomial, `sum_k (-1)^k C(l, k) C(l+k-1, k) t^k`.
fn fplus_b_table(l: i64) -> RatPoly {
    alternating((0..=l).map(|k| Rational::from_integer(binomial(l, k) * binomial(l + k - 1, k))))
}

fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// One rank's worth of identities; returns `(label, lhs - rhs)` for every
/// identity that applies at this `l`.
fn identities_at(l: u32) -> Vec<(String, RatPoly)> {
    let li = l as i64;
    let one_minus_t = RatPoly::from_ints(&[1, -1]);
    let one_minus_2t = RatPoly::from_ints(&[1, -2]);
    let mut out: Vec<(String, RatPoly)> = Vec::new();
    let mut push = |label: String, lhs: RatPoly, rhs: RatPoly| out.push((label, &lhs - &rhs));
    let f_a = f_poly(A(l)).expect("valid");
    let f_bl = f_poly(B(l)).expect("valid");

    push(
        format!("A{l}: (1-t) f_A = f+_A(l+1)"),
        &one_minus_t * &f_a,
        fplus_a_table(li + 1),
    );
    push(
        format!("A{l}: f+ table"),
        fplus_poly(A(l)).expect("valid"),
        fplus_a_table(li),
    );
    push(
        format!("A{l}: shifted Jacobi (1,1)"),
        f_a.clone(),
        jacobi_shifted(l, 1, 1).expect("exact").scale(&(sign(li) / int(li + 1))),
    );
    push(
        format!("A{l}: h-transform"),
        f_a.clone(),
        f_from_h(&h_poly(A(l)).expect("valid"), l),
    );
    push(
        format!("B{l}: shifted Legendre"),
        f_bl.clone(),
        jacobi_shifted(l, 0, 0).expect("exact").scale(&sign(li)),
    );
    push(
        format!("B{l}: h-transform"),
        f_bl.clone(),
        f_from_h(&h_poly(B(l)).expect("valid"), l),
    );
    if l >= 2 {
        push(
            format!("B{l}: f_B + f_B(l-1) = 2 f+_B"),
            &f_bl + &f_b(l - 1),
            fplus_b_table(li).scale(&int(2)),
        );
        push(
            format!("B{l}: f+ table"),
            fplus_poly(B(l)).expect("valid"),
            fplus_b_table(li),
        );
    }
    if l >= 4 {
        let f_dl = f_poly(D(l)).expect("valid");
        let p_l = jacobi_shifted(l, 0, 0).expect("exact");
        let p_l1 = jacobi_shifted(l - 1, 0, 0).expect("exact");
        let c1 = ratio(li - 2, 2 * (li - 1));
        let c2 = ratio(li, 2 * (li - 1));
        push(
            format!("D{l}: B decomposition"),
            f_dl.clone(),
            &f_bl.scale(&c1) + &(&one_minus_2t * &f_b(l - 1)).scale(&c2),
        );
        push(
            format!("D{l}: shifted Jacobi (1,0), (0,2)"),
            f_dl.clone(),
            &(&one_minus_t * &jacobi_shifted(l - 1, 1, 0).expect("exact")).scale(&sign(li - 1))
                + &(&RatPoly::var().pow(2) * &jacobi_shifted(l - 2, 0, 2).expect("exact")).scale(&sign(li)),
        );
        push(
            format!("D{l}: Legendre decomposition"),
            f_dl.scale(&sign(li)),
            &p_l.scale(&c1) - &(&one_minus_2t * &p_l1).scale(&c2),
        );
        push(
            format!("D{l}: h-transform"),
            f_dl.clone(),
            f_from_h(&h_poly(D(l)).expect("valid"), l),
        );
        let fplus = fplus_poly(D(l)).expect("valid");
        push(
            format!("D{l}: f+ derivative form"),
            fplus.clone(),
            rodrigues_fplus_d(l).expect("valid"),
        );
    }
    if l >= 5 {
        let fplus = fplus_poly(D(l)).expect("valid");
        match tilde_f_d(l) {
            Ok(ft) => {
                push(
                    format!("D{l}: f~ derivative form"),
                    ft.clone(),
                    tilde_f_d_rodrigues(l).expect("valid"),
                );
                push(
                    format!("D{l}: f~ through f_D and f_B"),
                    ft.clone(),
                    &f_d(l).scale(&ratio(li + 2, li)) - &f_bl.scale(&ratio(2, li)),
                );
                push(
                    format!("D{l}: f~ symmetry"),
                    ft.clone(),
                    ft.compose_affine(&int(-1), &int(1)).scale(&sign(li)),
                );
                let h3 = upper_h_deriv(l, l - 3).expect("valid");
                let pre = sign(li - 3) / Rational::from_integer(crate::catalog::factorial(l as u64 - 2));
                push(
                    format!("D{l}: 2 f+ = f~ + c H^(l-3)"),
                    fplus.scale(&int(2)),
                    &ft + &h3.scale(&pre),
                );
            }
            Err(e) => push(format!("D{l}: f~ ({e})"), RatPoly::one(), RatPoly::zero()),
        }
        push(
            format!("D{l}: f+ through H"),
            fplus.clone(),
            fplus_d_from_h(l).expect("valid"),
        );
        if let Err(e) = k_poly(l) {
            push(format!("D{l}: K ({e})"), RatPoly::one(), RatPoly::zero());
        }
    }
    out
}

/// Residual polynomials of the two third-order equations for D.
fn ode_residuals(l: u32) -> Vec<(String, RatPoly)> {
    vec![
        (format!("D{l}: ODE for f_D"), fuchsian_residual_d(l).expect("valid")),
        (
            format!("D{l}: ODE for f+_D/(1-t)"),
            fuchsian_residual_nhat(l).expect("valid"),
        ),
    ]
}

/// `h_k^(i)(1/2)` and the two expansions of `h_k^(i)` against direct
/// differentiation.
fn half_point_values(k: u32) -> Vec<(String, RatPoly)> {
    let half = ratio(1, 2);
    let mut out = Vec::new();
    for i in 0..=2 * k {
        let direct = h_deriv(k, i).eval(&half);
        let closed = formula_b_at_half(k, i);
        out.push((format!("h_{k}^({i})(1/2)"), RatPoly::constant(direct - closed)));
    }
    for i in 0..=k {
        out.push((
            format!("h_{k}^({}) expansion", 2 * i),
            &expansion_even(k, i) - &h_deriv(k, 2 * i),
        ));
        if i >= 1 {
            out.push((
                format!("h_{k}^({}) expansion", 2 * i - 1),
                &expansion_odd(k, i) - &h_deriv(k, 2 * i - 1),
            ));
        }
    }
    for m in [k, k.saturating_sub(1)] {
        if let Some(v) = formula_c_at_zero(k, m) {
            out.push((
                format!("h_{k}^({m})(0)"),
                RatPoly::constant(h_deriv(k, m).eval(&int(0)) - v),
            ));
        }
    }
    out
}

/// Every catalog identity for ranks up to `l_max`, the D equations up to
/// `l_max`, the half-point values of `h_k^(i)` for `k <= l_max`, and the
/// h-transform of the tabulated types. Pass iff every difference is the zero
/// polynomial.
pub fn verify_identities(l_max: u32) -> Report {
    let mut c = Checker::new("identities").param("lmax", l_max);
    let mut items: Vec<(String, RatPoly)> = (1..=l_max).into_par_iter().flat_map_iter(identities_at).collect();
    items.extend(
        (4..=l_max)
            .into_par_iter()
            .flat_map_iter(ode_residuals)
            .collect::<Vec<_>>(),
    );
    items.extend(
        (1..=l_max)
            .into_par_iter()
            .flat_map_iter(half_point_values)
            .collect::<Vec<_>>(),
    );
    for ty in TABULATED_TYPES {
        let f = f_poly(ty).expect("valid");
        items.push((
            format!("{ty}: h-transform"),
            &f - &f_from_h(&h_poly(ty).expect("valid"), ty.rank()),
        ));
    }
    // K'(0) = l - 2 rides along with the identities
    for l in 5..=l_max {
        if let Ok(k) = k_poly(l) {
            let d0 = k.derivative(1).eval(&int(0));
            items.push((format!("D{l}: K'(0) = l-2"), RatPoly::constant(d0 - int(l as i64 - 2))));
        }
    }
    for (label, diff) in &items {
        c.zero_poly(label.clone(), diff);
    }
    c.witness("identities", WitnessValue::Count(items.len() as u64));
    c.finish()
}

/// Closed form, derivative form and recurrence agree for A and B up to
/// `ab_max` and for D up to `d_max`.
pub fn verify_constructions(ab_max: u32, d_max: u32) -> Report {
    let mut c = Checker::new("constructions")
        .param("ab_max", ab_max)
        .param("d_max", d_max);
    let mut compared = 0u64;
    for (family, hi) in [("A", ab_max), ("B", ab_max), ("D", d_max)] {
        let series = match recurrence_series(family, hi) {
            Ok(s) => s,
            Err(e) => {
                c.fail(format!("{family}: recurrence"), WitnessValue::Text(e.to_string()));
                continue;
            }
        };
        let rows: Vec<_> = series
            .into_par_iter()
            .map(|(l, by_recurrence)| {
                let ty = RootSystemType::from_parts(family, Some(l)).expect("valid");
                (ty, f_poly(ty).expect("valid"), rodrigues_f(ty), by_recurrence)
            })
            .collect();
        for (ty, closed, by_derivative, by_recurrence) in rows {
            match by_derivative {
                Ok(d) => {
                    c.same_poly(format!("{ty}: derivative form"), &closed, &d);
                }
                Err(e) => c.fail(format!("{ty}: derivative form"), WitnessValue::Text(e.to_string())),
            }
            c.same_poly(format!("{ty}: recurrence"), &closed, &by_recurrence);
            compared += 1;
        }
    }
    c.witness("ranks compared", WitnessValue::Count(compared));
    c.finish()
}
