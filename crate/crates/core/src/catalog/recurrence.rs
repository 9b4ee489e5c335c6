//! Three- and four-term recurrences for the A, B and D series.

use super::RootSystemType;
use crate::error::CatalogError;
use crate::rational::{int, ratio};
use crate::{RatPoly, Rational};

fn one_minus_two_t() -> RatPoly {
    RatPoly::from_ints(&[1, -2])
}

/// `f_{A_{l+2}} = [(2l+5)(1-2t) f_{A_{l+1}} - (l+1) f_{A_l}] / (l+4)`.
pub fn recurrence_step_a(l: u32, f_l: &RatPoly, f_lp1: &RatPoly) -> RatPoly {
    let l = l as i64;
    let lead = (&one_minus_two_t() * f_lp1).scale(&int(2 * l + 5));
    (&lead - &f_l.scale(&int(l + 1))).scale(&ratio(1, l + 4))
}

/// `f_{B_{l+2}} = [(2l+3)(1-2t) f_{B_{l+1}} - (l+1) f_{B_l}] / (l+2)`.
pub fn recurrence_step_b(l: u32, f_l: &RatPoly, f_lp1: &RatPoly) -> RatPoly {
    let l = l as i64;
    let lead = (&one_minus_two_t() * f_lp1).scale(&int(2 * l + 3));
    (&lead - &f_l.scale(&int(l + 1))).scale(&ratio(1, l + 2))
}

/// The seven rational functions of `l` in the D-series recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DRecurrenceCoefficients {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
}

impl DRecurrenceCoefficients {
    pub fn at(l: u32) -> Self {
        let l = l as i64;
        let den3 = (l - 1) * (l + 3) * (5 * l + 4);
        let den2 = (l + 3) * (5 * l + 4);
        let ab = (l + 1) * (5 * l * l + 4 * l - 21);
        let de = 4 * l * (2 * l + 1) * (5 * l + 9);
        let fg = (l + 1) * (5 * l + 9);
        Self {
            a: ratio(ab, den3),
            b: ratio(-2 * ab, den3),
            c: ratio(l * (5 * l * l + 14 * l + 5), den3),
            d: ratio(-de, den3),
            e: ratio(de, den3),
            f: ratio(-fg, den2),
            g: ratio(2 * fg, den2),
        }
    }
}

/// `f_{D_{l+3}} = (a + b t) f_{D_{l+2}} + (c + d t + e t^2) f_{D_{l+1}} + (f + g t) f_{D_l}`.
pub fn recurrence_step_d(l: u32, f_l: &RatPoly, f_lp1: &RatPoly, f_lp2: &RatPoly) -> Result<RatPoly, CatalogError> {
    RootSystemType::D(l).validate()?;
    let k = DRecurrenceCoefficients::at(l);
    let p2 = RatPoly::from_coeffs(vec![k.a, k.b]);
    let p1 = RatPoly::from_coeffs(vec![k.c, k.d, k.e]);
    let p0 = RatPoly::from_coeffs(vec![k.f, k.g]);
    Ok(&(&(&p2 * f_lp2) + &(&p1 * f_lp1)) + &(&p0 * f_l))
}

/// The series `[f_{P_lo}, ..., f_{P_hi}]` generated by the recurrence from its
/// smallest seeds. A and B start from `f_0 = 1`, `f_1 = 1 - 2t`; D starts from
/// the three literal polynomials for `D_4, D_5, D_6`.
pub fn recurrence_series(family: &str, hi: u32) -> Result<Vec<(u32, RatPoly)>, CatalogError> {
    match family {
        "A" | "B" => {
            let step = if family == "A" {
                recurrence_step_a
            } else {
                recurrence_step_b
            };
            let mut out = vec![(0, RatPoly::one()), (1, one_minus_two_t())];
            for l in 0..hi.saturating_sub(1) {
                let next = step(l, &out[l as usize].1, &out[l as usize + 1].1);
                out.push((l + 2, next));
            }
            out.retain(|(l, _)| *l >= 1 && *l <= hi);
            Ok(out)
        }
        "D" => {
            let mut out = vec![
                (4, RatPoly::from_ints(&[1, -16, 66, -100, 50])),
                (5, RatPoly::from_ints(&[1, -25, 160, -410, 455, -182])),
                (6, RatPoly::from_ints(&[1, -36, 330, -1260, 2310, -2016, 672])),
            ];
            for l in 4..hi.saturating_sub(2) {
                let i = (l - 4) as usize;
                let next = recurrence_step_d(l, &out[i].1, &out[i + 1].1, &out[i + 2].1)?;
                out.push((l + 3, next));
            }
            out.retain(|(l, _)| *l <= hi);
            Ok(out)
        }
        other => Err(CatalogError::UnsupportedType(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::f_poly;
    use RootSystemType::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn step_examples() {
        assert_eq!(
            recurrence_step_b(1, &p(&[1, -2]), &p(&[1, -6, 6])),
            p(&[1, -12, 30, -20])
        );
        assert_eq!(
            recurrence_step_a(1, &p(&[1, -2]), &p(&[1, -5, 5])),
            f_poly(A(3)).unwrap()
        );
        let d = |l| f_poly(D(l)).unwrap();
        assert_eq!(recurrence_step_d(4, &d(4), &d(5), &d(6)).unwrap(), d(7));
        assert!(recurrence_step_d(3, &d(4), &d(5), &d(6)).is_err());
    }

    #[test]
    fn coefficient_patterns() {
        for l in 4..40 {
            let k = DRecurrenceCoefficients::at(l);
            assert_eq!(k.b, -&k.a * int(2));
            assert_eq!(k.e, -k.d.clone());
            assert_eq!(k.g, -&k.f * int(2));
        }
    }

    #[test]
    fn d_seeds_match_closed_form() {
        for (l, q) in recurrence_series("D", 6).unwrap() {
            assert_eq!(q, f_poly(D(l)).unwrap());
        }
    }

    #[test]
    fn b_series_reproduces_table_to_fifty() {
        for (l, q) in recurrence_series("B", 50).unwrap() {
            assert_eq!(q, f_poly(B(l)).unwrap(), "B{l}");
        }
    }
}
