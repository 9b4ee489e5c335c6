//! Certified rational enclosures of `pi` and of `cos` on `[0, pi]`.
//!
//! Both come from alternating series whose terms decrease in magnitude, so a
//! partial sum is off by at most the first omitted term. Results are rounded
//! outward to a dyadic grid to keep the numbers short.

use num_traits::{One, Zero};

use crate::rational::{dyadic_bounds, int, pow2_neg, ratio};
use crate::Rational;

/// Working precision in bits.
pub const BITS: u32 = 96;

/// Closed enclosure `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    fn rounded(lo: Rational, hi: Rational) -> Self {
        Self {
            lo: dyadic_bounds(&lo, BITS).0,
            hi: dyadic_bounds(&hi, BITS).1,
        }
    }
}

/// `atan(1/n)` for `n >= 2`.
fn atan_inv(n: i64) -> Enclosure {
    let x = ratio(1, n);
    let x2 = &x * &x;
    let eps = pow2_neg(BITS + 8);
    let mut power = x.clone();
    let mut sum = Rational::zero();
    let mut k = 0i64;
    loop {
        let term = &power / int(2 * k + 1);
        if term < eps {
            // `term` is the first omitted term; its sign is (-1)^k
            return Enclosure::rounded(&sum - &term, &sum + &term);
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power *= &x2;
        k += 1;
    }
}

/// `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi() -> Enclosure {
    let a = atan_inv(5);
    let b = atan_inv(239);
    Enclosure::rounded(int(16) * &a.lo - int(4) * &b.hi, int(16) * &a.hi - int(4) * &b.lo)
}

/// Two-sided bound on `cos(x)` for a rational `0 <= x <= 4`.
fn cos_point(x: &Rational) -> Enclosure {
    let x2 = x * x;
    let eps = pow2_neg(BITS + 8);
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    let mut k = 0i64;
    loop {
        // from k >= 2 on, |term| shrinks by x^2/((2k+1)(2k+2)) < 1 for x <= 4
        if k >= 2 && term < eps {
            return Enclosure::rounded(&sum - &term, &sum + &term);
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        term = term * &x2 / int((2 * k + 1) * (2 * k + 2));
        k += 1;
    }
}

/// Enclosure of `cos(c * pi)` for a rational `0 <= c <= 1`.
///
/// `cos` is decreasing on `[0, pi]`, so the image of the angle enclosure is
/// bounded by the cosines of its two ends.
pub fn cos_pi_multiple(c: &Rational) -> Enclosure {
    assert!(c >= &Rational::zero() && c <= &Rational::one(), "angle outside [0, pi]");
    let p = pi();
    let lo_angle = dyadic_bounds(&(c * &p.lo), BITS).0.max(Rational::zero());
    let hi_angle = dyadic_bounds(&(c * &p.hi), BITS).1;
    let upper = cos_point(&lo_angle).hi;
    let lower = cos_point(&hi_angle).lo;
    Enclosure { lo: lower, hi: upper }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn pi_is_enclosed_tightly() {
        let p = pi();
        assert!(p.width() < pow2_neg(80));
        assert!(p.lo.approx() <= std::f64::consts::PI && std::f64::consts::PI <= p.hi.approx());
        // 355/113 exceeds pi by about 2.7e-7
        assert!(p.hi < ratio(355, 113));
        assert!(p.lo > ratio(333, 106));
    }

    #[test]
    fn cosine_at_known_angles() {
        let zero = cos_pi_multiple(&int(0));
        assert!(zero.contains(&int(1)));
        let third = cos_pi_multiple(&ratio(1, 3));
        assert!(third.contains(&ratio(1, 2)));
        assert!(third.width() < pow2_neg(80));
        let half = cos_pi_multiple(&ratio(1, 2));
        assert!(half.contains(&int(0)));
        let full = cos_pi_multiple(&int(1));
        assert!(full.contains(&int(-1)));
        for k in 0..=12 {
            let c = ratio(k, 12);
            let e = cos_pi_multiple(&c);
            let f = (k as f64 * std::f64::consts::PI / 12.0).cos();
            assert!((e.lo.approx() - f).abs() < 1e-12 && (e.hi.approx() - f).abs() < 1e-12);
            assert!(e.lo <= e.hi);
        }
    }
}
