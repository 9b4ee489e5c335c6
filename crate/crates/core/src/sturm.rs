//! Exact real-root machinery: Sturm chains, root counting, isolation,
//! refinement and comparison of roots of different polynomials.
//!
//! Root counts are over the half-open interval `(a, b]` and require the
//! polynomial to be nonzero at both endpoints; known rational roots at the
//! endpoints are divided out first where the caller asks for it.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SturmError;
use crate::rational::{self, ratio};
use crate::{RatPoly, Rational};

/// Integer polynomial used for fast exact sign evaluation at rationals.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    /// `p` must already have integer coefficients.
    fn from_integral(p: &RatPoly) -> Self {
        Self(p.coeffs().iter().map(|c| c.to_integer()).collect())
    }

    /// Sign of `p(n/d)` for `d > 0`, via the homogenised Horner scheme
    /// `sum c_k n^k d^{m-k}`.
    fn sign_at(&self, x: &Rational) -> i8 {
        let (n, d) = (x.numer(), x.denom());
        let mut it = self.0.iter().rev();
        let Some(lead) = it.next() else { return 0 };
        let mut acc = lead.clone();
        let mut dpow = BigInt::one();
        for c in it {
            dpow *= d;
            acc = acc * n + c * &dpow;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

/// `p, p', -rem(p, p'), ...`, each member rescaled by a positive rational to
/// a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<RatPoly>,
    ints: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<Self, SturmError> {
        if p.is_zero() {
            return Err(SturmError::ZeroPolynomial);
        }
        let mut polys = vec![p.primitive_part()];
        let d = p.derivative(1);
        if !d.is_zero() {
            polys.push(d.primitive_part());
        }
        while polys.len() >= 2 {
            let n = polys.len();
            let (_, r) = polys[n - 2].divrem(&polys[n - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push((-r).primitive_part());
        }
        let ints = polys.iter().map(IntPoly::from_integral).collect();
        Ok(Self { polys, ints })
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }

    /// The last member is a nonzero constant exactly when `p` is square-free.
    pub fn ends_in_constant(&self) -> bool {
        self.polys.last().is_some_and(|p| p.degree() == Some(0))
    }

    /// Sign changes in `(c_0(x), c_1(x), ...)` with zeros dropped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.ints {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> Result<usize, SturmError> {
        if a >= b {
            return Err(SturmError::EmptyInterval);
        }
        for x in [a, b] {
            if self.ints[0].sign_at(x) == 0 {
                return Err(SturmError::EndpointRoot(rational::to_string(x)));
            }
        }
        Ok(self.variations_at(a) - self.variations_at(b))
    }

    fn sign_of_base(&self, x: &Rational) -> i8 {
        self.ints[0].sign_at(x)
    }
}

pub fn sturm_chain(p: &RatPoly) -> Result<SturmChain, SturmError> {
    SturmChain::new(p)
}

pub fn variations_at(chain: &SturmChain, x: &Rational) -> usize {
    chain.variations_at(x)
}

/// Distinct real roots of `p` in `(a, b]`; `p` must not vanish at `a` or `b`.
pub fn count_roots(p: &RatPoly, a: &Rational, b: &Rational) -> Result<usize, SturmError> {
    SturmChain::new(p)?.count(a, b)
}

/// Divides out every root of `p` at `a` and at `b`, then counts the distinct
/// roots in the open interval `(a, b)`.
pub fn count_roots_open(p: &RatPoly, a: &Rational, b: &Rational) -> Result<usize, SturmError> {
    let (q, _) = p.deflate(a);
    let (q, _) = q.deflate(b);
    count_roots(&q, a, b)
}

/// Open rational interval `(lo, hi)`, `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, SturmError> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(SturmError::EmptyInterval)
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Strict containment in the open interval.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Serde adapter writing rationals as `"num/den"` strings.
pub mod rational_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Rational;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::rational::to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::rational::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// One simple real root of `poly`, certified by a sign change at the
/// endpoints of `interval` and a Sturm count of one.
///
/// When bisection lands exactly on the root, the rational value is kept in
/// `exact` and the interval is shrunk symmetrically around it.
#[derive(Clone, Debug)]
pub struct RootBox {
    poly: Arc<RatPoly>,
    interval: Interval,
    sign_lo: i8,
    exact: Option<Rational>,
}

impl RootBox {
    /// Box for the rational number `r`, as the root of `t - r`.
    pub fn rational(r: Rational) -> Self {
        let poly = Arc::new(RatPoly::from_coeffs(vec![-r.clone(), Rational::one()]));
        let half = ratio(1, 2);
        let interval = Interval {
            lo: &r - &half,
            hi: &r + &half,
        };
        Self {
            poly,
            interval,
            sign_lo: -1,
            exact: Some(r),
        }
    }

    fn from_parts(poly: Arc<RatPoly>, interval: Interval) -> Self {
        let sign_lo = poly.sign_at(&interval.lo);
        debug_assert!(sign_lo != 0);
        Self {
            poly,
            interval,
            sign_lo,
            exact: None,
        }
    }

    fn exact_at(poly: Arc<RatPoly>, r: Rational, half_width: Rational) -> Self {
        let interval = Interval {
            lo: &r - &half_width,
            hi: &r + &half_width,
        };
        let sign_lo = poly.sign_at(&interval.lo);
        Self {
            poly,
            interval,
            sign_lo,
            exact: Some(r),
        }
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// The root itself when it is known to be this rational number.
    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn approx(&self) -> f64 {
        use crate::scalar::Scalar;
        match &self.exact {
            Some(r) => r.approx(),
            None => self.interval.midpoint().approx(),
        }
    }

    /// Checks the defining invariants from scratch.
    pub fn is_valid(&self) -> bool {
        let lo = self.poly.sign_at(&self.interval.lo);
        let hi = self.poly.sign_at(&self.interval.hi);
        lo != 0 && hi != 0 && lo != hi && count_roots(&self.poly, &self.interval.lo, &self.interval.hi).ok() == Some(1)
    }

    /// Halves the box once.
    fn bisect(&mut self) {
        if let Some(r) = &self.exact {
            let quarter = self.interval.width() / BigRational::from_integer(4.into());
            self.interval = Interval {
                lo: r - &quarter,
                hi: r + &quarter,
            };
            self.sign_lo = self.poly.sign_at(&self.interval.lo);
            return;
        }
        let m = self.interval.midpoint();
        let s = self.poly.sign_at(&m);
        if s == 0 {
            let quarter = self.interval.width() / BigRational::from_integer(4.into());
            *self = Self::exact_at(self.poly.clone(), m, quarter);
        } else if s == self.sign_lo {
            self.interval.lo = m;
        } else {
            self.interval.hi = m;
        }
    }

    /// Narrows the box until its width is below `eps`.
    pub fn refine(&self, eps: &Rational) -> Self {
        let mut out = self.clone();
        while &out.interval.width() >= eps {
            out.bisect();
        }
        out
    }

    /// Collapses the box onto its root when that root is rational.
    ///
    /// A rational root of a primitive integer polynomial is a multiple of
    /// `1 / a_n`, with `a_n` the leading coefficient, so once the box is
    /// narrower than `1 / a_n` a single candidate decides the question.
    pub fn snap_rational(&self) -> Self {
        if self.exact.is_some() {
            return self.clone();
        }
        let prim = self.poly.primitive_part();
        let lead = match prim.leading() {
            Some(c) => c.numer().abs(),
            None => return self.clone(),
        };
        let step = BigRational::new(BigInt::one(), lead.clone());
        let box_ = self.refine(&step);
        if box_.exact.is_some() {
            return box_;
        }
        let lead = BigRational::from_integer(lead);
        let candidate = (&box_.interval.lo * &lead).floor() + BigRational::one();
        let candidate = candidate / &lead;
        if candidate < box_.interval.hi && self.poly.sign_at(&candidate) == 0 {
            let quarter = box_.interval.width() / BigRational::from_integer(4.into());
            return Self::exact_at(self.poly.clone(), candidate, quarter);
        }
        box_
    }

    /// Which side of `x` the root lies on, decided exactly.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if let Some(r) = &self.exact {
            return r.cmp(x);
        }
        if x <= &self.interval.lo {
            return Ordering::Greater;
        }
        if x >= &self.interval.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(x);
        if s == 0 {
            Ordering::Equal
        } else if s == self.sign_lo {
            // x is still left of the root
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl fmt::Display for RootBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}", self.interval),
        }
    }
}

/// Orders the roots of two boxes, possibly of different polynomials.
///
/// Both boxes are bisected until their intervals separate. If they keep
/// overlapping, the gcd of the two polynomials decides whether they share the
/// root in the overlap, which is the only way the loop could fail to end.
pub fn compare_roots(r1: &RootBox, r2: &RootBox) -> Ordering {
    let mut a = r1.clone();
    let mut b = r2.clone();
    let mut gcd_checked = false;
    let mut rounds = 0usize;
    loop {
        if let Some(x) = a.exact.clone() {
            return b.cmp_rational(&x).reverse();
        }
        if let Some(x) = b.exact.clone() {
            return a.cmp_rational(&x);
        }
        if a.interval.hi <= b.interval.lo {
            return Ordering::Less;
        }
        if b.interval.hi <= a.interval.lo {
            return Ordering::Greater;
        }
        // an endpoint of one box inside the other splits them cheaply
        for x in [b.interval.lo.clone(), b.interval.hi.clone()] {
            if a.interval.contains(&x) {
                match a.cmp_rational(&x) {
                    Ordering::Less => a.interval.hi = x,
                    Ordering::Greater => {
                        a.interval.lo = x;
                        a.sign_lo = a.poly.sign_at(&a.interval.lo);
                    }
                    Ordering::Equal => {
                        let w = a.interval.width() / BigRational::from_integer(4.into());
                        a = RootBox::exact_at(a.poly.clone(), x, w);
                        break;
                    }
                }
            }
        }
        if a.exact.is_some() || a.interval.is_disjoint(&b.interval) {
            continue;
        }
        rounds += 1;
        if !gcd_checked && rounds >= 24 {
            gcd_checked = true;
            if shares_root_in_overlap(&a, &b) {
                return Ordering::Equal;
            }
        }
        a.bisect();
        b.bisect();
    }
}

/// Whether `gcd(p1, p2)` has a root in the intersection of the two boxes,
/// which then is the root of both.
fn shares_root_in_overlap(a: &RootBox, b: &RootBox) -> bool {
    if Arc::ptr_eq(&a.poly, &b.poly) || a.poly == b.poly {
        let lo = (&a.interval.lo).max(&b.interval.lo).clone();
        let hi = (&a.interval.hi).min(&b.interval.hi).clone();
        // same square-free polynomial: overlapping isolating boxes hold the same root
        return lo < hi;
    }
    let g = a.poly.gcd(&b.poly);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    let lo = (&a.interval.lo).max(&b.interval.lo).clone();
    let hi = (&a.interval.hi).min(&b.interval.hi).clone();
    if lo >= hi {
        return false;
    }
    count_roots(&g.square_free_part(), &lo, &hi)
        .map(|n| n > 0)
        .unwrap_or(false)
}

/// Isolating boxes for the distinct real roots of `p` in `(a, b)`, in
/// increasing order. `p` must not vanish at `a` or `b`.
///
/// The boxes refer to the square-free part of `p`.
pub fn isolate_roots(p: &RatPoly, a: &Rational, b: &Rational) -> Result<Vec<RootBox>, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    let sf = Arc::new(p.square_free_part().primitive_part());
    let chain = SturmChain::new(&sf)?;
    let total = chain.count(a, b)?;
    let mut out = Vec::with_capacity(total);
    let mut work = vec![(a.clone(), b.clone(), total)];
    while let Some((lo, hi, n)) = work.pop() {
        match n {
            0 => {}
            1 => out.push(RootBox::from_parts(sf.clone(), Interval { lo, hi })),
            _ => {
                let m = (&lo + &hi) / BigRational::from_integer(2.into());
                if chain.sign_of_base(&m) == 0 {
                    let mut delta = (&hi - &lo) / BigRational::from_integer(4.into());
                    loop {
                        let l = &m - &delta;
                        let h = &m + &delta;
                        if chain.sign_of_base(&l) != 0 && chain.sign_of_base(&h) != 0 && chain.count(&l, &h)? == 1 {
                            break;
                        }
                        delta /= BigRational::from_integer(2.into());
                    }
                    let l = &m - &delta;
                    let h = &m + &delta;
                    let left = chain.count(&lo, &l)?;
                    let right = chain.count(&h, &hi)?;
                    out.push(RootBox::exact_at(sf.clone(), m, delta));
                    work.push((lo, l, left));
                    work.push((h, hi, right));
                } else {
                    let left = chain.count(&lo, &m)?;
                    work.push((lo, m.clone(), left));
                    work.push((m, hi, n - left));
                }
            }
        }
    }
    out.sort_by(|x, y| x.interval.lo.cmp(&y.interval.lo));
    Ok(out)
}

/// Roots of `p` in the closed interval `[a, b]`, increasing. Roots at the
/// endpoints are divided out and returned as exact boxes.
pub fn isolate_roots_closed(p: &RatPoly, a: &Rational, b: &Rational) -> Result<Vec<RootBox>, SturmError> {
    let (q, ma) = p.deflate(a);
    let (q, mb) = q.deflate(b);
    let mut out = Vec::new();
    if ma > 0 {
        out.push(RootBox::rational(a.clone()));
    }
    out.extend(isolate_roots(&q, a, b)?);
    if mb > 0 {
        out.push(RootBox::rational(b.clone()));
    }
    Ok(out)
}

/// Every real root of `p`, increasing, isolated inside the Cauchy bound
/// `1 + max |a_i / a_n|`.
pub fn isolate_real_roots(p: &RatPoly) -> Result<Vec<RootBox>, SturmError> {
    let lead = p.leading().ok_or(SturmError::ZeroPolynomial)?.clone();
    let bound = p
        .coeffs()
        .iter()
        .map(|c| (c / &lead).abs())
        .fold(Rational::zero(), |m, x| m.max(x))
        + Rational::one();
    isolate_roots_closed(p, &-bound.clone(), &bound)
}

/// Reverses into the decreasing order used for root labels (index 0 is the
/// largest root).
pub fn descending(mut boxes: Vec<RootBox>) -> Vec<RootBox> {
    boxes.reverse();
    boxes
}

/// `refine` as a free function.
pub fn refine(r: &RootBox, eps: &Rational) -> RootBox {
    r.refine(eps)
}

/// Default display precision, `2^-53`.
pub fn default_eps() -> Rational {
    rational::pow2_neg(53)
}

/// `true` if `x` is strictly between `lo` and `hi` as roots.
pub fn strictly_between(lo: &RootBox, x: &RootBox, hi: &RootBox) -> bool {
    compare_roots(lo, x) == Ordering::Less && compare_roots(x, hi) == Ordering::Less
}

/// Bounds `|x|` for a witness: the largest absolute endpoint.
pub fn magnitude_bound(r: &RootBox) -> Rational {
    r.interval.lo.abs().max(r.interval.hi.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{f_poly, h_poly, RootSystemType::*};
    use crate::rational::{int, pow2_neg};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn chain_shapes() {
        let c = sturm_chain(&p(&[1, -8, 8])).unwrap();
        assert_eq!(c.degrees(), vec![2, 1, 0]);
        assert!(c.ends_in_constant());
        let c = sturm_chain(&p(&[1, -4, 4])).unwrap();
        assert_eq!(c.polys().last().unwrap().degree(), Some(1));
        assert!(!c.ends_in_constant());
        let c = sturm_chain(&f_poly(E8).unwrap()).unwrap();
        assert_eq!(c.degrees(), (0..=8).rev().collect::<Vec<_>>());
        assert!(sturm_chain(&RatPoly::zero()).is_err());
    }

    #[test]
    fn variation_examples() {
        let c = sturm_chain(&p(&[1, -8, 8])).unwrap();
        assert_eq!(c.variations_at(&int(0)), 2);
        assert_eq!(c.variations_at(&int(1)), 0);
        let c = sturm_chain(&f_poly(I2(3)).unwrap()).unwrap();
        assert_eq!(c.variations_at(&int(0)) - c.variations_at(&ratio(1, 3)), 1);
        let mut last = usize::MAX;
        for k in 0..=40 {
            let v = c.variations_at(&ratio(k, 40));
            assert!(v <= last);
            last = v;
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_roots(&f_poly(E8).unwrap(), &int(0), &int(1)).unwrap(), 8);
        assert_eq!(count_roots(&p(&[1, -6, 6]), &int(0), &ratio(1, 5)).unwrap(), 0);
        assert_eq!(count_roots(&h_poly(B(2)).unwrap(), &int(-10), &int(0)).unwrap(), 2);
        assert!(matches!(
            count_roots(&p(&[1, -2]), &int(0), &ratio(1, 2)),
            Err(SturmError::EndpointRoot(_))
        ));
        assert!(matches!(
            count_roots(&p(&[1, -2]), &int(1), &int(0)),
            Err(SturmError::EmptyInterval)
        ));
        assert_eq!(count_roots_open(&p(&[1, -4, 3]), &int(0), &int(1)).unwrap(), 1);
    }

    #[test]
    fn isolation_examples() {
        let g2 = isolate_roots(&p(&[1, -8, 8]), &int(0), &int(1)).unwrap();
        assert_eq!(g2.len(), 2);
        assert!(g2[0].interval.hi <= ratio(1, 2) && g2[1].interval.lo >= ratio(1, 2));

        let h3 = isolate_roots(&f_poly(H3).unwrap(), &int(0), &int(1)).unwrap();
        assert_eq!(h3.len(), 3);
        assert_eq!(h3[1].refine(&pow2_neg(20)).exact(), Some(&ratio(1, 2)));
        for w in h3.windows(2) {
            assert!(w[0].interval.hi <= w[1].interval.lo);
        }

        let one = isolate_roots(&p(&[1, -2]), &int(0), &int(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].interval.contains(&ratio(1, 2)) || one[0].exact() == Some(&ratio(1, 2)));
    }

    #[test]
    fn refine_examples() {
        let b = isolate_roots(&p(&[1, -2]), &int(0), &int(1)).unwrap().remove(0);
        let r = b.refine(&pow2_neg(10));
        assert!(r.interval.width() < pow2_neg(10));
        assert!(r.interval.contains(&ratio(1, 2)));

        // smallest root of f_B2 is (3 - sqrt 3)/6
        let small = isolate_roots(&p(&[1, -6, 6]), &int(0), &int(1)).unwrap().remove(0);
        let r = small.refine(&pow2_neg(40));
        let x = (3.0 - 3f64.sqrt()) / 6.0;
        use crate::scalar::Scalar;
        assert!(r.interval.lo.approx() <= x + 1e-15 && x - 1e-15 <= r.interval.hi.approx());
        // squared-distance check done exactly: 6x^2 - 6x + 1 changes sign on the box
        assert!(r.is_valid());
        let rr = r.refine(&pow2_neg(45));
        assert!(rr.interval.lo >= r.interval.lo && rr.interval.hi <= r.interval.hi);
    }

    #[test]
    fn compare_examples() {
        let d5 = isolate_roots(&f_poly(D(5)).unwrap(), &int(0), &int(1)).unwrap();
        assert_eq!(compare_roots(&d5[2], &RootBox::rational(ratio(1, 2))), Ordering::Equal);
        let b2 = isolate_roots(&p(&[1, -6, 6]), &int(0), &int(1)).unwrap();
        let third = isolate_roots(&p(&[1, -3]), &int(0), &int(1)).unwrap().remove(0);
        assert_eq!(compare_roots(&b2[1], &third), Ordering::Greater);
        assert_eq!(compare_roots(&b2[0], &third), Ordering::Less);
        assert_eq!(compare_roots(&b2[0], &b2[0]), Ordering::Equal);
    }

    #[test]
    fn shared_irrational_root_is_equal() {
        // (t^2 - 2)(t - 3) and (t^2 - 2)(t + 5) share sqrt 2
        let q1 = &p(&[-2, 0, 1]) * &p(&[-3, 1]);
        let q2 = &p(&[-2, 0, 1]) * &p(&[5, 1]);
        let r1 = isolate_roots(&q1, &int(1), &int(2)).unwrap().remove(0);
        let r2 = isolate_roots(&q2, &ratio(13, 10), &ratio(3, 2)).unwrap().remove(0);
        assert_eq!(compare_roots(&r1, &r2), Ordering::Equal);
        let r3 = isolate_roots(&p(&[-2, 0, 1]), &int(1), &int(2)).unwrap().remove(0);
        assert_eq!(compare_roots(&r3, &r1), Ordering::Equal);
    }

    #[test]
    fn closed_isolation_keeps_endpoint_roots() {
        let q = &p(&[0, 1]) * &(&p(&[1, -1]) * &p(&[1, -3]));
        let roots = isolate_roots_closed(&q, &int(0), &int(1)).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0].exact(), Some(&int(0)));
        assert_eq!(roots[2].exact(), Some(&int(1)));
    }

    #[test]
    fn snap_finds_rational_roots() {
        // f_H3 = (1 - 2t)(1 - 14t + 16t^2)
        let roots = isolate_real_roots(&f_poly(H3).unwrap()).unwrap();
        let snapped: Vec<_> = roots.iter().map(RootBox::snap_rational).collect();
        assert_eq!(snapped.iter().filter(|r| r.exact().is_some()).count(), 1);
        assert_eq!(snapped[1].exact(), Some(&ratio(1, 2)));
        // 3t - 1 has root 1/3, which bisection of (0, 1) never hits
        let r = isolate_roots(&p(&[-1, 3]), &int(0), &int(1)).unwrap();
        assert_eq!(r[0].snap_rational().exact(), Some(&ratio(1, 3)));
        // irrational roots stay as boxes
        let g2 = isolate_real_roots(&f_poly(G2).unwrap()).unwrap();
        assert!(g2.iter().all(|r| r.snap_rational().exact().is_none()));
    }

    #[test]
    fn real_roots_outside_unit_interval() {
        // (t + 3)(2t - 5)(t - 1/4)
        let q = &(&p(&[3, 1]) * &p(&[-5, 2])) * &p(&[-1, 4]);
        let r = isolate_real_roots(&q).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[0].cmp_rational(&int(-3)), Ordering::Equal);
        assert_eq!(r[2].cmp_rational(&ratio(5, 2)), Ordering::Equal);
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }
}
