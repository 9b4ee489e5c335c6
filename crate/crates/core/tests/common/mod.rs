//! Shared generators and the brute-force sign-scan oracle.

#![allow(dead_code)]

use cluster_zeros::rational::ratio;
use cluster_zeros::{RatPoly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

/// An integer polynomial of degree at most 6 with known simple rational
/// roots, possibly times a factor `t^2 + k` that has no real roots.
#[derive(Clone, Debug)]
pub struct KnownRoots {
    pub poly: RatPoly,
    pub roots: Vec<Rational>,
}

/// Distinct roots `p/q` with `|p| <= 12`, `1 <= q <= 4`, so any two differ
/// by at least `1/16`.
pub fn known_roots() -> impl Strategy<Value = KnownRoots> {
    (
        prop::collection::btree_set((-12i64..=12, 1i64..=4), 1..=6),
        prop::option::of(1i64..=9),
        prop_oneof![Just(1i64), Just(-1), Just(3), Just(-2)],
    )
        .prop_map(|(pairs, quad, scale)| {
            let mut roots: Vec<Rational> = pairs.into_iter().map(|(p, q)| ratio(p, q)).collect();
            roots.sort();
            roots.dedup();
            let mut budget = 6;
            if quad.is_some() {
                budget -= 2;
            }
            roots.truncate(budget);
            let mut poly = RatPoly::from_ints(&[scale]);
            for r in &roots {
                let (p, q) = (r.numer().clone(), r.denom().clone());
                let lin = RatPoly::from_coeffs(vec![Rational::from_integer(-p), Rational::from_integer(q)]);
                poly = &poly * &lin;
            }
            if let Some(k) = quad {
                poly = &poly * &RatPoly::from_ints(&[k, 0, 1]);
            }
            KnownRoots { poly, roots }
        })
}

/// Interval end points on a 1/7 grid, so they are never roots.
pub fn endpoints() -> impl Strategy<Value = (Rational, Rational)> {
    (-100i64..100, 1i64..200).prop_map(|(a, w)| (ratio(7 * a + 3, 7 * 7), ratio(7 * (a + w) + 3, 7 * 7)))
}

/// Counts sign changes of `p` over `steps` equal cells of `[a, b]`,
/// skipping exact zeros. Counts simple roots in `(a, b)` once the cells are
/// finer than the root separation.
pub fn sign_scan(p: &RatPoly, a: &Rational, b: &Rational, steps: i64) -> usize {
    let h = (b - a) / Rational::from_integer(steps.into());
    let mut prev = 0i8;
    let mut changes = 0;
    let mut x = a.clone();
    for _ in 0..=steps {
        let v = p.eval(&x);
        let s = if v.is_zero() {
            0
        } else if v > Rational::zero() {
            1
        } else {
            -1
        };
        if s != 0 {
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        x += &h;
    }
    changes
}

/// Number of known roots in `(a, b]`.
pub fn truth(k: &KnownRoots, a: &Rational, b: &Rational) -> usize {
    k.roots.iter().filter(|r| *r > a && *r <= b).count()
}

/// Grid size giving cells of width at most `1/64`, well below the `1/16`
/// root separation.
pub fn oracle_steps(a: &Rational, b: &Rational) -> i64 {
    let cells = ((b - a) * Rational::from_integer(64.into())).ceil();
    cells.to_integer().try_into().expect("small interval")
}
