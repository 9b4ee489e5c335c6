//! Root location of the D-type f+ polynomial through the auxiliary family
//! `H_l`, `f~_{D_l}` and `K_l`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::roots::{fplus_roots, unit_roots};
use super::{half, nth, Checker, Report, WitnessValue};
use crate::catalog::{f_poly, fplus_poly, k_poly, tilde_f_d, upper_h_deriv, RootSystemType};
use crate::rational::int;
use crate::sturm::{isolate_roots_closed, RootBox};
use crate::{RatPoly, Rational};

/// Roots on `[0, 1]`, largest first, with endpoint roots kept exact.
fn closed_unit_roots(p: &RatPoly) -> Vec<RootBox> {
    let mut r = isolate_roots_closed(p, &Rational::zero(), &Rational::one()).expect("nonzero polynomial");
    r.reverse();
    r
}

/// Minimum of `2(2l-1) t^2 - 5 l t + 2 l` over `[0, 1]`.
pub(crate) fn quadratic_minimum(l: i64) -> Rational {
    let (a, b, c) = (int(2 * (2 * l - 1)), int(-5 * l), int(2 * l));
    let q = |t: &Rational| &(&a * t * t) + &(&b * t) + &c;
    let vertex = -&b / (int(2) * &a);
    let mut m = q(&Rational::zero()).min(q(&Rational::one()));
    if vertex > Rational::zero() && vertex < Rational::one() {
        m = m.min(q(&vertex));
    }
    m
}

fn simple_count(c: &mut Checker, label: &str, p: &RatPoly, roots: &[RootBox], expected: usize) -> bool {
    let sf = p.is_square_free();
    c.require(sf, format!("{label} square-free"), || {
        WitnessValue::Poly((&p.gcd(&p.derivative(1))).into())
    });
    let n = roots.len();
    c.witness(format!("{label} roots"), WitnessValue::Count(n as u64));
    c.require(
        n == expected,
        format!("{label} root count, expected {expected}"),
        || WitnessValue::Count(n as u64),
    ) && sf
}

/// Certifies, for `l >= 5`:
/// - `u_1 = 1 > v_1 > u_2 > ... > v_{l-1} > u_l = 0` for the roots `u` of
///   `H^(l-4)` and `v` of `H^(l-3)`;
/// - `t+_{l+1-nu}` in `(u_{l+1-nu}, v_{l-nu})`;
/// - the `l` simple roots of `f~` and their position against the D-roots,
///   `1/2`, `u` and `v`;
/// - the `l` simple roots of `K` on `[0, 1)` with `K(0) = 0`, `K'(0) = l - 2`
///   and `t_K[l-nu]` in `(v_{l-nu}, u_{l-nu})`;
/// - the position of `t+` against `f~`, the B-roots and the D-roots, which
///   jointly give the full f/f+ interlacing chain.
pub fn verify_d_auxiliary(l: u32) -> Report {
    let mut c = Checker::new("d_auxiliary").param("l", l);
    if l < 5 {
        c.fail("rank", WitnessValue::Text(format!("needs l >= 5, got {l}")));
        return c.finish();
    }
    let li = l as i64;
    let n = l as usize;
    let k = n / 2;
    let even = n.is_multiple_of(2);

    let h4 = upper_h_deriv(l, l - 4).expect("valid");
    let h3 = upper_h_deriv(l, l - 3).expect("valid");
    let ft = match tilde_f_d(l) {
        Ok(p) => p,
        Err(e) => {
            c.fail("f~", WitnessValue::Text(e.to_string()));
            return c.finish();
        }
    };
    let kp = match k_poly(l) {
        Ok(p) => p,
        Err(e) => {
            c.fail("K", WitnessValue::Text(e.to_string()));
            return c.finish();
        }
    };
    let fd = f_poly(RootSystemType::D(l)).expect("valid");
    let fplus = fplus_poly(RootSystemType::D(l)).expect("valid");

    let u = closed_unit_roots(&h4);
    let v = unit_roots(&h3).expect("H^(l-3) is nonzero at 0 and 1");
    let ok_u = simple_count(&mut c, "H^(l-4)", &h4, &u, n);
    let ok_v = simple_count(&mut c, "H^(l-3)", &h3, &v, n - 1);
    let t_ft = unit_roots(&ft).expect("f~ is nonzero at 0 and 1");
    let ok_ft = simple_count(&mut c, "f~", &ft, &t_ft, n);
    let t_k = closed_unit_roots(&kp);
    let ok_k = simple_count(&mut c, "K", &kp, &t_k, n);
    let td = unit_roots(&fd).expect("f_D is nonzero at 0 and 1");
    let tb = unit_roots(&f_poly(RootSystemType::B(l)).expect("valid")).expect("isolation");
    let tb1 = unit_roots(&f_poly(RootSystemType::B(l - 1)).expect("valid")).expect("isolation");
    let tp = fplus_roots(&fplus).expect("isolation");
    let ok_tp = match &tp {
        Some(tp) => c.require(tp.len() == n, "f+ root count", || WitnessValue::Count(tp.len() as u64)),
        None => {
            c.fail("f+ at 1", WitnessValue::Text("t = 1 is not a simple root".into()));
            false
        }
    };
    if !(ok_u && ok_v && ok_ft && ok_k && ok_tp && td.len() == n && tb.len() == n && tb1.len() == n - 1) {
        c.witness(
            "stopped",
            WitnessValue::Text("root structure differs from the expected shape".into()),
        );
        return c.finish();
    }
    let tp = tp.expect("checked");
    let one = RootBox::rational(Rational::one());
    let zero = RootBox::rational(Rational::zero());
    let mid = half();

    // u / v interlacing
    c.equal("u_1 = 1", nth(&u, 1), &one);
    c.equal(format!("u_{n} = 0"), nth(&u, n), &zero);
    for i in 1..n {
        c.between(
            format!("u_{} < v_{i} < u_{i}", i + 1),
            nth(&u, i + 1),
            nth(&v, i),
            nth(&u, i),
        );
    }

    // f+ between u and v
    c.equal("t+_1 = 1", nth(&tp, 1), &one);
    for nu in 1..n {
        let (i, j) = (n + 1 - nu, n - nu);
        c.between(format!("t+_{i} in (u_{i}, v_{j})"), nth(&u, i), nth(&tp, i), nth(&v, j));
    }

    // f~ against the D-roots and 1/2; (top, bottom) index pairs follow the parity
    let top = |nu: usize| if even { 2 * k + 1 - nu } else { 2 * k + 2 - nu };
    for nu in 1..k {
        let i = top(nu);
        c.between(
            format!("f~_{i} in (t_D[{i}], t_D[{}])", i - 1),
            nth(&td, i),
            nth(&t_ft, i),
            nth(&td, i - 1),
        );
        let j = k - nu;
        c.between(
            format!("f~_{j} in (t_D[{}], t_D[{j}])", j + 1),
            nth(&td, j + 1),
            nth(&t_ft, j),
            nth(&td, j),
        );
    }
    let low_mid = if even { k + 1 } else { k + 2 };
    c.between(
        format!("f~_{low_mid} in (t_D[{low_mid}], 1/2)"),
        nth(&td, low_mid),
        nth(&t_ft, low_mid),
        &mid,
    );
    c.between(format!("f~_{k} in (1/2, t_D[{k}])"), &mid, nth(&t_ft, k), nth(&td, k));
    if !even {
        c.equal(format!("f~_{} = 1/2", k + 1), nth(&t_ft, k + 1), &mid);
    }

    // f~ against u and v
    for nu in 1..=k {
        let i = top(nu);
        c.between(
            format!("f~_{i} in (u_{i}, v_{})", i - 1),
            nth(&u, i),
            nth(&t_ft, i),
            nth(&v, i - 1),
        );
    }

    // K: root at 0, slope l - 2, roots between v and u
    c.equal(format!("t_K[{n}] = 0"), nth(&t_k, n), &zero);
    let slope = kp.derivative(1).eval(&Rational::zero());
    c.witness("K'(0)", WitnessValue::Rational(slope.clone()));
    c.require(slope == int(li - 2), "K'(0) = l - 2", || {
        WitnessValue::Rational(slope.clone())
    });
    for nu in 1..n {
        let i = n - nu;
        c.between(
            format!("t_K[{i}] in (v_{i}, u_{i})"),
            nth(&v, i),
            nth(&t_k, i),
            nth(&u, i),
        );
    }

    // f+ against f~ and 1/2
    for nu in 1..k {
        let i = top(nu);
        c.between(
            format!("t+_{i} in (f~_{i}, f~_{})", i - 1),
            nth(&t_ft, i),
            nth(&tp, i),
            nth(&t_ft, i - 1),
        );
    }
    c.between(
        format!("t+_{low_mid} in (f~_{low_mid}, 1/2)"),
        nth(&t_ft, low_mid),
        nth(&tp, low_mid),
        &mid,
    );

    // f+ against the B-roots, with a positive quadratic weight on [0, 1]
    let qmin = quadratic_minimum(li);
    c.witness("min of quadratic weight on [0,1]", WitnessValue::Rational(qmin.clone()));
    c.require(qmin > Rational::zero(), "quadratic weight positive on [0,1]", || {
        WitnessValue::Rational(qmin.clone())
    });
    for nu in 1..n {
        let i = n + 1 - nu;
        c.between(
            format!("t+_{i} in (t_B[{i}], t_B[{}])", i - 1),
            nth(&tb, i),
            nth(&tp, i),
            nth(&tb, i - 1),
        );
    }

    // each chain pair (t_D[j], t+_{j+1}, t_D[j+1]) is settled by one of three groups
    let mut covered = BTreeSet::new();
    for nu in 1..(n / 2) {
        let i = n + 1 - nu;
        let upper = c.less(format!("t+_{i} < t_D[{}]", i - 1), nth(&tp, i), nth(&td, i - 1));
        let lower = c.less(format!("t_D[{i}] < t+_{i}"), nth(&td, i), nth(&tp, i));
        if upper && lower {
            covered.insert(i - 1);
        }
    }
    if even {
        c.less(format!("1/2 < t_D[{k}]"), &mid, nth(&td, k));
    } else {
        c.less(format!("1/2 < t+_{}", k + 1), &mid, nth(&tp, k + 1));
    }
    let m = low_mid - 1;
    let upper = c.less(format!("t+_{low_mid} < t_D[{m}]"), nth(&tp, low_mid), nth(&td, m));
    let lower = c.less(
        format!("t_D[{low_mid}] < t+_{low_mid}"),
        nth(&td, low_mid),
        nth(&tp, low_mid),
    );
    if upper && lower {
        covered.insert(m);
    }
    let cl = n.div_ceil(2);
    for nu in 1..cl {
        let i = cl + 1 - nu;
        c.between(
            format!("t+_{i} in (t_B[{i}], t_B'[{}])", i - 1),
            nth(&tb, i),
            nth(&tp, i),
            nth(&tb1, i - 1),
        );
        if c.between(
            format!("t_D[{i}] < t+_{i} < t_D[{}]", i - 1),
            nth(&td, i),
            nth(&tp, i),
            nth(&td, i - 1),
        ) {
            covered.insert(i - 1);
        }
    }
    let all: BTreeSet<usize> = (1..n).collect();
    let missing: Vec<_> = all.difference(&covered).collect();
    c.witness("chain pairs covered", WitnessValue::Count(covered.len() as u64));
    c.require(missing.is_empty(), "full chain covered", || {
        WitnessValue::Text(format!("{missing:?}"))
    });
    for nu in 1..n {
        c.between(
            format!("chain nu={nu}"),
            nth(&td, nu + 1),
            nth(&tp, nu + 1),
            nth(&td, nu),
        );
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::verify::Status;

    #[test]
    fn small_ranks_pass() {
        for l in 5..=9 {
            let r = verify_d_auxiliary(l);
            assert_eq!(
                r.status,
                Status::Pass,
                "l={l}: {:?}",
                r.witnesses.iter().filter(|w| w.label.contains(':')).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn named_values() {
        let r = verify_d_auxiliary(6);
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.label == "K'(0)" && w.value == WitnessValue::Rational(int(4))));
        assert!(verify_d_auxiliary(4).status == Status::Fail);
        assert!(quadratic_minimum(5) > Rational::zero());
        // vertex 25/36 is inside [0, 1]: 18 (25/36)^2 - 25 (25/36) + 10
        assert_eq!(quadratic_minimum(5), ratio(95, 72));
    }
}
