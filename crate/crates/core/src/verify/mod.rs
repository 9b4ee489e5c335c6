//! Certified checks over the catalog.
//!
//! Each check returns a [`Report`]. Every ordering claim about roots is
//! settled by exact sign evaluation and gcd tests in [`crate::sturm`]; no
//! tolerance appears anywhere here.

mod auxiliary;
pub mod cosine;
mod identities;
mod roots;
pub mod suite;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::sturm::{self, compare_roots, Interval, RootBox};
use crate::{RatPoly, Rational};

pub use auxiliary::verify_d_auxiliary;
pub use identities::{verify_constructions, verify_identities};
pub use roots::{
    b_cosine_bracket, fixture_values, fplus_roots, smallest_roots, unit_roots, verify_aplus_interlacing,
    verify_b_interlacing, verify_d_between_b, verify_derivative_at_one, verify_fixtures_f_side,
    verify_fixtures_fplus_side, verify_fplus_interlacing, verify_half_divisibility, verify_real_roots,
    verify_smallest_root_decrease,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Compact description of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDigest {
    pub degree: Option<usize>,
    /// Ascending coefficients as `"num/den"`.
    pub coeffs: Vec<String>,
}

impl From<&RatPoly> for PolyDigest {
    fn from(p: &RatPoly) -> Self {
        Self {
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(crate::rational::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum WitnessValue {
    #[serde(with = "sturm::rational_str")]
    Rational(Rational),
    Interval(Interval),
    Poly(PolyDigest),
    Count(u64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    #[serde(flatten)]
    pub value: WitnessValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(rename = "check")]
    pub check_name: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl Report {
    pub fn new(check_name: impl Into<String>) -> Self {
        Self {
            check_name: check_name.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Canonical ordering key used when merging reports from parallel work.
    pub fn sort_key(&self) -> (String, Vec<(String, String)>) {
        let params = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), format!("{v:0>8}")))
            .collect();
        (self.check_name.clone(), params)
    }

    /// Witnesses of a given label prefix.
    pub fn witnesses_with(&self, prefix: &str) -> impl Iterator<Item = &Witness> {
        let prefix = prefix.to_string();
        self.witnesses.iter().filter(move |w| w.label.starts_with(&prefix))
    }
}

/// Accumulates witnesses and turns the first failed requirement into a
/// failing report.
pub(crate) struct Checker {
    report: Report,
}

impl Checker {
    pub fn new(name: &str) -> Self {
        Self {
            report: Report::new(name),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.report.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn witness(&mut self, label: impl Into<String>, value: WitnessValue) {
        self.report.witnesses.push(Witness {
            label: label.into(),
            value,
        });
    }

    pub fn fail(&mut self, label: impl Into<String>, value: WitnessValue) {
        self.report.status = Status::Fail;
        self.witness(label, value);
    }

    #[cfg(test)]
    pub fn failed(&self) -> bool {
        self.report.status == Status::Fail
    }

    pub fn require(&mut self, ok: bool, label: impl Into<String>, value: impl FnOnce() -> WitnessValue) -> bool {
        if !ok {
            self.fail(label, value());
        }
        ok
    }

    /// Records a mismatch between two polynomials that should be identical.
    pub fn same_poly(&mut self, label: impl Into<String>, lhs: &RatPoly, rhs: &RatPoly) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(label, WitnessValue::Poly((&(lhs - rhs)).into()));
        false
    }

    pub fn zero_poly(&mut self, label: impl Into<String>, p: &RatPoly) -> bool {
        self.same_poly(label, p, &RatPoly::zero())
    }

    /// `a < b` as roots.
    pub fn less(&mut self, label: impl Into<String>, a: &RootBox, b: &RootBox) -> bool {
        let ord = compare_roots(a, b);
        if ord == Ordering::Less {
            return true;
        }
        let label = label.into();
        self.fail(format!("{label}: lower"), root_value(a));
        self.witness(format!("{label}: upper ({ord:?})"), root_value(b));
        false
    }

    /// `lo < x < hi` as roots.
    pub fn between(&mut self, label: impl Into<String>, lo: &RootBox, x: &RootBox, hi: &RootBox) -> bool {
        let label = label.into();
        let ok = compare_roots(lo, x) == Ordering::Less && compare_roots(x, hi) == Ordering::Less;
        if !ok {
            self.fail(format!("{label}: root"), root_value(x));
            self.witness(format!("{label}: lower end"), root_value(lo));
            self.witness(format!("{label}: upper end"), root_value(hi));
        }
        ok
    }

    pub fn equal(&mut self, label: impl Into<String>, a: &RootBox, b: &RootBox) -> bool {
        let ord = compare_roots(a, b);
        if ord == Ordering::Equal {
            return true;
        }
        let label = label.into();
        self.fail(format!("{label}: left ({ord:?})"), root_value(a));
        self.witness(format!("{label}: right"), root_value(b));
        false
    }

    pub fn finish(self) -> Report {
        self.report
    }
}

/// Exact rational if known, isolating interval otherwise.
pub(crate) fn root_value(r: &RootBox) -> WitnessValue {
    match r.exact() {
        Some(x) => WitnessValue::Rational(x.clone()),
        None => WitnessValue::Interval(r.interval().clone()),
    }
}

/// Root labels are 1-based in decreasing order; `nu = 1` is the largest.
pub(crate) fn nth(roots: &[RootBox], nu: usize) -> &RootBox {
    &roots[nu - 1]
}

pub(crate) fn half() -> RootBox {
    RootBox::rational(crate::rational::ratio(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn report_round_trips_through_json() {
        let mut c = Checker::new("demo").param("type", "B3");
        c.witness("count", WitnessValue::Count(3));
        c.witness("x", WitnessValue::Rational(ratio(-1, 3)));
        c.witness(
            "box",
            WitnessValue::Interval(Interval::new(ratio(1, 4), ratio(1, 2)).unwrap()),
        );
        c.witness("p", WitnessValue::Poly((&RatPoly::from_ints(&[1, -2])).into()));
        c.fail("bad", WitnessValue::Text("reason".into()));
        let r = c.finish();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"check\":\"demo\""));
        assert!(json.contains("\"-1/3\""));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.status, Status::Fail);
    }

    #[test]
    fn checker_ordering_helpers() {
        let a = RootBox::rational(ratio(1, 3));
        let b = half();
        let mut c = Checker::new("order");
        assert!(c.less("a<b", &a, &b));
        assert!(c.equal("b=b", &b, &half()));
        assert!(!c.failed());
        assert!(!c.between("wrong", &b, &a, &b));
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert!(r.witnesses.len() >= 3);
    }
}
