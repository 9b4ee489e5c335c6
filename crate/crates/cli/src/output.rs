//! Rendering of command results as JSON, CSV or SVG text.

use std::cmp::Ordering;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use cluster_zeros::catalog::is_integral;
use cluster_zeros::rational::to_string as rat;
use cluster_zeros::sturm::{compare_roots, count_roots, isolate_real_roots, RootBox};
use cluster_zeros::verify::suite::Suite;
use cluster_zeros::verify::{b_cosine_bracket, smallest_roots, verify_smallest_root_decrease};
use cluster_zeros::{f_poly, fplus_poly, RatPoly, Rational, Report, RootSystemType, Status};

use crate::{usage, Failure, Format};

fn no_format(cmd: &str, format: Format) -> Failure {
    usage(format!("{cmd} does not support --format {format:?}").to_lowercase())
}

fn polys_of(ty: RootSystemType) -> Result<Vec<(&'static str, RatPoly)>, Failure> {
    let mut out = vec![("f", f_poly(ty).map_err(|e| usage(e.to_string()))?)];
    if ty.has_fplus() {
        out.push(("fplus", fplus_poly(ty).map_err(|e| usage(e.to_string()))?));
    }
    Ok(out)
}

fn integer_coeffs(p: &RatPoly) -> Vec<String> {
    debug_assert!(is_integral(p));
    p.coeffs().iter().map(|c| c.numer().to_string()).collect()
}

/// Coefficients are written as bare JSON integers of any size.
pub fn poly(ty: RootSystemType, format: Format) -> Result<String, Failure> {
    let polys = polys_of(ty)?;
    match format {
        Format::Json => {
            let mut s = format!("{{\"type\":\"{ty}\",\"rank\":{}", ty.rank());
            for (name, p) in &polys {
                write!(s, ",\"{name}\":[{}]", integer_coeffs(p).join(",")).unwrap();
            }
            s.push_str("}\n");
            Ok(s)
        }
        Format::Csv => {
            let mut s = String::from("type,rank,poly,k,coeff\n");
            for (name, p) in &polys {
                for (k, c) in integer_coeffs(p).iter().enumerate() {
                    writeln!(s, "{ty},{},{name},{k},{c}", ty.rank()).unwrap();
                }
            }
            Ok(s)
        }
        Format::Svg => Err(no_format("poly", format)),
    }
}

#[derive(Serialize)]
struct RootRow {
    #[serde(rename = "type")]
    ty: String,
    rank: u32,
    nu: usize,
    lo: String,
    hi: String,
    approx: f64,
    exact: bool,
}

impl RootRow {
    fn new(ty: RootSystemType, nu: usize, r: &RootBox) -> Self {
        let (lo, hi) = match r.exact() {
            Some(x) => (rat(x), rat(x)),
            None => (rat(&r.interval().lo), rat(&r.interval().hi)),
        };
        Self {
            ty: ty.to_string(),
            rank: ty.rank(),
            nu,
            lo,
            hi,
            approx: r.approx(),
            exact: r.exact().is_some(),
        }
    }
}

/// All real roots, largest first, each refined below `eps` and collapsed
/// to its exact value when rational.
fn certified_roots(p: &RatPoly, eps: &Rational) -> Vec<RootBox> {
    let mut roots = isolate_real_roots(p).expect("catalog polynomials are nonzero");
    roots.reverse();
    roots.par_iter().map(|r| r.snap_rational().refine(eps)).collect()
}

pub fn roots(ty: RootSystemType, plus: bool, eps: &Rational, format: Format) -> Result<String, Failure> {
    let p = if plus {
        if !ty.has_fplus() {
            return Err(usage(format!("no f+ polynomial for {ty}")));
        }
        fplus_poly(ty)
    } else {
        f_poly(ty)
    }
    .map_err(|e| usage(e.to_string()))?;
    let rows: Vec<RootRow> = certified_roots(&p, eps)
        .iter()
        .enumerate()
        .map(|(i, r)| RootRow::new(ty, i + 1, r))
        .collect();
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&rows).expect("serializable") + "\n"),
        Format::Csv => {
            let mut s = String::from("type,rank,nu,lo,hi,approx\n");
            for r in &rows {
                writeln!(s, "{},{},{},{},{},{}", r.ty, r.rank, r.nu, r.lo, r.hi, r.approx).unwrap();
            }
            Ok(s)
        }
        Format::Svg => Err(no_format("roots", format)),
    }
}

pub fn summary(suite: Suite, reports: &[Report]) -> String {
    let count = |st: Status| reports.iter().filter(|r| r.status == st).count();
    let mut s = format!(
        "{suite}: {} checks, {} pass, {} fail, {} skipped",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    );
    for r in reports.iter().filter(|r| r.status == Status::Fail) {
        write!(s, "\n  FAIL {} {:?}", r.check_name, r.params).unwrap();
    }
    s
}

pub fn reports(reports: &[Report], format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(reports).expect("serializable") + "\n"),
        Format::Csv => {
            let mut s = String::from("check,params,status,witnesses\n");
            for r in reports {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = serde_json::to_value(r.status).expect("serializable");
                writeln!(
                    s,
                    "{},{},{},{}",
                    r.check_name,
                    params.join(";"),
                    status.as_str().unwrap_or_default(),
                    r.witnesses.len()
                )
                .unwrap();
            }
            Ok(s)
        }
        Format::Svg => Err(no_format("verify", format)),
    }
}

#[derive(Serialize)]
struct ScanRow {
    rank: u32,
    lo: String,
    hi: String,
    approx: f64,
    /// Smaller than the previous rank's smallest root; absent on the first row.
    decrease: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket_lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket_hi: Option<String>,
}

#[derive(Serialize)]
struct Scan<'a> {
    series: &'a str,
    rows: Vec<ScanRow>,
    report: Report,
}

/// Returns the rendered table and whether the decrease check passed.
pub fn scan(series: &str, l_max: u32, eps: &Rational, format: Format) -> Result<(String, bool), Failure> {
    let series = series.to_ascii_uppercase();
    let start = match series.as_str() {
        "A" | "B" => 1,
        "D" => 4,
        _ => return Err(usage(format!("series must be A, B or D, got {series}"))),
    };
    if l_max <= start {
        return Err(usage(format!("--lmax must exceed {start} for series {series}")));
    }
    let smallest = smallest_roots(&series, start, l_max);
    let refined: Vec<RootBox> = smallest
        .par_iter()
        .map(|(_, r)| r.snap_rational().refine(eps))
        .collect();
    let mut rows = Vec::with_capacity(refined.len());
    for (i, ((l, raw), r)) in smallest.iter().zip(&refined).enumerate() {
        let decrease = (i > 0).then(|| compare_roots(raw, &smallest[i - 1].1) == Ordering::Less);
        let (bracket_lo, bracket_hi) = if series == "B" && *l >= 2 {
            let (a, b) = b_cosine_bracket(*l);
            (Some(rat(&a)), Some(rat(&b)))
        } else {
            (None, None)
        };
        let (lo, hi) = match r.exact() {
            Some(x) => (rat(x), rat(x)),
            None => (rat(&r.interval().lo), rat(&r.interval().hi)),
        };
        rows.push(ScanRow {
            rank: *l,
            lo,
            hi,
            approx: r.approx(),
            decrease,
            bracket_lo,
            bracket_hi,
        });
    }
    let report = verify_smallest_root_decrease(&series, l_max);
    let ok = report.passed() && rows.iter().all(|r| r.decrease != Some(false));
    let text = match format {
        Format::Json => {
            let scan = Scan {
                series: &series,
                rows,
                report,
            };
            serde_json::to_string_pretty(&scan).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("series,rank,lo,hi,approx,decrease,bracket_lo,bracket_hi\n");
            for r in &rows {
                let dec = r.decrease.map(|d| d.to_string()).unwrap_or_default();
                writeln!(
                    s,
                    "{series},{},{},{},{},{dec},{},{}",
                    r.rank,
                    r.lo,
                    r.hi,
                    r.approx,
                    r.bracket_lo.as_deref().unwrap_or(""),
                    r.bracket_hi.as_deref().unwrap_or("")
                )
                .unwrap();
            }
            s
        }
        Format::Svg => return Err(no_format("scan", format)),
    };
    Ok((text, ok))
}

/// Certificate that every root of `f` is real: the Sturm count over the
/// whole line equals the degree of a square-free `f`.
fn real_root_certificate(p: &RatPoly, roots: &[RootBox]) -> (String, bool) {
    let degree = p.degree().unwrap_or(0);
    let square_free = p.is_square_free();
    let bound = roots
        .iter()
        .map(cluster_zeros::sturm::magnitude_bound)
        .fold(Rational::from_integer(1.into()), |m, x| m.max(x));
    let counted = count_roots(p, &-bound.clone(), &(bound + Rational::from_integer(1.into())));
    match counted {
        Ok(n) => {
            let ok = square_free && n == degree && roots.len() == degree;
            let rel = if n == degree { "=" } else { "!=" };
            (format!("real_roots = {n} {rel} degree {degree}"), ok)
        }
        Err(e) => (format!("real_roots undetermined: {e}"), false),
    }
}

#[derive(Serialize)]
struct Plot {
    #[serde(rename = "type")]
    ty: String,
    certificate: String,
    roots: Vec<f64>,
}

pub fn plot(ty: RootSystemType, format: Format) -> Result<(String, bool), Failure> {
    let p = f_poly(ty).map_err(|e| usage(e.to_string()))?;
    let roots = certified_roots(&p, &cluster_zeros::sturm::default_eps());
    let (certificate, ok) = real_root_certificate(&p, &roots);
    let xs: Vec<f64> = roots.iter().map(RootBox::approx).collect();
    let text = match format {
        Format::Json => {
            let plot = Plot {
                ty: ty.to_string(),
                certificate,
                roots: xs,
            };
            serde_json::to_string_pretty(&plot).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("x,y\n");
            for x in &xs {
                writeln!(s, "{x},0").unwrap();
            }
            writeln!(s, "# {ty}: {certificate}").unwrap();
            s
        }
        Format::Svg => svg(ty, &xs, &certificate),
    };
    Ok((text, ok))
}

/// One circle per root on the segment [0, 1].
fn svg(ty: RootSystemType, xs: &[f64], certificate: &str) -> String {
    const W: f64 = 800.0;
    const H: f64 = 160.0;
    const PAD: f64 = 40.0;
    let axis_y = H / 2.0;
    let px = |x: f64| PAD + x * (W - 2.0 * PAD);
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    )
    .unwrap();
    writeln!(s, "  <title>{ty}</title>").unwrap();
    writeln!(s, "  <!-- {certificate} -->").unwrap();
    writeln!(
        s,
        "  <text x=\"{PAD}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">{ty}</text>"
    )
    .unwrap();
    writeln!(
        s,
        "  <line x1=\"{}\" y1=\"{axis_y}\" x2=\"{}\" y2=\"{axis_y}\" stroke=\"black\"/>",
        px(0.0),
        px(1.0)
    )
    .unwrap();
    for (x, label) in [(0.0, "0"), (0.5, "1/2"), (1.0, "1")] {
        writeln!(
            s,
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>",
            px(x),
            axis_y - 6.0,
            axis_y + 6.0
        )
        .unwrap();
        writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{label}</text>",
            px(x),
            axis_y + 24.0
        )
        .unwrap();
    }
    for x in xs {
        writeln!(
            s,
            "  <circle class=\"root\" cx=\"{:.3}\" cy=\"{axis_y}\" r=\"4\" fill=\"none\" stroke=\"crimson\"/>",
            px(*x)
        )
        .unwrap();
    }
    writeln!(
        s,
        "  <text x=\"{PAD}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\">{certificate}</text>",
        H - 12.0
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}
