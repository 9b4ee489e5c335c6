//! Acceptance run: each criterion is checked at its stated scope and time
//! limit, and reported on one PASS/FAIL line. Exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cluster_zeros::sturm::count_roots;
use cluster_zeros::verify::suite::{run, Selection, Suite};
use cluster_zeros::verify::*;
use cluster_zeros::{f_poly, RatPoly, Report, RootSystemType::*, Status};
use common::*;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite_outcome(reports: &[Report]) -> Outcome {
    let failed: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    Outcome {
        ok: !reports.is_empty() && failed.is_empty(),
        detail: format!("{} reports, {} failed", reports.len(), failed.len()),
    }
}

fn suite(s: Suite) -> Outcome {
    match run(s, &Selection::default()) {
        Ok(r) => suite_outcome(&r),
        Err(e) => Outcome { ok: false, detail: e },
    }
}

fn table_fidelity() -> Outcome {
    let table: [(_, &[i64]); 7] = [
        (E6, &[1, -42, 399, -1547, 2856, -2499, 833]),
        (E7, &[1, -70, 945, -5180, 14105, -20202, 14560, -4160]),
        (E8, &[1, -128, 2408, -17936, 67488, -140448, 163856, -100320, 25080]),
        (F4, &[1, -28, 133, -210, 105]),
        (G2, &[1, -8, 8]),
        (H3, &[1, -18, 48, -32]),
        (H4, &[1, -64, 344, -560, 280]),
    ];
    let bad: Vec<_> = table
        .iter()
        .filter(|(ty, c)| f_poly(*ty).ok() != Some(RatPoly::from_ints(c)))
        .map(|(ty, _)| ty.to_string())
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: format!("7 types, mismatches {bad:?}"),
    }
}

fn auxiliary() -> Outcome {
    let reports = match run(Suite::Auxiliary, &Selection::default()) {
        Ok(r) => r,
        Err(e) => return Outcome { ok: false, detail: e },
    };
    let mut out = suite_outcome(&reports);
    let slopes_ok = reports.iter().all(|r| {
        let l: i64 = r.params["l"].parse().unwrap();
        r.witnesses
            .iter()
            .any(|w| w.label == "K'(0)" && w.value == WitnessValue::Rational(cluster_zeros::rational::int(l - 2)))
    });
    out.ok &= slopes_ok && reports.len() == 16;
    out.detail += &format!(", K'(0) = l-2 for l = 5..20: {slopes_ok}");
    out
}

fn fixtures() -> Outcome {
    let reports = match run(Suite::Fixtures, &Selection::default()) {
        Ok(r) => r,
        Err(e) => return Outcome { ok: false, detail: e },
    };
    let f_side = reports
        .iter()
        .filter(|r| r.check_name == "sturm_fixtures_f")
        .collect::<Vec<_>>();
    let plus_side = reports
        .iter()
        .filter(|r| r.check_name == "sturm_fixtures_fplus")
        .collect::<Vec<_>>();
    let ok = f_side.len() == 17
        && plus_side.len() == 17
        && f_side.iter().all(|r| r.status == Status::Pass)
        && plus_side.iter().all(|r| r.status == Status::Skipped);
    Outcome {
        ok,
        detail: format!("{} f-side Pass, {} f+-side Skipped", f_side.len(), plus_side.len()),
    }
}

fn oracle() -> Outcome {
    let mut runner = TestRunner::new_with_rng(Config::default(), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = (known_roots(), endpoints());
    let mut mismatches = 0;
    for _ in 0..200 {
        let (k, (a, b)) = strategy.new_tree(&mut runner).expect("generator").current();
        let sturm = count_roots(&k.poly, &a, &b).ok();
        let scan = sign_scan(&k.poly, &a, &b, oracle_steps(&a, &b));
        if sturm != Some(scan) || scan != truth(&k, &a, &b) {
            mismatches += 1;
        }
    }
    Outcome {
        ok: mismatches == 0,
        detail: format!("200 polynomials, {mismatches} mismatches"),
    }
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(&str, u64, Check); 11] = [
        ("1 table fidelity", 1, table_fidelity),
        ("2 construction agreement", 30, || {
            suite_outcome(&[verify_constructions(40, 30)])
        }),
        ("3 identity suite", 60, || suite_outcome(&[verify_identities(30)])),
        ("4 rank-many simple roots in (0,1)", 120, || suite(Suite::RealRoots)),
        ("5 f/f+ interlacing chains", 300, || suite(Suite::Interlacing)),
        ("6 smallest roots and cosine brackets", 120, || {
            suite(Suite::SmallestRoots)
        }),
        ("7 auxiliary D-type apparatus", 300, auxiliary),
        ("8 sign-variation fixtures", 5, fixtures),
        ("9 derivative at one", 10, || suite(Suite::DerivativeAtOne)),
        ("10 Sturm vs sign-scan oracle", 30, oracle),
        ("divisibility by 2t-1", 60, || suite(Suite::Divisibility)),
    ];
    let mut all = true;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let ok = out.ok && in_time;
        all &= ok;
        println!(
            "{} criterion {name}: {} in {:.2}s (limit {limit}s)",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
