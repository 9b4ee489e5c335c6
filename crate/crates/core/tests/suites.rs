//! Suite-level behaviour: selections, report shape and determinism.

use cluster_zeros::verify::suite::{all_passed, run, Selection, Suite};
use cluster_zeros::verify::*;
use cluster_zeros::RootSystemType::*;
use cluster_zeros::Status;

fn small(l: u32) -> Selection {
    Selection {
        l_max: Some(l),
        ..Default::default()
    }
}

#[test]
fn every_suite_passes_at_small_rank() {
    for suite in [
        Suite::Identities,
        Suite::RealRoots,
        Suite::SmallestRoots,
        Suite::Interlacing,
        Suite::Auxiliary,
        Suite::Divisibility,
        Suite::DerivativeAtOne,
        Suite::Fixtures,
    ] {
        let reports = run(suite, &small(8)).unwrap();
        assert!(!reports.is_empty(), "{suite}");
        assert!(all_passed(&reports), "{suite}: {reports:?}");
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let run_with = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| run(Suite::Interlacing, &small(10)).unwrap())
    };
    let one = run_with(1);
    let four = run_with(4);
    assert_eq!(one, four);
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&four).unwrap()
    );
}

#[test]
fn selection_by_type_and_series() {
    let r = run(
        Suite::Interlacing,
        &Selection {
            ty: Some(D(12)),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].witnesses_with("nu=").count(), 11);

    let r = run(
        Suite::SmallestRoots,
        &Selection {
            series: Some("B".into()),
            l_max: Some(12),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].params["series"], "B");

    let r = run(
        Suite::Fixtures,
        &Selection {
            ty: Some(E6),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(
        r.iter().map(|x| x.status).collect::<Vec<_>>(),
        [Status::Pass, Status::Skipped]
    );
    assert!(run(Suite::Identities, &small(4)).is_err());
}

#[test]
fn individual_checks() {
    assert_eq!(verify_real_roots(E8).status, Status::Pass);
    assert_eq!(verify_real_roots(I2(9)).status, Status::Pass);
    assert_eq!(verify_d_between_b(9).status, Status::Pass);
    assert_eq!(verify_fplus_interlacing(D(4)).status, Status::Pass);
    assert_eq!(verify_d_auxiliary(10).status, Status::Pass);
    assert_eq!(verify_half_divisibility(12).status, Status::Pass);
    assert_eq!(verify_derivative_at_one("D", 12).status, Status::Pass);
    // f+ is only defined for the classical series here
    assert_eq!(verify_fplus_interlacing(E7).status, Status::Fail);
}
