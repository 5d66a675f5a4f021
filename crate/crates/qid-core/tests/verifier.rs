//! Behavioural tests of the verification engine: registry invariants,
//! smoke runs of every identity, mutation sensitivity, determinism, and
//! point-mode plumbing.

use qid_core::verify::{list_identities, registry, verify, verify_with_options};
use qid_core::{run_suite, AlphaMode, Mode, Params, Status, SuiteConfig, SuiteReport};

#[test]
fn registry_listing_is_sorted_and_anchored() {
    let ids = list_identities();
    assert_eq!(ids.len(), registry().len());
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let gf = ids.iter().find(|(id, _)| *id == "gf-main").unwrap();
    assert_eq!(gf.1, "be the polynomials defined as in");
    for (id, anchor) in &ids {
        assert!(!id.is_empty() && !anchor.is_empty());
    }
}

#[test]
fn every_identity_passes_a_smoke_run() {
    // one cheap parameter set per identity and mode
    for def in registry() {
        let cfg = SuiteConfig {
            order: Some(4),
            n_max: Some(3),
            points: Some(4),
            ..Default::default()
        };
        let params = (def.grid)(&cfg)
            .into_iter()
            .next()
            .expect("non-empty grid");
        for mode in def.modes {
            let rep = verify(def.id, &params, *mode).unwrap();
            assert_eq!(
                rep.status,
                Status::Pass,
                "{} [{}] {:?}",
                def.id,
                params.label(),
                rep.first_mismatch
            );
        }
    }
}

#[test]
fn gf_main_smoke_specific_params() {
    let p = Params::new(6)
        .with_rs(1, -1)
        .with_alpha(AlphaMode::Symbolic);
    let rep = verify("gf-main", &p, Mode::SeriesExact).unwrap();
    assert!(rep.status.is_pass());
}

#[test]
fn mutation_is_detected_for_every_identity() {
    for def in registry() {
        let cfg = SuiteConfig {
            order: Some(3),
            n_max: Some(2),
            points: Some(3),
            ..Default::default()
        };
        let params = (def.grid)(&cfg).into_iter().next().unwrap();
        for mode in def.modes {
            let rep = verify_with_options(def.id, &params, *mode, true).unwrap();
            assert_eq!(rep.status, Status::Fail, "{} survived mutation", def.id);
            assert!(
                rep.first_mismatch.is_some(),
                "{} mutated without located mismatch",
                def.id
            );
        }
    }
}

#[test]
fn engineered_series_mismatch_reports_exponent_one() {
    // gf-main with the right side perturbed by +t must fail at exponent (1)
    let p = Params::new(4).with_rs(0, 0).with_alpha(AlphaMode::Integer(1));
    let rep = verify_with_options("gf-main", &p, Mode::SeriesExact, true).unwrap();
    assert_eq!(rep.status, Status::Fail);
    let mm = rep.first_mismatch.unwrap();
    assert_eq!(mm.exponents, vec![1]);
}

#[test]
fn unknown_identity_is_an_error_and_a_suite_skip() {
    let p = Params::new(2);
    assert!(verify("nosuch", &p, Mode::SeriesExact).is_err());

    let cfg = SuiteConfig {
        ids: vec!["nosuch".into(), "qpoch-inversion".into()],
        n_max: Some(2),
        ..Default::default()
    };
    let rep = run_suite(&cfg);
    let skipped: Vec<_> = rep
        .reports
        .iter()
        .filter(|r| matches!(r.status, Status::Skipped { .. }))
        .collect();
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0].id, "nosuch");
    assert!(rep
        .reports
        .iter()
        .filter(|r| r.id == "qpoch-inversion")
        .all(|r| r.status.is_pass()));
}

#[test]
fn suite_report_roundtrips_through_json() {
    let cfg = SuiteConfig {
        ids: vec!["qpoch-inversion".into()],
        n_max: Some(3),
        ..Default::default()
    };
    let rep = run_suite(&cfg);
    let parsed = SuiteReport::from_json(&rep.to_json()).unwrap();
    assert_eq!(parsed, rep);
}

#[test]
fn suite_runs_are_deterministic_across_jobs() {
    let mk = |jobs| SuiteConfig {
        ids: vec![
            "qpoch-inversion".into(),
            "gf-Fn".into(),
            "rs-operator".into(),
        ],
        order: Some(4),
        n_max: Some(3),
        seed: 42,
        jobs,
        ..Default::default()
    };
    let a = run_suite(&mk(1));
    let b = run_suite(&mk(2));
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn point_mode_smoke_gf_cauchy() {
    let p = Params::new(3).with_n(3).with_alpha(AlphaMode::Integer(2));
    let rep = qid_core::verify_at_points("gf-cauchy-2phi1", &p, 6, 42).unwrap();
    assert!(rep.status.is_pass(), "{:?}", rep);
    assert_eq!(rep.points_tried, Some(6));
}
