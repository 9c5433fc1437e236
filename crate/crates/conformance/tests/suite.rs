use std::collections::BTreeSet;

use qalg::gen::{rng_for, GenConfig};
use qalg::models::{Interval, IntervalUnion, Intervals, Reals, Unions};
use qalg::shrink::shrink_elems;
use qalg::{Elem, Rational, Scalar};
use qalg_conformance::hom::hom_properties;
use qalg_conformance::mutants::{dropped_merge, radius_sign, swapped_product};
use qalg_conformance::property::catalogue;
use qalg_conformance::{replay, run_instance, run_suite, ConformanceReport, Instance, Settings, SuiteConfig, MANIFEST};

fn all_ids() -> BTreeSet<String> {
    let mut ids: BTreeSet<String> = catalogue::<Intervals<Rational>>().iter().map(|p| p.id.to_string()).collect();
    ids.extend(hom_properties::<Rational>().iter().map(|p| p.id.to_string()));
    ids
}

#[test]
fn manifest_matches_the_suite() {
    let listed: BTreeSet<String> = MANIFEST.iter().map(|(id, _)| id.to_string()).collect();
    assert_eq!(listed.len(), MANIFEST.len(), "duplicate manifest ids");
    assert_eq!(listed, all_ids());
    for i in 1..=15 {
        assert!(listed.contains(&format!("ax{i:02}")), "ax{i:02}");
    }
    for i in 1..=6 {
        assert!(listed.contains(&format!("nrm{i}")), "nrm{i}");
    }
    assert!(MANIFEST.iter().all(|(_, anchor)| !anchor.is_empty()));
}

#[test]
fn reports_carry_anchors() {
    let cfg = SuiteConfig { instances: vec!["disk".into()], cases: 20, ..SuiteConfig::default() };
    let r = &run_suite(&cfg).unwrap()[0];
    assert!(r.properties.iter().all(|p| !p.anchor.is_empty()));
    let ids: Vec<&str> = r.properties.iter().map(|p| p.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn interval_instance_passes() {
    let cfg = SuiteConfig { instances: vec!["interval".into()], cases: 1000, seed: 11, ..SuiteConfig::default() };
    let r = &run_suite(&cfg).unwrap()[0];
    let failed: Vec<_> = r.failures().map(|p| p.id.clone()).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(r.property("ax15").unwrap().cases == 1000);
}

#[test]
fn real_instance_order_is_equality() {
    let cfg = SuiteConfig {
        instances: vec!["real".into()],
        cases: 10_000,
        only: vec!["lem-real-order".into(), "ord".into(), "lem-regular-min".into()],
        ..SuiteConfig::default()
    };
    let r = &run_suite(&cfg).unwrap()[0];
    assert_eq!(r.properties.len(), 3);
    assert!(r.pass());
}

#[test]
fn same_seed_same_report() {
    let cfg = SuiteConfig {
        instances: vec!["union".into(), "morphisms".into()],
        cases: 60,
        seed: 5,
        ..SuiteConfig::default()
    };
    let a: Vec<_> = run_suite(&cfg).unwrap().iter().map(ConformanceReport::without_timings).collect();
    let b: Vec<_> = run_suite(&cfg).unwrap().iter().map(ConformanceReport::without_timings).collect();
    assert_eq!(a, b);
}

#[test]
fn invalid_configs_are_rejected() {
    assert!(run_suite(&SuiteConfig { cases: 0, ..SuiteConfig::default() }).is_err());
    assert!(run_suite(&SuiteConfig { resolution: Rational::ratio(0, 1), ..SuiteConfig::default() }).is_err());
    assert!(run_suite(&SuiteConfig { instances: vec!["quaternion".into()], ..SuiteConfig::default() }).is_err());
}

/// Every mutant fails `expected`, with a small counterexample that replays.
fn detects<M: Instance<Scalar = Rational>>(m: &M, expected: &str) -> ConformanceReport<Rational> {
    let report = run_instance(m, &Settings::default(), 2000, 3, |_| true);
    assert!(!report.pass(), "{} went undetected", m.label());
    let p = report.property(expected).unwrap_or_else(|| panic!("{expected} not run"));
    assert!(!p.pass, "{}: {expected} passed", m.label());
    for f in report.failures() {
        let c = f.counterexample.as_ref().expect("failures carry counterexamples");
        assert!(c.max_components() <= 2, "{} {}: {c}", m.label(), f.id);
        assert_eq!(replay(m, &f.id, c), Some(true), "{} {} does not replay", m.label(), f.id);
    }
    report
}

#[test]
fn swapped_product_is_caught() {
    detects(&swapped_product(), "ax15");
}

#[test]
fn dropped_merge_is_caught() {
    detects(&dropped_merge(), "canon");
}

#[test]
fn radius_sign_is_caught() {
    detects(&radius_sign(), "ax15");
}

#[test]
fn report_json_round_trip() {
    let report = detects(&swapped_product(), "ax15");
    let back = ConformanceReport::<Rational>::from_json(&report.to_json()).unwrap();
    assert_eq!(back, report);
    let v = report.to_json();
    for key in ["suite_version", "seed", "instance", "properties"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let failing = v["properties"].as_array().unwrap().iter().find(|p| p["pass"] == false).unwrap();
    assert!(failing["counterexample"]["elems"].is_array());
    let passing = v["properties"].as_array().unwrap().iter().find(|p| p["pass"] == true).unwrap();
    assert!(passing.get("counterexample").is_none());
}

fn q(n: i64) -> Rational {
    Rational::ratio(n, 1)
}

fn union(parts: &[(i64, i64)]) -> IntervalUnion<Rational> {
    IntervalUnion::normalize(parts.iter().map(|&(a, b)| Interval::new(q(a), q(b)).unwrap()).collect()).unwrap()
}

#[test]
fn shrinking_a_four_component_union() {
    let m = Unions::<Rational>::new();
    let start = vec![union(&[(-9, -7), (-3, 1), (4, 5), (20, 31)])];
    let fails = |c: &[IntervalUnion<Rational>]| c[0].parts().len() >= 2;
    let out = shrink_elems(&m, start.clone(), fails);
    assert!(fails(&out));
    assert!(out[0].parts().len() <= 4);
    assert_eq!(out[0].parts().len(), 2);
    assert_eq!(shrink_elems(&m, start, fails), out);
}

#[test]
fn minimal_singleton_is_unchanged() {
    let m = Unions::<Rational>::new();
    let start = vec![union(&[(0, 0)])];
    assert_eq!(shrink_elems(&m, start.clone(), |_| true), start);
}

#[test]
fn real_elems_replay() {
    let m = Reals::<Rational>::new();
    let mut rng = rng_for(1);
    let x = qalg::gen::Generate::generate(&m, &mut rng, &GenConfig::default());
    assert_eq!(m.from_elem(&m.to_elem(&x)), Some(x));
    assert_eq!(m.from_elem(&Elem::Interval(Interval::point(q(1)))), None);
}
