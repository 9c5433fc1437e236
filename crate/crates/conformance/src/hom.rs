//! Map-level properties, reported as the `morphisms` instance.

use qalg::models::Interval;
use qalg::morphisms::{
    self, abs_hom, char_coordinates, char_geometric, check_bounded, check_image_qsp, check_injective,
    check_inverse_inequalities, check_opr, check_quasihom, check_regular_reflection, check_unit_complement, double,
    half, identity, interval_to_disk, no_char_witness, op_norm_estimate, shipped, singleton, sym_half, CheckReport,
    Failure, HomSpec,
};
use qalg::{Elem, Result, Scalar, Tag};

use crate::report::Counterexample;

/// Outcome of one map-level property.
pub struct HomOutcome<S> {
    pub cases: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample<S>>,
}

pub type HomRun<S> = fn(usize, u64) -> Result<HomOutcome<S>>;

pub struct HomProperty<S> {
    pub id: &'static str,
    /// Case cap, as for model properties.
    pub cap: Option<usize>,
    pub run: HomRun<S>,
}

fn counterexample<S: Scalar>(f: &Failure<S>) -> Counterexample<S> {
    Counterexample { elems: f.inputs.clone(), scalars: f.scalar.iter().cloned().collect() }
}

/// All reports must pass; the first failure (minimized when possible) is kept.
fn all_pass<S: Scalar>(reports: Vec<CheckReport<S>>) -> HomOutcome<S> {
    let cases = reports.iter().map(|r| r.cases).min().unwrap_or(0);
    let failed = reports.iter().find(|r| !r.pass());
    HomOutcome {
        cases,
        pass: failed.is_none(),
        counterexample: failed.and_then(|r| r.minimized.as_ref().or(r.failures.first())).map(counterexample),
    }
}

fn quasihom_all<S: Scalar>(maps: &[HomSpec<S>], cases: usize, seed: u64) -> Result<HomOutcome<S>> {
    let mut reports = Vec::new();
    for (i, h) in maps.iter().enumerate() {
        reports.extend(check_quasihom(h, cases, seed.wrapping_add(100 * i as u64))?);
    }
    Ok(all_pass(reports))
}

fn each<S: Scalar>(
    maps: &[HomSpec<S>],
    cases: usize,
    seed: u64,
    check: fn(&HomSpec<S>, usize, u64) -> Result<CheckReport<S>>,
) -> Result<HomOutcome<S>> {
    let reports = maps
        .iter()
        .enumerate()
        .map(|(i, h)| check(h, cases, seed.wrapping_add(i as u64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(all_pass(reports))
}

fn opr_maps<S: Scalar>() -> Vec<HomSpec<S>> {
    shipped().into_iter().filter(|h| h.declared.opr == Some(true)).collect()
}

fn ival<S: Scalar>(a: i64, b: i64) -> Elem<S> {
    Elem::Interval(Interval::spanning(S::ratio(a, 1), S::ratio(b, 1)))
}

/// Expected violation: passes when the checker finds exactly the stated
/// witness among its failures.
fn expect_witness<S: Scalar>(report: &CheckReport<S>, inputs: &[Elem<S>]) -> HomOutcome<S> {
    let found = report.failures.iter().any(|f| f.inputs == inputs);
    HomOutcome { cases: report.cases, pass: !report.pass() && found, counterexample: None }
}

pub fn hom_properties<S: Scalar>() -> Vec<HomProperty<S>> {
    vec![
        HomProperty {
            id: "hom-abs",
            cap: None,
            run: |n, seed| {
                let maps = [S::one(), S::ratio(2, 1), S::ratio(7, 2)].map(|c| abs_hom(c).expect("c >= 1"));
                quasihom_all(&maps, n, seed)
            },
        },
        HomProperty { id: "hom-bounded", cap: None, run: |n, seed| each(&shipped(), n, seed, check_bounded) },
        HomProperty {
            id: "hom-chargeo",
            cap: Some(1000),
            run: |n, seed| {
                let maps = [(2, 2), (3, 2), (2, 3)].map(|(m, k)| char_geometric(m, k, 6).expect("valid"));
                quasihom_all(&maps, n, seed)
            },
        },
        HomProperty {
            id: "hom-double-opr-witness",
            cap: None,
            run: |n, seed| {
                let report = check_opr(&double::<S>(), n, seed)?;
                Ok(expect_witness(&report, &[ival(3, 3), ival(-2, 2)]))
            },
        },
        HomProperty {
            id: "hom-half-qh3-witness",
            cap: None,
            run: |n, seed| {
                let reports = check_quasihom(&half::<S>(), n, seed)?;
                Ok(expect_witness(&reports[2], &[ival(-2, 2), ival(-4, 4)]))
            },
        },
        HomProperty {
            id: "hom-identity",
            cap: None,
            run: |n, seed| {
                let maps: Vec<_> = [Tag::Interval, Tag::Union, Tag::Disk].into_iter().map(identity).collect();
                let mut reports = Vec::new();
                for (i, h) in maps.iter().enumerate() {
                    reports.extend(check_quasihom(h, n, seed.wrapping_add(i as u64))?);
                    reports.push(check_opr(h, n, seed.wrapping_add(i as u64))?);
                }
                Ok(all_pass(reports))
            },
        },
        HomProperty {
            id: "hom-image-qsp",
            cap: None,
            run: |n, seed| each(&[half(), interval_to_disk()], n, seed, check_image_qsp),
        },
        HomProperty {
            id: "hom-interval2disk",
            cap: None,
            run: |n, seed| {
                let h = interval_to_disk::<S>();
                let mut reports = check_quasihom(&h, n, seed)?;
                reports.push(check_opr(&h, n, seed)?);
                Ok(all_pass(reports))
            },
        },
        HomProperty {
            id: "hom-inverse",
            cap: None,
            run: |n, seed| Ok(all_pass(vec![check_inverse_inequalities(&sym_half::<S>(), n, seed)?])),
        },
        HomProperty {
            id: "hom-kernel",
            cap: None,
            run: |n, seed| each(&[abs_hom(S::one()).expect("c = 1"), singleton()], n, seed, check_regular_reflection),
        },
        HomProperty {
            id: "hom-no-char",
            cap: None,
            run: |_, _| {
                let trace = no_char_witness::<S>();
                Ok(HomOutcome { cases: 1, pass: trace.contradiction(), counterexample: None })
            },
        },
        HomProperty { id: "hom-opr", cap: None, run: |n, seed| each(&opr_maps(), n, seed, check_opr) },
        HomProperty { id: "hom-opr-injective", cap: None, run: |n, seed| each(&opr_maps(), n, seed, check_injective) },
        HomProperty {
            id: "hom-opnorm",
            cap: None,
            run: |n, seed| {
                let h = char_coordinates::<S>(2).expect("n = 2");
                let est = op_norm_estimate(&h, n, seed)?;
                let one = S::one();
                let attained = est.attained_at.is_some() && est.sampled.le_scalar(&one) && est.sampled.ge_scalar(&one);
                Ok(HomOutcome {
                    cases: est.samples,
                    pass: attained && est.closed_form == Some(one) && est.above_closed_form == 0,
                    counterexample: None,
                })
            },
        },
        HomProperty {
            id: "hom-unit-complement",
            cap: None,
            run: |n, seed| Ok(all_pass(vec![check_unit_complement(&singleton::<S>(), n, seed)?])),
        },
    ]
}

/// Maps available to the morphism suite, for listings.
pub fn registry_names() -> Vec<String> {
    morphisms::shipped::<qalg::Rational>().into_iter().map(|h| h.name).collect()
}
