//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria are evaluated as stated. Criterion 5 is known to be red: the
//! shrinker reaches a smaller witness than the stated halving-map pair. The
//! run exits nonzero when the set of red criteria differs from `KNOWN_RED`,
//! so a new failure or an unexplained fix both surface.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use qalg::algebra::singular_chain;
use qalg::gen::{rng_for, GenConfig, Generate};
use qalg::models::{FuncTuple, Interval, Unions};
use qalg::morphisms::{
    abs_hom, char_coordinates, char_geometric, check_opr, check_quasihom, double, half, interval_to_disk,
    op_norm_estimate, CheckReport, HomSpec,
};
use qalg::spectrum::{eigen_width, qsp, RegularScope, Spectral};
use qalg::{Elem, Rational, Scalar};
use qalg_cli::{enclose, evaluate};
use qalg_conformance::mutants::{dropped_merge, radius_sign, swapped_product};
use qalg_conformance::{replay, run_instance, run_suite, ConformanceReport, Instance, Settings, SuiteConfig};

const KNOWN_RED: &[usize] = &[5];

const MODELS: [&str; 6] = ["real", "interval", "union", "disk", "matrixset", "func"];
const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        let note = note.into();
        self.notes.push(format!("{} {note}", if ok { "ok  " } else { "FAIL" }));
        self.pass &= ok;
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn iv(lo: i64, hi: i64) -> Elem<Rational> {
    Elem::Interval(Interval::new(q(lo, 1), q(hi, 1)).unwrap())
}

fn suite(instances: &[&str], cases: usize, only: &[&str]) -> Vec<ConformanceReport<Rational>> {
    let cfg = SuiteConfig {
        instances: instances.iter().map(|s| s.to_string()).collect(),
        cases,
        seed: SEED,
        only: only.iter().map(|s| s.to_string()).collect(),
        ..SuiteConfig::default()
    };
    run_suite(&cfg).expect("valid config")
}

/// Every listed property ran at least `min_cases` cases without failure.
fn all_pass(out: &mut Outcome, reports: &[ConformanceReport<Rational>], ids: &[&str], min_cases: usize) {
    for r in reports {
        let mut bad = Vec::new();
        let mut least = usize::MAX;
        for id in ids {
            match r.property(id) {
                Some(p) => {
                    least = least.min(p.cases);
                    if !p.pass || p.cases < min_cases {
                        let ce = p.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default();
                        bad.push(format!("{id} ({} cases) {ce}", p.cases));
                    }
                }
                None => bad.push(format!("{id} missing")),
            }
        }
        out.check(bad.is_empty(), format!("{}: {} properties, >= {least} cases each {bad:?}", r.instance, ids.len()));
    }
}

fn axioms() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let mut ids: Vec<String> = (1..=15).map(|i| format!("ax{i:02}")).collect();
    ids.extend((1..=6).map(|i| format!("nrm{i}")));
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    let reports = suite(&MODELS, 10_000, &ids);
    all_pass(&mut out, &reports, &ids, 10_000);
    let took = start.elapsed();
    out.check(took <= Duration::from_secs(300), format!("runtime {:.1}s (budget 300s)", took.as_secs_f64()));
    out
}

fn stated_values() -> Outcome {
    let mut out = Outcome::new();
    let prod = evaluate("[-2,2]*[-4,4]").unwrap();
    out.check(prod == iv(-8, 8), format!("[-2,2]*[-4,4] = {prod}"));
    let halved = half::<Rational>().apply(&iv(-2, 2)).unwrap();
    out.check(halved == iv(-1, 1), format!("half([-2,2]) = {halved}"));
    let three = iv(3, 3);
    out.check(three.leq(&iv(-4, 4)).unwrap(), "{3} <= [-4,4]");
    out.check(!three.leq(&iv(-2, 2)).unwrap(), "not {3} <= [-2,2]");
    let x = evaluate("u([1,2],{5})").unwrap();
    let sp = qsp(&x, RegularScope::All);
    out.check(sp.as_union().map(|u| Elem::Union(u.clone())) == Some(x.clone()), format!("QSp({x}) = {sp}"));
    let sp0 = qsp(&iv(1, 2), RegularScope::ZeroOnly);
    out.check(sp0.is_empty(), format!("zero-only QSp([1,2]) = {sp0}"));
    out
}

fn metric() -> Outcome {
    let mut out = Outcome::new();
    let ids = ["met-norm-diff", "met-regular", "met-product", "met-triangle", "met-lipschitz"];
    let reports = suite(&MODELS, 10_000, &ids);
    all_pass(&mut out, &reports, &ids, 10_000);
    let oracle = suite(&MODELS, 10_000, &["met-oracle"]);
    all_pass(&mut out, &oracle, &["met-oracle"], 1000);
    out
}

fn chains() -> Outcome {
    let mut out = Outcome::new();
    let m = Unions::<Rational>::new();
    let cfg = GenConfig::default();
    let mut rng = rng_for(SEED);
    let (mut strict, mut contained, mut full) = (0, 0, 0);
    let starts = 1000;
    for _ in 0..starts {
        let x = m.generate(&mut rng, &cfg);
        let Ok(chain) = singular_chain(&m, &x, 10) else { continue };
        full += usize::from(chain.links.len() == 10);
        strict += usize::from(chain.is_strict());
        let spectrum = m.qsp(&x, RegularScope::All);
        contained += usize::from(chain.links.iter().all(|l| spectrum.is_subset(&m.qsp(l, RegularScope::All))));
    }
    out.check(full == starts, format!("{full}/{starts} chains with 10 links"));
    out.check(strict == starts, format!("{strict}/{starts} strictly increasing"));
    out.check(contained == starts, format!("{contained}/{starts} keep QSp(x) in every link"));
    out
}

fn quasihom_clean(out: &mut Outcome, h: &HomSpec<Rational>, cases: usize) {
    let reports = check_quasihom(h, cases, SEED).unwrap();
    let least = reports.iter().map(|r| r.cases).min().unwrap_or(0);
    let ok = reports.iter().all(CheckReport::pass) && least >= cases;
    out.check(ok, format!("{}: qh1-qh4 over >= {least} cases", h.name));
}

fn morphisms() -> Outcome {
    let mut out = Outcome::new();
    for h in [abs_hom(q(1, 1)).unwrap(), abs_hom(q(2, 1)).unwrap(), interval_to_disk()] {
        quasihom_clean(&mut out, &h, 10_000);
    }

    let qh3 = check_quasihom(&half::<Rational>(), 10_000, SEED).unwrap().swap_remove(2);
    let witness_pair = vec![iv(-2, 2), iv(-4, 4)];
    let found = qh3.failures.iter().any(|f| f.inputs == witness_pair);
    let minimized = qh3.minimized.as_ref().map(|f| f.inputs.clone()).unwrap_or_default();
    let shown: Vec<String> = minimized.iter().map(ToString::to_string).collect();
    out.check(!qh3.pass(), format!("half fails qh3 ({} of {} cases)", qh3.failed, qh3.cases));
    out.check(found, "half: ([-2,2], [-4,4]) is among the qh3 failures");
    out.check(
        minimized == witness_pair,
        format!("half: shrinking recovers ([-2,2], [-4,4]); got ({})", shown.join(", ")),
    );

    let opr = check_opr(&double::<Rational>(), 10_000, SEED).unwrap();
    let witness = opr.failures.iter().find(|f| f.lhs == iv(3, 3) && f.rhs == iv(-4, 4));
    out.check(
        !opr.pass() && witness.is_some(),
        match witness {
            Some(f) => format!(
                "double: {} <= {} = f({}) but not {} <= {}",
                f.lhs, f.rhs, f.inputs[1], f.inputs[0], f.inputs[1]
            ),
            None => "double: opr witness ({3}, [-4,4]) not found".to_string(),
        },
    );

    for (m, k) in [(2, 2), (3, 2), (2, 3)] {
        let h = char_geometric::<Rational>(m, k, 6).unwrap();
        let r = check_quasihom(&h, 1000, SEED).unwrap().swap_remove(2);
        out.check(
            r.pass() && r.cases >= 1000,
            format!("{}: truncated multiplicativity over {} cases", h.name, r.cases),
        );
    }

    let est = op_norm_estimate(&char_coordinates::<Rational>(2).unwrap(), 10_000, SEED).unwrap();
    let one = Rational::one();
    let e1 = Elem::Func(FuncTuple::new(vec![Elem::Real(one.clone()), Elem::Real(Rational::zero())]));
    let exact_one = est.sampled.le_scalar(&one) && est.sampled.ge_scalar(&one);
    out.check(
        exact_one && est.attained_at.as_ref() == Some(&e1),
        format!("charcoord(2): sup {} attained at (1,0)", est.sampled),
    );
    out.check(
        est.closed_form == Some(one) && est.above_closed_form == 0 && est.samples >= 10_000,
        format!("charcoord(2): {} unit samples, {} above 1", est.samples, est.above_closed_form),
    );
    out
}

fn spectra() -> Outcome {
    let mut out = Outcome::new();
    out.check(
        eigen_width::<Rational>() <= q(1, 1_000_000_000_000),
        format!("eigenvalue enclosure width {}", eigen_width::<Rational>()),
    );
    let commute = suite(&["union", "matrixset"], 1000, &["sp-commute"]);
    all_pass(&mut out, &commute, &["sp-commute"], 1000);
    let ids = ["sp-radius", "sp-unit-dist", "sp-inverse-bound"];
    let rest = suite(&MODELS, 1000, &ids);
    all_pass(&mut out, &rest, &ids, 1000);
    out
}

fn mutant<M: Instance<Scalar = Rational>>(out: &mut Outcome, m: &M) {
    let r = run_instance(m, &Settings::default(), 2000, SEED, |_| true);
    let failures: Vec<_> = r.failures().collect();
    let mut widest = 0;
    let mut replays = true;
    for f in &failures {
        let c = f.counterexample.as_ref().expect("failures carry counterexamples");
        widest = widest.max(c.max_components());
        replays &= replay(m, &f.id, c) == Some(true);
    }
    let first =
        failures.first().map(|f| format!("{}: {}", f.id, f.counterexample.as_ref().unwrap())).unwrap_or_default();
    out.check(
        !failures.is_empty() && widest <= 2 && replays,
        format!(
            "{}: {} properties fail, counterexamples <= {widest} components, e.g. {first}",
            m.label(),
            failures.len()
        ),
    );
}

fn mutation() -> Outcome {
    let mut out = Outcome::new();
    mutant(&mut out, &swapped_product());
    mutant(&mut out, &dropped_merge());
    mutant(&mut out, &radius_sign());
    out
}

fn enclosure() -> Outcome {
    let mut out = Outcome::new();
    let coeffs = [q(0, 1), q(-1, 1), q(1, 1)];
    let unit = Interval::new(q(0, 1), q(1, 1)).unwrap();
    let runs: Vec<_> = (0..=4).map(|d| enclose(&coeffs, &unit, d).unwrap()).collect();
    let expect = |lo: Rational, hi: Rational| Interval::new(lo, hi).unwrap();
    out.check(runs[0].enclosure == expect(q(-1, 1), q(1, 1)), format!("depth 0: {}", runs[0].enclosure));
    out.check(runs[1].enclosure == expect(q(-3, 4), q(1, 2)), format!("depth 1: {}", runs[1].enclosure));
    let sampled = expect(q(-1, 4), q(0, 1));
    out.check(
        runs.iter().all(|r| r.sampled == sampled && r.is_sound()),
        format!("sampled range {sampled} inside every enclosure"),
    );
    let widths: Vec<String> = runs.iter().map(|r| r.enclosure.width().to_string()).collect();
    let decreasing = runs.windows(2).all(|w| w[1].enclosure.width() < w[0].enclosure.width());
    out.check(decreasing, format!("widths through depth 4: {}", widths.join(", ")));
    out
}

fn main() -> ExitCode {
    let criteria: [(usize, &str, fn() -> Outcome); 8] = [
        (1, "axiom suite", axioms),
        (2, "stated values", stated_values),
        (3, "metric theorems", metric),
        (4, "chains", chains),
        (5, "morphism suite", morphisms),
        (6, "spectrum theorems", spectra),
        (7, "mutation sensitivity", mutation),
        (8, "enclosure demo", enclosure),
    ];
    let mut red = Vec::new();
    for (n, title, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {n}: {title} ({:.1}s)", start.elapsed().as_secs_f64());
        for note in &outcome.notes {
            println!("       {note}");
        }
        if !outcome.pass {
            red.push(n);
        }
    }
    println!("acceptance: {}/8 PASS; red {red:?}, expected red {KNOWN_RED:?}", 8 - red.len());
    if red == KNOWN_RED {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
