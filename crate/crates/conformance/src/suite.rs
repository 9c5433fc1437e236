use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_traits::Signed;
use qalg::gen::{rng_for, GenConfig};
use qalg::metric::default_resolution;
use qalg::models::{Disks, Functions, Intervals, MatrixSets, Reals, Unions};
use qalg::{QaError, Rational, Result, Scalar};
use rayon::prelude::*;

use crate::hom::hom_properties;
use crate::instance::{is_known, Instance, INSTANCES};
use crate::manifest::anchor;
use crate::property::{find, properties_for, Case, Property, Settings};
use crate::report::{ConformanceReport, Counterexample, PropertyResult, SUITE_VERSION};

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub instances: Vec<String>,
    pub cases: usize,
    pub seed: u64,
    pub gen: GenConfig,
    pub resolution: Rational,
    /// Property ids to run; empty runs all.
    pub only: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            instances: INSTANCES.iter().map(|s| s.to_string()).collect(),
            cases: 10_000,
            seed: 0,
            gen: GenConfig::default(),
            resolution: default_resolution(),
            only: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cases == 0 {
            return Err(QaError::InvalidArgument("cases must be at least 1".into()));
        }
        if !self.resolution.is_positive() {
            return Err(QaError::InvalidArgument("oracle resolution must be positive".into()));
        }
        if let Some(bad) = self.instances.iter().find(|i| !is_known(i)) {
            return Err(QaError::InvalidArgument(format!("unknown instance '{bad}'")));
        }
        Ok(())
    }

    fn selects(&self, id: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|o| o == id)
    }

    fn settings(&self) -> Settings<Rational> {
        Settings { gen: self.gen.clone(), resolution: self.resolution.clone() }
    }
}

/// 64-bit FNV-1a; stable across toolchains, unlike the std hasher.
fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Seed of one property's case stream.
pub fn property_seed(seed: u64, instance: &str, id: &str) -> u64 {
    seed ^ fnv1a(&format!("{instance}/{id}"))
}

fn holds<M: Instance>(m: &M, p: &Property<M>, c: &Case<M>) -> bool {
    // A panicking model counts as a violation.
    catch_unwind(AssertUnwindSafe(|| (p.holds)(m, c))).unwrap_or(false)
}

fn candidates<M: Instance>(m: &M, c: &Case<M>) -> Vec<Case<M>> {
    let mut out = Vec::new();
    for (i, x) in c.elems.iter().enumerate() {
        for s in m.shrink(x) {
            let mut next = c.clone();
            next.elems[i] = s;
            out.push(next);
        }
    }
    for (j, a) in c.scalars.iter().enumerate() {
        for s in a.simpler() {
            let mut next = c.clone();
            next.scalars[j] = s;
            out.push(next);
        }
    }
    out
}

/// Component count first, then scalar size.
fn measure<M: Instance>(m: &M, c: &Case<M>) -> ((usize, usize, u64), u64) {
    (qalg::shrink::measure(m, &c.elems), c.scalars.iter().map(Scalar::complexity).sum())
}

pub fn shrink<M: Instance>(m: &M, p: &Property<M>, start: Case<M>) -> Case<M> {
    qalg::shrink::shrink_case(start, |c| candidates(m, c), |c| measure(m, c), |c| !holds(m, p, c))
}

fn to_counterexample<M: Instance>(m: &M, c: &Case<M>) -> Counterexample<M::Scalar> {
    Counterexample { elems: c.elems.iter().map(|x| m.to_elem(x)).collect(), scalars: c.scalars.clone() }
}

/// Runs one property; stops at the first violation and minimizes it.
pub fn run_property<M: Instance>(
    m: &M,
    p: &Property<M>,
    settings: &Settings<M::Scalar>,
    cases: usize,
    seed: u64,
) -> PropertyResult<M::Scalar> {
    let start = Instant::now();
    let mut rng = rng_for(seed);
    let total = p.budget.cases(cases);
    let mut run = 0;
    let mut counterexample = None;
    while run < total {
        let case = (p.gen)(m, &mut rng, settings);
        run += 1;
        if !holds(m, p, &case) {
            counterexample = Some(to_counterexample(m, &shrink(m, p, case)));
            break;
        }
    }
    PropertyResult {
        id: p.id.to_string(),
        anchor: anchor(p.id).unwrap_or("").to_string(),
        cases: run,
        pass: counterexample.is_none(),
        counterexample,
        millis: start.elapsed().as_millis(),
    }
}

fn finish<S: Scalar>(seed: u64, instance: String, mut properties: Vec<PropertyResult<S>>) -> ConformanceReport<S> {
    properties.sort_by(|a, b| a.id.cmp(&b.id));
    ConformanceReport { suite_version: SUITE_VERSION.to_string(), seed, instance, properties }
}

/// Every applicable model property on one instance.
pub fn run_instance<M: Instance>(
    m: &M,
    settings: &Settings<M::Scalar>,
    cases: usize,
    seed: u64,
    select: impl Fn(&str) -> bool + Sync,
) -> ConformanceReport<M::Scalar> {
    let label = m.label();
    let props: Vec<Property<M>> = properties_for(m).into_iter().filter(|p| select(p.id)).collect();
    let results =
        props.par_iter().map(|p| run_property(m, p, settings, cases, property_seed(seed, &label, p.id))).collect();
    finish(seed, label, results)
}

/// The map-level properties.
pub fn run_morphisms<S: Scalar>(cases: usize, seed: u64, select: impl Fn(&str) -> bool + Sync) -> ConformanceReport<S> {
    let props: Vec<_> = hom_properties::<S>().into_iter().filter(|p| select(p.id)).collect();
    let results = props
        .par_iter()
        .map(|p| {
            let start = Instant::now();
            let n = p.cap.map_or(cases, |c| cases.min(c));
            let outcome = (p.run)(n, property_seed(seed, "morphisms", p.id));
            let (cases, pass, counterexample) = match outcome {
                Ok(o) => (o.cases, o.pass && o.counterexample.is_none(), o.counterexample),
                Err(_) => (0, false, None),
            };
            PropertyResult {
                id: p.id.to_string(),
                anchor: anchor(p.id).unwrap_or("").to_string(),
                cases,
                pass,
                counterexample,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect();
    finish(seed, "morphisms".to_string(), results)
}

/// One report per configured instance, in configuration order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<ConformanceReport<Rational>>> {
    cfg.validate()?;
    let st = cfg.settings();
    let select = |id: &str| cfg.selects(id);
    let (n, seed) = (cfg.cases, cfg.seed);
    Ok(cfg
        .instances
        .iter()
        .map(|name| match name.as_str() {
            "real" => run_instance(&Reals::new(), &st, n, seed, select),
            "interval" => run_instance(&Intervals::new(), &st, n, seed, select),
            "union" => run_instance(&Unions::new(), &st, n, seed, select),
            "disk" => run_instance(&Disks::new(), &st, n, seed, select),
            "matrixset" => run_instance(&MatrixSets::new(), &st, n, seed, select),
            "func" => run_instance(&Functions::new(Unions::new(), cfg.gen.func_size), &st, n, seed, select),
            "morphisms" => run_morphisms(n, seed, select),
            _ => unreachable!("validated"),
        })
        .collect())
}

/// Re-evaluates a recorded counterexample: `Some(true)` when it still
/// violates the property, `None` when it cannot be decoded for `m`.
pub fn replay<M: Instance>(m: &M, id: &str, c: &Counterexample<M::Scalar>) -> Option<bool> {
    let p = find::<M>(id)?;
    let elems = c.elems.iter().map(|e| m.from_elem(e)).collect::<Option<Vec<_>>>()?;
    Some(!holds(m, &p, &Case::new(elems, c.scalars.clone())))
}
