//! Maps between quasi-algebras: the shipped examples, combinators, and
//! sample-based checkers for the quasi-homomorphism conditions.
//!
//! A quasi-homomorphism `f` satisfies, for all `x`, `y` and scalars `a`:
//!
//! 1. `f(a x) = a f(x)`
//! 2. `f(x + y) <= f(x) + f(y)`
//! 3. `f(x y) <= f(x) f(y)`
//! 4. `x <= y` implies `f(x) <= f(y)`
//!
//! An opr map reflects the order instead: `f(x) <= f(y)` implies `x <= y`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::QuasiAlgebra;
use crate::elem::{Elem, Tag};
use crate::error::{QaError, Result};
use crate::gen::{self, rng_for, shrink_elem, Class, GenConfig, Generate, Rng64};
use crate::magnitude::Magnitude;
use crate::models::{Disks, FuncTuple, Functions, Interval, IntervalUnion, Intervals, RealDisk, Reals, Unions};
use crate::scalar::Scalar;
use crate::shrink::{measure_elems, shrink_case};
use crate::spectrum::{qsp, RegularScope};

/// Set of elements a map is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    Real,
    Interval,
    /// Intervals `[-a, a]`.
    SymmetricInterval,
    Union,
    Disk,
    /// Function tuples of reals over an index set of this size.
    RealTuple(usize),
    Any(Tag),
}

impl Carrier {
    pub fn tag(self) -> Tag {
        match self {
            Carrier::Real => Tag::Real,
            Carrier::Interval | Carrier::SymmetricInterval => Tag::Interval,
            Carrier::Union => Tag::Union,
            Carrier::Disk => Tag::Disk,
            Carrier::RealTuple(_) => Tag::Func,
            Carrier::Any(t) => t,
        }
    }

    pub fn admits<S: Scalar>(self, x: &Elem<S>) -> bool {
        match (self, x) {
            (Carrier::SymmetricInterval, Elem::Interval(_)) => x.is_symmetric(),
            (Carrier::RealTuple(n), Elem::Func(f)) => f.len() == n && f.values.iter().all(|v| v.tag() == Tag::Real),
            (c, x) => c.tag() == x.tag(),
        }
    }

    fn check<S: Scalar>(self, x: &Elem<S>) -> Result<()> {
        if self.tag() != x.tag() {
            return Err(QaError::TagMismatch { left: self.tag(), right: x.tag() });
        }
        if !self.admits(x) {
            return Err(QaError::Domain(format!("{x} is outside the carrier {self:?}")));
        }
        Ok(())
    }

    pub fn generate<S: Scalar>(self, rng: &mut Rng64, cfg: &GenConfig) -> Elem<S> {
        match self {
            Carrier::Real | Carrier::Any(Tag::Real) => Elem::Real(Reals::new().generate(rng, cfg)),
            Carrier::Interval | Carrier::Any(Tag::Interval) => Elem::Interval(Intervals::new().generate(rng, cfg)),
            Carrier::SymmetricInterval => Elem::Interval(Intervals::new().generate_class(rng, cfg, Class::Symmetric)),
            Carrier::Union | Carrier::Any(Tag::Union) => Elem::Union(Unions::new().generate(rng, cfg)),
            Carrier::Disk | Carrier::Any(Tag::Disk) => Elem::Disk(Disks::new().generate(rng, cfg)),
            Carrier::Any(Tag::MatrixSet) => Elem::MatrixSet(crate::models::MatrixSets::new().generate(rng, cfg)),
            Carrier::RealTuple(n) => {
                let f = Functions::new(Reals::<S>::new(), n).generate(rng, cfg);
                Elem::Func(FuncTuple::new(f.values.into_iter().map(Elem::Real).collect()))
            }
            Carrier::Any(Tag::Func) => {
                let f = Functions::new(Unions::<S>::new(), cfg.func_size).generate(rng, cfg);
                Elem::Func(FuncTuple::new(f.values.into_iter().map(Elem::Union).collect()))
            }
        }
    }

    /// Random pair `x <= y` in the carrier.
    pub fn generate_ordered<S: Scalar>(self, rng: &mut Rng64, cfg: &GenConfig) -> (Elem<S>, Elem<S>) {
        let y = self.generate::<S>(rng, cfg);
        let x = match (&self, &y) {
            (Carrier::SymmetricInterval, Elem::Interval(i)) => {
                let t = S::ratio(rng.gen_range(0..=8), 8);
                let a = t * i.hi().clone();
                Elem::Interval(Interval::spanning(-a.clone(), a))
            }
            (_, Elem::Interval(i)) => Elem::Interval(Intervals::new().generate_below(rng, cfg, i)),
            (_, Elem::Union(u)) => Elem::Union(Unions::new().generate_below(rng, cfg, u)),
            (_, Elem::Disk(d)) => Elem::Disk(Disks::new().generate_below(rng, cfg, d)),
            (_, Elem::MatrixSet(m)) => Elem::MatrixSet(crate::models::MatrixSets::new().generate_below(rng, cfg, m)),
            _ => y.clone(),
        };
        (x, y)
    }

    /// Hand-picked inputs tried before random ones: endpoints at zero, sign
    /// changes, singletons and the classical counterexamples.
    pub fn adversarial<S: Scalar>(self) -> Vec<Elem<S>> {
        let q = |n: i64| S::from_i64(n).expect("small integer");
        let iv = |a: i64, b: i64| Elem::Interval(Interval::spanning(q(a), q(b)));
        let pt = |a: i64| Elem::Interval(Interval::point(q(a)));
        match self {
            Carrier::Real => vec![q(0), q(1), q(-1), q(-3), q(2), S::ratio(1, 2)].into_iter().map(Elem::Real).collect(),
            Carrier::Interval | Carrier::Any(Tag::Interval) => {
                vec![iv(-2, 2), iv(-4, 4), pt(3), pt(0), iv(0, 1), iv(-1, 0), iv(1, 2), pt(-1)]
            }
            Carrier::SymmetricInterval => vec![iv(-2, 2), iv(-4, 4), pt(0), iv(-1, 1)],
            Carrier::Union | Carrier::Any(Tag::Union) => {
                let u = |parts: Vec<Interval<S>>| Elem::Union(IntervalUnion::normalize(parts).expect("nonempty"));
                vec![
                    u(vec![Interval::point(q(0))]),
                    u(vec![Interval::spanning(q(-2), q(2))]),
                    u(vec![Interval::spanning(q(0), q(1)), Interval::point(q(3))]),
                    u(vec![Interval::point(q(1))]),
                ]
            }
            Carrier::Disk | Carrier::Any(Tag::Disk) => {
                let d = |c: i64, r: i64| Elem::Disk(RealDisk::new(q(c), q(r)).expect("radius"));
                vec![d(0, 1), d(2, 1), d(-1, 0), d(0, 0)]
            }
            Carrier::RealTuple(n) => {
                let tuple = |f: &dyn Fn(usize) -> i64| {
                    Elem::Func(FuncTuple::new((0..n).map(|i| Elem::Real(q(f(i)))).collect()))
                };
                vec![
                    tuple(&|i| i64::from(i == 0)),
                    tuple(&|_| 0),
                    tuple(&|i| if i == 0 { -1 } else { 2 }),
                    tuple(&|_| 3),
                ]
            }
            Carrier::Any(_) => Vec::new(),
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::SymmetricInterval => f.write_str("symmetric interval"),
            Carrier::RealTuple(n) => write!(f, "real^{n}"),
            c => f.write_str(c.tag().name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Rule<S> {
    Identity,
    /// Same center, half the length.
    Half,
    /// Same center, double the length.
    Double,
    /// `[-a, a] -> [-2a, 2a]`
    SymDouble,
    /// `[-a, a] -> [-a/2, a/2]`
    SymHalf,
    /// `x -> [-c|x|, c|x|]`
    Abs(S),
    /// `x -> {0} ∪ {x/m^n : 1<=n<=depth} ∪ {x m^n : 1<=n<=k}`
    CharGeometric {
        m: i64,
        k: u32,
        depth: u32,
    },
    /// `(x_1..x_n) -> {x_1, ..., x_n}`
    CharCoordinates(usize),
    /// `[a, b] -> disk((a+b)/2, (b-a)/2)`
    IntervalToDisk,
    /// `x -> {x}`
    Singleton,
    Sum(Box<HomSpec<S>>, Box<HomSpec<S>>),
    Scaled(S, Box<HomSpec<S>>),
    /// `outer(inner(x))`
    Compose(Box<HomSpec<S>>, Box<HomSpec<S>>),
}

/// Properties a map is expected to have. `None` means unknown: combined
/// maps are re-checked rather than assumed.
#[derive(Clone, Debug, PartialEq)]
pub struct Declared<S> {
    pub quasi_hom: Option<bool>,
    pub opr: Option<bool>,
    /// `||f(x)|| <= k ||x||`
    pub bound: Option<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomSpec<S> {
    pub name: String,
    pub domain: Carrier,
    pub codomain: Tag,
    pub rule: Rule<S>,
    pub declared: Declared<S>,
}

fn q<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("small integer")
}

fn spec<S: Scalar>(
    name: impl Into<String>,
    domain: Carrier,
    codomain: Tag,
    rule: Rule<S>,
    quasi_hom: bool,
    opr: bool,
    bound: Option<S>,
) -> HomSpec<S> {
    HomSpec {
        name: name.into(),
        domain,
        codomain,
        rule,
        declared: Declared { quasi_hom: Some(quasi_hom), opr: Some(opr), bound },
    }
}

pub fn identity<S: Scalar>(tag: Tag) -> HomSpec<S> {
    spec("identity", Carrier::Any(tag), tag, Rule::Identity, true, true, Some(S::one()))
}

pub fn half<S: Scalar>() -> HomSpec<S> {
    spec("half", Carrier::Interval, Tag::Interval, Rule::Half, false, true, Some(S::one()))
}

pub fn double<S: Scalar>() -> HomSpec<S> {
    spec("double", Carrier::Interval, Tag::Interval, Rule::Double, false, false, Some(q(2)))
}

pub fn rho<S: Scalar>() -> HomSpec<S> {
    spec("rho", Carrier::SymmetricInterval, Tag::Interval, Rule::SymDouble, true, true, Some(q(2)))
}

pub fn sym_half<S: Scalar>() -> HomSpec<S> {
    spec("symhalf", Carrier::SymmetricInterval, Tag::Interval, Rule::SymHalf, false, true, Some(S::ratio(1, 2)))
}

/// Requires `c >= 1`; for smaller `c` condition 3 fails.
pub fn abs_hom<S: Scalar>(c: S) -> Result<HomSpec<S>> {
    if c < S::one() {
        return Err(QaError::InvalidArgument(format!("abs constant must be at least 1, got {c}")));
    }
    Ok(spec(format!("abs:{c}"), Carrier::Real, Tag::Interval, Rule::Abs(c.clone()), true, false, Some(c)))
}

pub fn char_geometric<S: Scalar>(m: i64, k: u32, depth: u32) -> Result<HomSpec<S>> {
    if m < 2 || k < 2 || depth < 1 {
        return Err(QaError::InvalidArgument(format!("chargeo needs m >= 2, k >= 2, N >= 1 (got {m},{k},{depth})")));
    }
    let bound = num_traits::pow(q::<S>(m), k as usize);
    Ok(spec(
        format!("chargeo:{m},{k},{depth}"),
        Carrier::Real,
        Tag::Union,
        Rule::CharGeometric { m, k, depth },
        true,
        false,
        Some(bound),
    ))
}

pub fn char_coordinates<S: Scalar>(n: usize) -> Result<HomSpec<S>> {
    if n == 0 {
        return Err(QaError::InvalidArgument("charcoord needs n >= 1".into()));
    }
    Ok(spec(
        format!("charcoord:{n}"),
        Carrier::RealTuple(n),
        Tag::Union,
        Rule::CharCoordinates(n),
        true,
        n == 1,
        Some(S::one()),
    ))
}

pub fn interval_to_disk<S: Scalar>() -> HomSpec<S> {
    spec("interval2disk", Carrier::Interval, Tag::Disk, Rule::IntervalToDisk, true, true, Some(S::one()))
}

pub fn singleton<S: Scalar>() -> HomSpec<S> {
    spec("singleton", Carrier::Real, Tag::Union, Rule::Singleton, true, true, Some(S::one()))
}

fn unknown<S>() -> Declared<S> {
    Declared { quasi_hom: None, opr: None, bound: None }
}

/// `x -> f(x) + g(x)`
pub fn sum<S: Scalar>(f: HomSpec<S>, g: HomSpec<S>) -> Result<HomSpec<S>> {
    if f.domain != g.domain {
        return Err(QaError::TagMismatch { left: f.domain.tag(), right: g.domain.tag() });
    }
    if f.codomain != g.codomain {
        return Err(QaError::TagMismatch { left: f.codomain, right: g.codomain });
    }
    Ok(HomSpec {
        name: format!("({} + {})", f.name, g.name),
        domain: f.domain,
        codomain: f.codomain,
        declared: unknown(),
        rule: Rule::Sum(Box::new(f), Box::new(g)),
    })
}

/// `x -> a f(x)`
pub fn scaled<S: Scalar>(a: S, f: HomSpec<S>) -> HomSpec<S> {
    HomSpec {
        name: format!("{a}*{}", f.name),
        domain: f.domain,
        codomain: f.codomain,
        declared: unknown(),
        rule: Rule::Scaled(a, Box::new(f)),
    }
}

/// `x -> outer(inner(x))`
pub fn compose<S: Scalar>(outer: HomSpec<S>, inner: HomSpec<S>) -> Result<HomSpec<S>> {
    if outer.domain.tag() != inner.codomain {
        return Err(QaError::TagMismatch { left: outer.domain.tag(), right: inner.codomain });
    }
    Ok(HomSpec {
        name: format!("{}∘{}", outer.name, inner.name),
        domain: inner.domain,
        codomain: outer.codomain,
        declared: unknown(),
        rule: Rule::Compose(Box::new(outer), Box::new(inner)),
    })
}

/// Product in the space of maps `X -> X`: composition. Only defined when
/// both maps are endomorphisms of the same space.
pub fn product<S: Scalar>(f: HomSpec<S>, g: HomSpec<S>) -> Result<HomSpec<S>> {
    for h in [&f, &g] {
        if h.domain.tag() != h.codomain {
            return Err(QaError::InvalidArgument(format!("{} is not an endomorphism", h.name)));
        }
    }
    compose(f, g)
}

/// Looks up `half|double|rho|symhalf|abs:c|chargeo:m,k,N|charcoord:n|interval2disk|singleton|identity:TAG`.
pub fn parse_hom<S: Scalar>(name: &str) -> Result<HomSpec<S>> {
    let (head, args) = name.split_once(':').unwrap_or((name, ""));
    let bad = || QaError::InvalidArgument(format!("unknown map '{name}'"));
    let ints = |n: usize| -> Result<Vec<i64>> {
        let v: Vec<i64> = args
            .split(',')
            .map(|a| a.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if v.len() == n {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    match head {
        "half" => Ok(half()),
        "double" => Ok(double()),
        "rho" => Ok(rho()),
        "symhalf" => Ok(sym_half()),
        "interval2disk" => Ok(interval_to_disk()),
        "singleton" => Ok(singleton()),
        "identity" => Tag::parse(args).map(identity).ok_or_else(bad),
        "abs" => abs_hom(S::parse_literal(args).ok_or_else(bad)?),
        "chargeo" => {
            let v = ints(3)?;
            let k = u32::try_from(v[1]).map_err(|_| bad())?;
            let depth = u32::try_from(v[2]).map_err(|_| bad())?;
            char_geometric(v[0], k, depth)
        }
        "charcoord" => {
            let v = ints(1)?;
            char_coordinates(usize::try_from(v[0]).map_err(|_| bad())?)
        }
        _ => Err(bad()),
    }
}

fn point_set<S: Scalar>(points: Vec<S>) -> Elem<S> {
    Elem::Union(IntervalUnion::normalize(points.into_iter().map(Interval::point).collect()).expect("nonempty"))
}

impl<S: Scalar> HomSpec<S> {
    pub fn apply(&self, x: &Elem<S>) -> Result<Elem<S>> {
        if !matches!(self.rule, Rule::Compose(..) | Rule::Sum(..) | Rule::Scaled(..)) {
            self.domain.check(x)?;
        }
        let interval = || x.as_interval().expect("carrier checked");
        let real = || match x {
            Elem::Real(v) => v.clone(),
            _ => unreachable!("carrier checked"),
        };
        Ok(match &self.rule {
            Rule::Identity => x.clone(),
            Rule::Half | Rule::Double => {
                let i = interval();
                let reach = if self.rule == Rule::Half { i.width() / q(4) } else { i.width() };
                Elem::Interval(Interval::spanning(i.center() - reach.clone(), i.center() + reach))
            }
            Rule::SymDouble => Elem::Interval(interval().scale(&q(2))),
            Rule::SymHalf => Elem::Interval(interval().scale(&S::ratio(1, 2))),
            Rule::Abs(c) => {
                let r = c.clone() * real().abs();
                Elem::Interval(Interval::spanning(-r.clone(), r))
            }
            Rule::CharGeometric { m, k, depth } => {
                let v = real();
                let m = q::<S>(*m);
                let mut points = vec![S::zero()];
                let mut down = v.clone();
                for _ in 0..*depth {
                    down = down / m.clone();
                    points.push(down.clone());
                }
                let mut up = v;
                for _ in 0..*k {
                    up = up * m.clone();
                    points.push(up.clone());
                }
                point_set(points)
            }
            Rule::CharCoordinates(_) => match x {
                Elem::Func(f) => point_set(
                    f.values
                        .iter()
                        .map(|v| match v {
                            Elem::Real(r) => r.clone(),
                            _ => unreachable!("carrier checked"),
                        })
                        .collect(),
                ),
                _ => unreachable!("carrier checked"),
            },
            Rule::IntervalToDisk => Elem::Disk(RealDisk::from_interval(interval())),
            Rule::Singleton => point_set(vec![real()]),
            Rule::Sum(f, g) => f.apply(x)?.add(&g.apply(x)?)?,
            Rule::Scaled(a, f) => f.apply(x)?.scale(a),
            Rule::Compose(outer, inner) => outer.apply(&inner.apply(x)?)?,
        })
    }

    /// The map used on the right-hand side of condition 3. Truncated
    /// geometric characters need one more level of `1/m` powers there,
    /// since `xy/m^n = (x/m^(n+1)) (y m)`.
    pub fn product_rhs(&self) -> HomSpec<S> {
        match &self.rule {
            Rule::CharGeometric { m, k, depth } => {
                char_geometric(*m, *k, depth + 1).expect("parameters already validated")
            }
            _ => self.clone(),
        }
    }

    /// Closed-form operator norm for shipped maps.
    pub fn closed_form_norm(&self) -> Option<S> {
        match &self.rule {
            Rule::Identity | Rule::Half | Rule::IntervalToDisk | Rule::Singleton | Rule::CharCoordinates(_) => {
                Some(S::one())
            }
            Rule::Double | Rule::SymDouble => Some(q(2)),
            Rule::SymHalf => Some(S::ratio(1, 2)),
            Rule::Abs(c) => Some(c.clone()),
            Rule::CharGeometric { m, k, .. } => Some(num_traits::pow(q::<S>(*m), *k as usize)),
            Rule::Scaled(a, f) => f.closed_form_norm().map(|n| a.abs() * n),
            Rule::Sum(..) | Rule::Compose(..) => None,
        }
    }
}

/// One violated instance of a checked relation.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure<S> {
    pub inputs: Vec<Elem<S>>,
    pub scalar: Option<S>,
    pub relation: String,
    pub lhs: Elem<S>,
    pub rhs: Elem<S>,
}

impl<S: Scalar> fmt::Display for Failure<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inputs (")?;
        for (i, x) in self.inputs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
        if let Some(a) = &self.scalar {
            write!(f, " with a = {a}")?;
        }
        write!(f, ": {} fails, lhs {} rhs {}", self.relation, self.lhs, self.rhs)
    }
}

/// Recorded failures are capped; `failed` counts all of them.
pub const MAX_RECORDED: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<S> {
    pub condition: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<Failure<S>>,
    /// Shrunk version of the first failure found on a random input.
    pub minimized: Option<Failure<S>>,
}

impl<S: Scalar> CheckReport<S> {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

/// A case generator paired with a relation that must hold on it.
struct Check<'a, S> {
    condition: &'a str,
    adversarial: Vec<(Vec<Elem<S>>, Option<S>)>,
    random: Box<dyn Fn(&mut Rng64) -> (Vec<Elem<S>>, Option<S>) + 'a>,
    /// `Ok(None)` passes, `Ok(Some(failure))` fails. Cases where the
    /// premise does not hold return `Ok(None)`.
    eval: Box<dyn Fn(&[Elem<S>], Option<&S>) -> Result<Option<Failure<S>>> + 'a>,
    /// Shrink candidates must stay inside this carrier.
    carrier: Carrier,
}

fn run_check<S: Scalar>(check: Check<'_, S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let mut rng = rng_for(seed);
    let mut report =
        CheckReport { condition: check.condition.to_string(), cases: 0, failed: 0, failures: vec![], minimized: None };
    let mut first_random: Option<(Vec<Elem<S>>, Option<S>)> = None;
    let adversarial = check.adversarial.into_iter().map(|c| (c, true));
    let total = samples.max(1);
    let mut random_cases = std::iter::from_fn(|| Some(((check.random)(&mut rng), false)));
    let mut cases: Box<dyn Iterator<Item = ((Vec<Elem<S>>, Option<S>), bool)>> =
        Box::new(adversarial.chain(std::iter::from_fn(move || random_cases.next())));
    while report.cases < total {
        let Some(((inputs, scalar), hand_picked)) = cases.next() else { break };
        report.cases += 1;
        if let Some(failure) = (check.eval)(&inputs, scalar.as_ref())? {
            report.failed += 1;
            if report.failures.len() < MAX_RECORDED {
                report.failures.push(failure);
            }
            if !hand_picked && first_random.is_none() {
                first_random = Some((inputs, scalar));
            }
        }
    }
    // Fall back to a hand-picked failure when no random case failed.
    let seed_case = first_random.or_else(|| report.failures.first().map(|f| (f.inputs.clone(), f.scalar.clone())));
    if let Some((inputs, scalar)) = seed_case {
        let carrier = check.carrier;
        let eval = &check.eval;
        let fails = |c: &Vec<Elem<S>>| matches!(eval(c, scalar.as_ref()), Ok(Some(_)));
        let candidates = |c: &Vec<Elem<S>>| {
            let mut out = Vec::new();
            for (i, x) in c.iter().enumerate() {
                for s in shrink_elem(x) {
                    if carrier.admits(&s) {
                        let mut next = c.clone();
                        next[i] = s;
                        out.push(next);
                    }
                }
            }
            out
        };
        let small = shrink_case(inputs, candidates, |c: &Vec<Elem<S>>| measure_elems(c), fails);
        report.minimized = eval(&small, scalar.as_ref())?;
    }
    Ok(report)
}

fn failure<S: Scalar>(
    inputs: &[Elem<S>],
    scalar: Option<&S>,
    relation: &str,
    lhs: Elem<S>,
    rhs: Elem<S>,
) -> Failure<S> {
    Failure { inputs: inputs.to_vec(), scalar: scalar.cloned(), relation: relation.to_string(), lhs, rhs }
}

fn pairs<S: Clone>(items: &[S]) -> Vec<Vec<S>> {
    let mut out = Vec::new();
    for a in items {
        for b in items {
            out.push(vec![a.clone(), b.clone()]);
        }
    }
    out
}

fn adversarial_scalars<S: Scalar>() -> Vec<S> {
    vec![S::zero(), S::one(), -S::one(), q(2), S::ratio(-1, 2)]
}

/// Checks the four quasi-homomorphism conditions, in order, on
/// hand-picked inputs and then random ones, `samples` cases each.
pub fn check_quasihom<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<Vec<CheckReport<S>>> {
    let cfg = GenConfig::default();
    let adv = h.domain.adversarial::<S>();
    // The first two hand-picked inputs form the leading pair, ahead of the
    // full cross product.
    let mut adv_pairs: Vec<(Vec<Elem<S>>, Option<S>)> = Vec::new();
    if adv.len() >= 2 {
        adv_pairs.push((vec![adv[0].clone(), adv[1].clone()], None));
    }
    adv_pairs.extend(pairs(&adv).into_iter().map(|p| (p, None)));
    let carrier = h.domain;

    let homogeneity = Check {
        condition: "qh1: f(a x) = a f(x)",
        adversarial: adversarial_scalars::<S>()
            .into_iter()
            .flat_map(|a| adv.iter().map(move |x| (vec![x.clone()], Some(a.clone()))))
            .collect(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg)], Some(gen::scalar(rng, &cfg)))),
        eval: Box::new(|c, a| {
            let a = a.expect("scalar");
            let lhs = h.apply(&c[0].scale(a))?;
            let rhs = h.apply(&c[0])?.scale(a);
            Ok((!lhs.same(&rhs)).then(|| failure(c, Some(a), "f(a x) = a f(x)", lhs, rhs)))
        }),
        carrier,
    };
    let additivity = Check {
        condition: "qh2: f(x + y) <= f(x) + f(y)",
        adversarial: adv_pairs.clone(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg), carrier.generate(rng, &cfg)], None)),
        eval: Box::new(|c, _| {
            let lhs = h.apply(&c[0].add(&c[1])?)?;
            let rhs = h.apply(&c[0])?.add(&h.apply(&c[1])?)?;
            Ok((!lhs.leq(&rhs)?).then(|| failure(c, None, "f(x + y) <= f(x) + f(y)", lhs, rhs)))
        }),
        carrier,
    };
    let rhs_map = h.product_rhs();
    let rhs_map = &rhs_map;
    let multiplicativity = Check {
        condition: "qh3: f(x y) <= f(x) f(y)",
        adversarial: adv_pairs,
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg), carrier.generate(rng, &cfg)], None)),
        eval: Box::new(move |c, _| {
            let lhs = h.apply(&c[0].mul(&c[1])?)?;
            let rhs = rhs_map.apply(&c[0])?.mul(&rhs_map.apply(&c[1])?)?;
            Ok((!lhs.leq(&rhs)?).then(|| failure(c, None, "f(x y) <= f(x) f(y)", lhs, rhs)))
        }),
        carrier,
    };
    let ordered_adv: Vec<(Vec<Elem<S>>, Option<S>)> =
        pairs(&adv).into_iter().filter(|p| p[0].leq(&p[1]).unwrap_or(false)).map(|p| (p, None)).collect();
    let monotone = Check {
        condition: "qh4: x <= y implies f(x) <= f(y)",
        adversarial: ordered_adv,
        random: Box::new(|rng| {
            let (x, y) = carrier.generate_ordered(rng, &cfg);
            (vec![x, y], None)
        }),
        eval: Box::new(|c, _| {
            if !c[0].leq(&c[1])? {
                return Ok(None);
            }
            let lhs = h.apply(&c[0])?;
            let rhs = h.apply(&c[1])?;
            Ok((!lhs.leq(&rhs)?).then(|| failure(c, None, "x <= y implies f(x) <= f(y)", lhs, rhs)))
        }),
        carrier,
    };
    let mut reports = Vec::with_capacity(4);
    for (i, check) in [homogeneity, additivity, multiplicativity, monotone].into_iter().enumerate() {
        reports.push(run_check(check, samples, seed.wrapping_add(i as u64))?);
    }
    Ok(reports)
}

/// Random pair near each other: `x` below something above `y`, so that
/// `x <= y` sometimes fails while the images may still be ordered.
fn near_pair<S: Scalar>(carrier: Carrier, rng: &mut Rng64, cfg: &GenConfig) -> Vec<Elem<S>> {
    let y = carrier.generate::<S>(rng, cfg);
    let x = match (&carrier, &y) {
        (Carrier::Interval, Elem::Interval(i)) => {
            let up = Intervals::new().generate_above(rng, cfg, i);
            Elem::Interval(Intervals::new().generate_below(rng, cfg, &up))
        }
        (Carrier::Union, Elem::Union(u)) => {
            let up = Unions::new().generate_above(rng, cfg, u);
            Elem::Union(Unions::new().generate_below(rng, cfg, &up))
        }
        (Carrier::Disk, Elem::Disk(d)) => {
            let up = Disks::new().generate_above(rng, cfg, d);
            Elem::Disk(Disks::new().generate_below(rng, cfg, &up))
        }
        _ => carrier.generate(rng, cfg),
    };
    vec![x, y]
}

/// Checks that `f(x) <= f(y)` implies `x <= y`.
pub fn check_opr<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let cfg = GenConfig::default();
    let carrier = h.domain;
    let adv = carrier.adversarial::<S>();
    let mut adversarial: Vec<(Vec<Elem<S>>, Option<S>)> = Vec::new();
    // {3} against [-2,2] first: images under doubling are {3} and [-4,4].
    if matches!(carrier, Carrier::Interval) {
        adversarial.push((vec![adv[2].clone(), adv[0].clone()], None));
    }
    adversarial.extend(pairs(&adv).into_iter().map(|p| (p, None)));
    let check = Check {
        condition: "opr: f(x) <= f(y) implies x <= y",
        adversarial,
        random: Box::new(|rng| {
            if rng.gen_bool(0.5) {
                (near_pair(carrier, rng, &cfg), None)
            } else {
                (vec![carrier.generate(rng, &cfg), carrier.generate(rng, &cfg)], None)
            }
        }),
        eval: Box::new(|c, _| {
            let fx = h.apply(&c[0])?;
            let fy = h.apply(&c[1])?;
            if fx.leq(&fy)? && !c[0].leq(&c[1])? {
                return Ok(Some(failure(c, None, "f(x) <= f(y) implies x <= y", fx, fy)));
            }
            Ok(None)
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// Checks `||f(x)|| <= k ||x||` with the declared `k`.
pub fn check_bounded<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let k =
        h.declared.bound.clone().ok_or_else(|| QaError::InvalidArgument(format!("{} declares no bound", h.name)))?;
    let cfg = GenConfig::default();
    let carrier = h.domain;
    let check = Check {
        condition: "bounded: ||f(x)|| <= k ||x||",
        adversarial: carrier.adversarial::<S>().into_iter().map(|x| (vec![x], None)).collect(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg)], None)),
        eval: Box::new(|c, _| {
            let fx = h.apply(&c[0])?;
            let ok = fx.norm().le(&c[0].norm().scale(&k));
            Ok((!ok).then(|| failure(c, None, "||f(x)|| <= k ||x||", fx, c[0].clone())))
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// Checks that distinct inputs have distinct images.
pub fn check_injective<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let cfg = GenConfig::default();
    let carrier = h.domain;
    let check = Check {
        condition: "injective: f(x) = f(y) implies x = y",
        adversarial: pairs(&carrier.adversarial::<S>()).into_iter().map(|p| (p, None)).collect(),
        random: Box::new(|rng| (near_pair(carrier, rng, &cfg), None)),
        eval: Box::new(|c, _| {
            let fx = h.apply(&c[0])?;
            let fy = h.apply(&c[1])?;
            Ok((fx.same(&fy) && !c[0].same(&c[1])).then(|| failure(c, None, "f(x) = f(y) implies x = y", fx, fy)))
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// For a surjective opr quasi-homomorphism `f` with inverse `g`:
/// `g(y1) + g(y2) <= g(y1 + y2)` and `g(y1) g(y2) <= g(y1 y2)`.
pub fn check_inverse_inequalities<S: Scalar>(
    inverse: &HomSpec<S>,
    samples: usize,
    seed: u64,
) -> Result<CheckReport<S>> {
    let cfg = GenConfig::default();
    let carrier = inverse.domain;
    let check = Check {
        condition: "inverse: g(y1)+g(y2) <= g(y1+y2), g(y1)g(y2) <= g(y1 y2)",
        adversarial: pairs(&carrier.adversarial::<S>()).into_iter().map(|p| (p, None)).collect(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg), carrier.generate(rng, &cfg)], None)),
        eval: Box::new(|c, _| {
            let g = |x: &Elem<S>| inverse.apply(x);
            let sum_l = g(&c[0])?.add(&g(&c[1])?)?;
            let sum_r = g(&c[0].add(&c[1])?)?;
            if !sum_l.leq(&sum_r)? {
                return Ok(Some(failure(c, None, "g(y1)+g(y2) <= g(y1+y2)", sum_l, sum_r)));
            }
            let prod_l = g(&c[0])?.mul(&g(&c[1])?)?;
            let prod_r = g(&c[0].mul(&c[1])?)?;
            Ok((!prod_l.leq(&prod_r)?).then(|| failure(c, None, "g(y1) g(y2) <= g(y1 y2)", prod_l, prod_r)))
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// For maps with trivial kernel: `f(x)` regular implies `x` regular.
pub fn check_regular_reflection<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let cfg = GenConfig::default();
    let carrier = h.domain;
    let check = Check {
        condition: "kernel: f(x) regular implies x regular",
        adversarial: carrier.adversarial::<S>().into_iter().map(|x| (vec![x], None)).collect(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg)], None)),
        eval: Box::new(|c, _| {
            let fx = h.apply(&c[0])?;
            Ok((fx.is_regular() && !c[0].is_regular())
                .then(|| failure(c, None, "f(x) regular implies x regular", fx, c[0].clone())))
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// For unit-preserving maps: `f(1 - x) = 1 - f(x)` whenever `f(x)` is regular.
pub fn check_unit_complement<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let cfg = GenConfig::default();
    let carrier = h.domain;
    let check = Check {
        condition: "unit: f(1 - x) = 1 - f(x) for regular f(x)",
        adversarial: carrier.adversarial::<S>().into_iter().map(|x| (vec![x], None)).collect(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg)], None)),
        eval: Box::new(|c, _| {
            let fx = h.apply(&c[0])?;
            if !fx.is_regular() {
                return Ok(None);
            }
            let one = c[0].identity_like();
            let lhs = h.apply(&one.sub(&c[0])?)?;
            let rhs = fx.identity_like().sub(&fx)?;
            Ok((!lhs.same(&rhs)).then(|| failure(c, None, "f(1 - x) = 1 - f(x)", lhs, rhs)))
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// For maps whose image leaves no regular element uncovered:
/// `QSp(f(x)) ⊆ QSp(x)`.
pub fn check_image_qsp<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<CheckReport<S>> {
    let cfg = GenConfig::default();
    let carrier = h.domain;
    let check = Check {
        condition: "image: QSp(f(x)) ⊆ QSp(x)",
        adversarial: carrier.adversarial::<S>().into_iter().map(|x| (vec![x], None)).collect(),
        random: Box::new(|rng| (vec![carrier.generate(rng, &cfg)], None)),
        eval: Box::new(|c, _| {
            let fx = h.apply(&c[0])?;
            let ok = qsp(&fx, RegularScope::All).is_subset(&qsp(&c[0], RegularScope::All));
            Ok((!ok).then(|| failure(c, None, "QSp(f(x)) ⊆ QSp(x)", fx, c[0].clone())))
        }),
        carrier,
    };
    run_check(check, samples, seed)
}

/// Sampled lower bound for `sup ||f(x)||` over `||x|| = 1`, with the
/// closed-form value when one is known.
#[derive(Clone, Debug, PartialEq)]
pub struct OpNormEstimate<S> {
    pub sampled: Magnitude<S>,
    pub attained_at: Option<Elem<S>>,
    pub closed_form: Option<S>,
    pub samples: usize,
    /// Samples whose image norm exceeded the closed form.
    pub above_closed_form: usize,
}

/// Rescales `x` to norm one when its norm is exactly representable.
fn normalized<S: Scalar>(x: &Elem<S>) -> Option<Elem<S>> {
    let n = x.norm().exact()?;
    (!n.is_zero()).then(|| x.scale(&(S::one() / n)))
}

pub fn op_norm_estimate<S: Scalar>(h: &HomSpec<S>, samples: usize, seed: u64) -> Result<OpNormEstimate<S>> {
    let cfg = GenConfig::default();
    let mut rng = rng_for(seed);
    let closed_form = h.closed_form_norm();
    let mut est = OpNormEstimate {
        sampled: Magnitude::zero(),
        attained_at: None,
        closed_form: closed_form.clone(),
        samples: 0,
        above_closed_form: 0,
    };
    let mut inputs = h.domain.adversarial::<S>().into_iter();
    while est.samples < samples {
        let x = match inputs.next() {
            Some(x) => x,
            None => h.domain.generate(&mut rng, &cfg),
        };
        let Some(unit) = normalized(&x) else { continue };
        if !h.domain.admits(&unit) {
            continue;
        }
        est.samples += 1;
        let image = h.apply(&unit)?.norm();
        if let Some(c) = &closed_form {
            if !image.le_scalar(c) {
                est.above_closed_form += 1;
            }
        }
        if est.attained_at.is_none() || est.sampled.lt(&image) {
            est.sampled = image;
            est.attained_at = Some(unit);
        }
    }
    Ok(est)
}

/// Why no quasi-homomorphism maps the closed bounded subsets of the reals
/// onto the reals: the order on the reals is equality.
#[derive(Clone, Debug, PartialEq)]
pub struct NoCharTrace<S> {
    /// `f({0}) = 0`, forced by homogeneity with `a = 0`.
    pub phi_zero: S,
    /// `f({1}) = 1` for a nonzero unit-preserving map.
    pub phi_one: S,
    /// `B = {0, 1}`, above both singletons.
    pub b: IntervalUnion<S>,
    pub zero_below_b: bool,
    pub one_below_b: bool,
}

impl<S: Scalar> NoCharTrace<S> {
    /// Order preservation would force `f({0}) = f(B) = f({1})`.
    pub fn contradiction(&self) -> bool {
        self.zero_below_b && self.one_below_b && self.phi_zero != self.phi_one
    }
}

impl<S: Scalar> fmt::Display for NoCharTrace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f({{0}}) = {}  (homogeneity: f(0 x) = 0 f(x))", self.phi_zero)?;
        writeln!(f, "f({{1}}) = {}  (unit preserved)", self.phi_one)?;
        writeln!(f, "B = {}", self.b)?;
        writeln!(f, "{{0}} <= B: {}", self.zero_below_b)?;
        writeln!(f, "{{1}} <= B: {}", self.one_below_b)?;
        write!(
            f,
            "order preservation forces f(B) = {} and f(B) = {}: contradiction = {}",
            self.phi_zero,
            self.phi_one,
            self.contradiction()
        )
    }
}

pub fn no_char_witness<S: Scalar>() -> NoCharTrace<S> {
    let unions = Unions::<S>::new();
    let zero = unions.zero();
    let one = IntervalUnion::point(S::one());
    let b = IntervalUnion::normalize(vec![Interval::point(S::zero()), Interval::point(S::one())]).expect("nonempty");
    NoCharTrace {
        phi_zero: S::zero(),
        phi_one: S::one(),
        zero_below_b: unions.leq(&zero, &b),
        one_below_b: unions.leq(&one, &b),
        b,
    }
}

/// Every shipped map with representative parameters.
pub fn shipped<S: Scalar>() -> Vec<HomSpec<S>> {
    vec![
        half(),
        double(),
        rho(),
        sym_half(),
        abs_hom(S::one()).expect("c = 1"),
        abs_hom(q(2)).expect("c = 2"),
        char_geometric(2, 2, 3).expect("valid"),
        char_coordinates(2).expect("valid"),
        interval_to_disk(),
        singleton(),
        identity(Tag::Union),
    ]
}

pub fn pick_shipped<S: Scalar>(rng: &mut Rng64) -> HomSpec<S> {
    shipped().choose(rng).expect("nonempty").clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type Q = Rational;

    fn r(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn iv(a: i64, b: i64) -> Elem<Q> {
        Elem::Interval(Interval::spanning(r(a), r(b)))
    }

    fn pts(v: &[i64]) -> Elem<Q> {
        point_set(v.iter().map(|&n| r(n)).collect())
    }

    fn tuple(v: &[i64]) -> Elem<Q> {
        Elem::Func(FuncTuple::new(v.iter().map(|&n| Elem::Real(r(n))).collect()))
    }

    #[test]
    fn shipped_maps_on_examples() {
        assert_eq!(half::<Q>().apply(&iv(-2, 2)).unwrap(), iv(-1, 1));
        assert_eq!(double::<Q>().apply(&iv(-2, 2)).unwrap(), iv(-4, 4));
        assert_eq!(abs_hom(r(1)).unwrap().apply(&Elem::Real(r(-3))).unwrap(), iv(-3, 3));
        let geo = char_geometric::<Q>(2, 2, 3).unwrap();
        assert_eq!(geo.apply(&Elem::Real(r(8))).unwrap(), pts(&[0, 1, 2, 4, 16, 32]));
        assert_eq!(geo.apply(&Elem::Real(r(-8))).unwrap(), pts(&[-32, -16, -4, -2, -1, 0]));
        assert_eq!(geo.apply(&Elem::Real(r(0))).unwrap(), pts(&[0]));
        let coords = char_coordinates::<Q>(2).unwrap();
        assert_eq!(coords.apply(&tuple(&[1, 3])).unwrap(), pts(&[1, 3]));
        assert_eq!(coords.apply(&tuple(&[5, 5])).unwrap(), pts(&[5]));
        assert_eq!(coords.apply(&tuple(&[1, 0])).unwrap(), pts(&[0, 1]));
        let disk = |c: i64, rad: i64| Elem::Disk(RealDisk::new(r(c), r(rad)).unwrap());
        assert_eq!(interval_to_disk::<Q>().apply(&iv(0, 2)).unwrap(), disk(1, 1));
        assert_eq!(interval_to_disk::<Q>().apply(&iv(-1, 3)).unwrap(), disk(1, 2));
        assert_eq!(interval_to_disk::<Q>().apply(&iv(4, 4)).unwrap(), disk(4, 0));
    }

    #[test]
    fn apply_checks_the_domain() {
        assert!(matches!(half::<Q>().apply(&Elem::Real(r(1))), Err(QaError::TagMismatch { .. })));
        assert!(matches!(rho::<Q>().apply(&iv(0, 1)), Err(QaError::Domain(_))));
        assert!(char_coordinates::<Q>(2).unwrap().apply(&tuple(&[1, 2, 3])).is_err());
    }

    #[test]
    fn combinators() {
        let hh = compose(half::<Q>(), half()).unwrap();
        assert_eq!(
            hh.apply(&iv(0, 4)).unwrap(),
            Elem::Interval(Interval::spanning(Q::new(3.into(), 2.into()), Q::new(5.into(), 2.into())))
        );
        let ii = sum(identity::<Q>(Tag::Interval), identity(Tag::Interval)).unwrap();
        assert_eq!(ii.apply(&iv(0, 1)).unwrap(), iv(0, 2));
        let zero = scaled(r(0), half::<Q>());
        assert!(zero.apply(&iv(-3, 7)).unwrap().is_zero());
        assert_eq!(zero.declared.quasi_hom, None);
        assert!(compose(half::<Q>(), singleton()).is_err());
        assert!(sum(half::<Q>(), interval_to_disk()).is_err());
        assert!(product(half::<Q>(), interval_to_disk()).is_err());
        assert!(product(half::<Q>(), double()).is_ok());
    }

    #[test]
    fn registry_round_trip() {
        for name in
            ["half", "double", "rho", "symhalf", "abs:2", "chargeo:2,2,3", "charcoord:2", "interval2disk", "singleton"]
        {
            assert_eq!(parse_hom::<Q>(name).unwrap().name, name);
        }
        assert_eq!(parse_hom::<Q>("identity:union").unwrap().codomain, Tag::Union);
        for bad in ["nope", "abs:1/2", "chargeo:1,2,3", "chargeo:2,2", "charcoord:0", "identity:what"] {
            assert!(parse_hom::<Q>(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn abs_and_disk_maps_are_quasi_homomorphisms() {
        for h in [abs_hom(r(1)).unwrap(), abs_hom(r(3)).unwrap(), interval_to_disk(), identity(Tag::Interval)] {
            for report in check_quasihom(&h, 500, 7).unwrap() {
                assert!(report.pass(), "{}: {}", h.name, report.failures[0]);
                assert_eq!(report.cases, 500);
            }
        }
    }

    #[test]
    fn half_map_breaks_submultiplicativity() {
        let reports = check_quasihom(&half::<Q>(), 200, 1).unwrap();
        let qh3 = &reports[2];
        assert!(!qh3.pass());
        let first = &qh3.failures[0];
        assert_eq!(first.inputs, vec![iv(-2, 2), iv(-4, 4)]);
        assert_eq!(first.lhs, iv(-4, 4));
        assert_eq!(first.rhs, iv(-2, 2));
        // Smaller witnesses exist, so shrinking moves past the hand-picked pair.
        let small = qh3.minimized.as_ref().unwrap();
        assert!(small.inputs.iter().all(|x| x.size() == 1));
        assert!(measure_elems(&small.inputs) <= measure_elems(&first.inputs));
        assert!(reports[0].pass() && reports[1].pass());
        // {0} <= [0,4] but {0} is not inside [1,3].
        assert!(!reports[3].pass());
    }

    #[test]
    fn double_map_is_not_opr() {
        let report = check_opr(&double::<Q>(), 200, 3).unwrap();
        assert!(!report.pass());
        let first = &report.failures[0];
        assert_eq!(first.inputs, vec![iv(3, 3), iv(-2, 2)]);
        assert_eq!(first.lhs, iv(3, 3));
        assert_eq!(first.rhs, iv(-4, 4));
        assert!(check_opr(&half::<Q>(), 500, 3).unwrap().pass());
        assert!(check_opr(&rho::<Q>(), 500, 3).unwrap().pass());
    }

    #[test]
    fn declared_flags_match_checkers() {
        for h in shipped::<Q>() {
            let quasi = check_quasihom(&h, 300, 11).unwrap().iter().all(CheckReport::pass);
            assert_eq!(Some(quasi), h.declared.quasi_hom, "quasi-hom flag of {}", h.name);
            let opr = check_opr(&h, 300, 11).unwrap().pass();
            assert_eq!(Some(opr), h.declared.opr, "opr flag of {}", h.name);
            assert!(check_bounded(&h, 300, 11).unwrap().pass(), "bound of {}", h.name);
        }
    }

    #[test]
    fn truncated_character_multiplicativity() {
        let h = char_geometric::<Q>(2, 3, 6).unwrap();
        let reports = check_quasihom(&h, 300, 5).unwrap();
        assert!(reports.iter().all(CheckReport::pass));
    }

    #[test]
    fn opr_lemmas() {
        for h in shipped::<Q>().into_iter().filter(|h| h.declared.opr == Some(true)) {
            assert!(check_injective(&h, 300, 2).unwrap().pass(), "{}", h.name);
        }
        assert!(check_inverse_inequalities(&sym_half::<Q>(), 300, 2).unwrap().pass());
        for h in [abs_hom(r(1)).unwrap(), singleton()] {
            assert!(check_regular_reflection(&h, 300, 2).unwrap().pass(), "{}", h.name);
        }
        assert!(check_unit_complement(&singleton::<Q>(), 300, 2).unwrap().pass());
        for h in [half::<Q>(), interval_to_disk()] {
            assert!(check_image_qsp(&h, 300, 2).unwrap().pass(), "{}", h.name);
        }
    }

    #[test]
    fn operator_norms() {
        let est = op_norm_estimate(&char_coordinates::<Q>(2).unwrap(), 500, 9).unwrap();
        assert_eq!(est.closed_form, Some(r(1)));
        assert_eq!(est.sampled.exact(), Some(r(1)));
        assert_eq!(est.above_closed_form, 0);
        let e1 = Elem::Func(FuncTuple::new(vec![Elem::Real(r(1)), Elem::Real(r(0))]));
        assert_eq!(est.attained_at, Some(e1));
        let est = op_norm_estimate(&singleton::<Q>(), 100, 9).unwrap();
        assert_eq!(est.sampled.exact(), Some(r(1)));
        let twice = scaled(r(2), identity::<Q>(Tag::Interval));
        assert_eq!(op_norm_estimate(&twice, 100, 9).unwrap().closed_form, Some(r(2)));
        assert_eq!(op_norm_estimate(&twice, 100, 9).unwrap().sampled.exact(), Some(r(2)));
    }

    #[test]
    fn no_character_trace() {
        let t = no_char_witness::<Q>();
        assert_eq!((t.phi_zero.clone(), t.phi_one.clone()), (r(0), r(1)));
        assert!(t.zero_below_b && t.one_below_b);
        assert!(t.contradiction());
        assert!(t.to_string().contains("contradiction = true"));
    }
}
