//! The law catalogue, written once against [`Instance`].
//!
//! Each property draws a [`Case`] and decides it exactly. Implications
//! whose premise fails on a case hold vacuously.

use num_traits::{One, Signed, Zero};
use qalg::algebra::singular_chain;
use qalg::gen::{self, Class, GenConfig, Rng64};
use qalg::metric::{default_resolution, hausdorff_oracle};
use qalg::spectrum::{radius_bound_holds, RegularScope};
use qalg::{Magnitude, QuasiAlgebra, Scalar, Tag};
use rand::Rng;

use crate::instance::Instance;

/// Elements and scalars drawn for one evaluation.
pub struct Case<M: QuasiAlgebra> {
    pub elems: Vec<M::Elem>,
    pub scalars: Vec<M::Scalar>,
}

impl<M: QuasiAlgebra> Clone for Case<M> {
    fn clone(&self) -> Self {
        Case { elems: self.elems.clone(), scalars: self.scalars.clone() }
    }
}

impl<M: QuasiAlgebra> Case<M> {
    pub fn new(elems: Vec<M::Elem>, scalars: Vec<M::Scalar>) -> Self {
        Case { elems, scalars }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    /// The configured case count.
    Full,
    /// At most this many cases; used for the costly oracle and chain laws.
    Capped(usize),
}

impl Budget {
    pub fn cases(self, configured: usize) -> usize {
        match self {
            Budget::Full => configured,
            Budget::Capped(n) => configured.min(n),
        }
    }
}

/// What generation needs besides the random stream.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings<S> {
    pub gen: GenConfig,
    /// Grid step of the metric oracle.
    pub resolution: S,
}

impl<S: Scalar> Default for Settings<S> {
    fn default() -> Self {
        Settings { gen: GenConfig::default(), resolution: default_resolution() }
    }
}

pub type GenFn<M> = fn(&M, &mut Rng64, &Settings<<M as QuasiAlgebra>::Scalar>) -> Case<M>;
pub type HoldsFn<M> = fn(&M, &Case<M>) -> bool;

pub struct Property<M: Instance> {
    pub id: &'static str,
    pub budget: Budget,
    pub applies: fn(&M) -> bool,
    pub gen: GenFn<M>,
    pub holds: HoldsFn<M>,
}

fn always<M>(_: &M) -> bool {
    true
}

fn has_ball<M: Instance>(m: &M) -> bool {
    m.unit_ball().is_some()
}

fn is_real<M: Instance>(m: &M) -> bool {
    m.tag() == Tag::Real
}

fn elems<M: Instance>(m: &M, rng: &mut Rng64, cfg: &GenConfig, n: usize) -> Vec<M::Elem> {
    (0..n).map(|_| m.generate(rng, cfg)).collect()
}

fn g1<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(elems(m, rng, cfg, 1), vec![])
}

fn g2<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(elems(m, rng, cfg, 2), vec![])
}

fn g3<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(elems(m, rng, cfg, 3), vec![])
}

fn g1s1<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(elems(m, rng, cfg, 1), vec![gen::scalar(rng, cfg)])
}

fn g1s2<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(elems(m, rng, cfg, 1), vec![gen::scalar(rng, cfg), gen::scalar(rng, cfg)])
}

fn g2s1<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(elems(m, rng, cfg, 2), vec![gen::scalar(rng, cfg)])
}

/// `x <= y`.
fn ordered<M: Instance>(m: &M, rng: &mut Rng64, cfg: &GenConfig) -> (M::Elem, M::Elem) {
    let y = m.generate(rng, cfg);
    let x = m.generate_below(rng, cfg, &y);
    (x, y)
}

/// `[x, y]` with `x <= y`, plus a scalar.
fn g_ordered<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let (x, y) = ordered(m, rng, cfg);
    Case::new(vec![x, y], vec![gen::scalar(rng, cfg)])
}

/// `[x, y, z, v]` with `x <= y` and `z <= v`.
fn g_two_ordered<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let (x, y) = ordered(m, rng, cfg);
    let (z, v) = ordered(m, rng, cfg);
    Case::new(vec![x, y, z, v], vec![])
}

/// Ordered or unrelated pair, half of each.
fn g_maybe_ordered<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    if rng.gen_bool(0.5) {
        let (x, y) = ordered(m, rng, cfg);
        Case::new(vec![x, y], vec![])
    } else {
        g2(m, rng, st)
    }
}

/// `[x, y, z]` with `z <= y <= x`.
fn g_descending<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = m.generate(rng, cfg);
    let y = m.generate_below(rng, cfg, &x);
    let z = m.generate_below(rng, cfg, &y);
    Case::new(vec![x, y, z], vec![])
}

fn g_below_zero<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = if rng.gen_bool(0.5) { m.generate_below(rng, cfg, &m.zero()) } else { m.generate(rng, cfg) };
    Case::new(vec![x], vec![])
}

fn g_regular_and_below<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = m.generate_class(rng, cfg, Class::Regular);
    let y = if rng.gen_bool(0.5) { m.generate_below(rng, cfg, &x) } else { m.generate(rng, cfg) };
    Case::new(vec![x, y], vec![])
}

fn g_regular_second<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = m.generate(rng, cfg);
    let y = m.generate_class(rng, cfg, Class::Regular);
    Case::new(vec![x, y], vec![])
}

fn g_fixed_point<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = m.generate(rng, cfg);
    let a = loop {
        let a: M::Scalar = gen::scalar(rng, cfg);
        if !a.is_zero() && a.abs() != M::Scalar::one() {
            break a;
        }
    };
    Case::new(vec![x], vec![a])
}

/// A random unit, falling back to a scaled identity.
fn unit<M: Instance>(m: &M, rng: &mut Rng64, cfg: &GenConfig) -> M::Elem {
    for _ in 0..8 {
        let class = if rng.gen_bool(0.5) { Class::Regular } else { Class::IdentityAdjacent };
        let x = m.generate_class(rng, cfg, class);
        if m.is_unit(&x) {
            return x;
        }
    }
    let a = loop {
        let a: M::Scalar = gen::scalar(rng, cfg);
        if !a.is_zero() {
            break a;
        }
    };
    m.scale(&a, &m.identity())
}

fn g_unit<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(vec![unit(m, rng, cfg)], vec![])
}

fn g_unit_pair<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = unit(m, rng, cfg);
    let y = m.generate(rng, cfg);
    Case::new(vec![x, y], vec![])
}

fn g_unit_triple<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = unit(m, rng, cfg);
    Case::new(vec![x, m.generate(rng, cfg), m.generate(rng, cfg)], vec![])
}

/// Unit `x` and a shift `t` inside the hypothesis radius `1 / (2 ||x^-1||)`
/// about half the time.
fn g_unit_near<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = unit(m, rng, cfg);
    let inv_norm = m.inverse(&x).map(|i| m.norm(&i));
    let t = match inv_norm.and_then(|n| n.exact()) {
        Some(n) if !n.is_zero() => {
            let bound = M::Scalar::one() / (M::Scalar::ratio(2, 1) * n);
            M::Scalar::ratio(rng.gen_range(-15..=15), 8) * bound
        }
        _ => gen::small_scalar(rng),
    };
    Case::new(vec![x], vec![t])
}

fn g_unit_radius<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    let x = unit(m, rng, cfg);
    Case::new(vec![x], vec![gen::positive_scalar(rng, cfg)])
}

fn g_chain_start<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    let cfg = &st.gen;
    Case::new(vec![m.generate(rng, cfg)], vec![])
}

/// Pair plus the oracle resolution.
fn g_oracle<M: Instance>(m: &M, rng: &mut Rng64, st: &Settings<M::Scalar>) -> Case<M> {
    Case::new(elems(m, rng, &st.gen, 2), vec![st.resolution.clone()])
}

fn leq_all<M: Instance>(m: &M, pairs: &[(&M::Elem, &M::Elem)]) -> bool {
    pairs.iter().all(|(a, b)| m.leq(a, b))
}

macro_rules! prop {
    ($id:expr, $gen:expr, $holds:expr) => {
        Property { id: $id, budget: Budget::Full, applies: always, gen: $gen, holds: $holds }
    };
    ($id:expr, $applies:expr, $budget:expr, $gen:expr, $holds:expr) => {
        Property { id: $id, budget: $budget, applies: $applies, gen: $gen, holds: $holds }
    };
}

/// Every model property, in id order.
pub fn catalogue<M: Instance>() -> Vec<Property<M>> {
    vec![
        prop!("ax01", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.same(&m.add(x, y), &m.add(y, x))
        }),
        prop!("ax02", g3, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            m.same(&m.add(x, &m.add(y, z)), &m.add(&m.add(x, y), z))
        }),
        prop!("ax03", g1, |m, c| m.same(&m.add(&c.elems[0], &m.zero()), &c.elems[0])),
        prop!("ax04", g1s2, |m, c| {
            let (x, a, b) = (&c.elems[0], &c.scalars[0], &c.scalars[1]);
            m.same(&m.scale(a, &m.scale(b, x)), &m.scale(&(a.clone() * b.clone()), x))
        }),
        prop!("ax05", g2s1, |m, c| {
            let ([x, y], a) = (&c.elems[..2], &c.scalars[0]) else { unreachable!() };
            m.same(&m.scale(a, &m.add(x, y)), &m.add(&m.scale(a, x), &m.scale(a, y)))
        }),
        prop!("ax06", g1, |m, c| m.same(&m.scale(&M::Scalar::one(), &c.elems[0]), &c.elems[0])),
        prop!("ax07", g1, |m, c| m.same(&m.scale(&M::Scalar::zero(), &c.elems[0]), &m.zero())),
        prop!("ax08", g1s2, |m, c| {
            let (x, a, b) = (&c.elems[0], &c.scalars[0], &c.scalars[1]);
            m.leq(&m.scale(&(a.clone() + b.clone()), x), &m.add(&m.scale(a, x), &m.scale(b, x)))
        }),
        prop!("ax09", g_two_ordered, |m, c| {
            let [x, y, z, v] = &c.elems[..] else { unreachable!() };
            !leq_all(m, &[(x, y), (z, v)]) || m.leq(&m.add(x, z), &m.add(y, v))
        }),
        prop!("ax10", g_ordered, |m, c| {
            let ([x, y], a) = (&c.elems[..], &c.scalars[0]) else { unreachable!() };
            !m.leq(x, y) || m.leq(&m.scale(a, x), &m.scale(a, y))
        }),
        prop!("ax11", g3, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            m.same(&m.mul(x, &m.mul(y, z)), &m.mul(&m.mul(x, y), z))
        }),
        prop!("ax12", g2s1, |m, c| {
            let ([x, y], a) = (&c.elems[..2], &c.scalars[0]) else { unreachable!() };
            let lhs = m.scale(a, &m.mul(x, y));
            m.same(&lhs, &m.mul(&m.scale(a, x), y)) && m.same(&lhs, &m.mul(x, &m.scale(a, y)))
        }),
        prop!("ax13", g1, |m, _| m.same(&m.mul(&m.zero(), &m.zero()), &m.zero())),
        prop!("ax14", g3, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            m.leq(&m.mul(x, &m.add(y, z)), &m.add(&m.mul(x, y), &m.mul(x, z)))
                && m.leq(&m.mul(&m.add(x, y), z), &m.add(&m.mul(x, z), &m.mul(y, z)))
        }),
        prop!("ax15", g_two_ordered, |m, c| {
            let [x, y, z, v] = &c.elems[..] else { unreachable!() };
            !leq_all(m, &[(x, y), (z, v)]) || m.leq(&m.mul(x, z), &m.mul(y, v))
        }),
        prop!("canon", g2s1, |m, c| {
            let ([x, y], a) = (&c.elems[..2], &c.scalars[0]) else { unreachable!() };
            [m.add(x, y), m.mul(x, y), m.scale(a, x)].iter().all(|r| m.is_canonical(r))
        }),
        prop!("chain-strict", has_ball, Budget::Capped(1000), g_chain_start, |m, c| {
            match singular_chain(m, &c.elems[0], m.chain_len()) {
                Ok(report) => report.is_strict(),
                Err(_) => false,
            }
        }),
        prop!("lem-real-order", is_real, Budget::Full, g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.leq(x, y) == (x == y) && m.is_regular(x)
        }),
        prop!("lem-regular-min", g_regular_and_below, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            !(m.is_regular(x) && m.leq(y, x)) || m.same(x, y)
        }),
        prop!("lem-regular-sum", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            !m.is_regular(&m.add(x, y)) || (m.is_regular(x) && m.is_regular(y))
        }),
        prop!("lem-scale-fixed", g_fixed_point, |m, c| {
            let (x, a) = (&c.elems[0], &c.scalars[0]);
            m.is_zero(x) || !m.same(&m.scale(a, x), x)
        }),
        prop!("lem-zero-min", g_below_zero, |m, c| !m.leq(&c.elems[0], &m.zero()) || m.is_zero(&c.elems[0])),
        prop!("met-lipschitz", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            let (nx, ny, h) = (m.norm(x), m.norm(y), m.hausdorff(x, y));
            nx.le_sum(&ny, &h) && ny.le_sum(&nx, &h)
        }),
        prop!("met-ident", g_maybe_ordered, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.hausdorff(x, y).is_zero() == m.same(x, y) && m.hausdorff(x, x).is_zero()
        }),
        prop!("met-norm-diff", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.hausdorff(x, y).le(&m.norm(&m.sub(x, y)))
        }),
        prop!("met-oracle", always, Budget::Capped(1000), g_oracle, |m, c| {
            let ([x, y], res) = (&c.elems[..], c.scalars[0].clone()) else { unreachable!() };
            let closed = m.hausdorff(x, y);
            match hausdorff_oracle(&m.to_elem(x), &m.to_elem(y), &res) {
                Ok((grid, _)) => closed.le_scalar(&grid) && closed.ge_scalar(&(grid - res)),
                Err(_) => false,
            }
        }),
        prop!("met-product", g3, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            m.hausdorff(&m.mul(x, y), &m.mul(x, z)).le(&m.norm(x).mul(&m.hausdorff(y, z)))
        }),
        prop!("met-regular", g_regular_second, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            !m.is_regular(y) || m.hausdorff(x, y).approx_eq(&m.norm(&m.sub(x, y)))
        }),
        prop!("met-scale", g2s1, |m, c| {
            let ([x, y], a) = (&c.elems[..2], &c.scalars[0]) else { unreachable!() };
            m.hausdorff(&m.scale(a, x), &m.scale(a, y)).approx_eq(&m.hausdorff(x, y).scale(a))
        }),
        prop!("met-symmetry", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.hausdorff(x, y).approx_eq(&m.hausdorff(y, x))
        }),
        prop!("met-translate", g3, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            m.hausdorff(&m.add(x, z), &m.add(y, z)).le(&m.hausdorff(x, y))
        }),
        prop!("met-triangle", g3, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            m.hausdorff(x, z).le_sum(&m.hausdorff(x, y), &m.hausdorff(y, z))
        }),
        prop!("nrm0", g1, |m, _| m.norm(&m.zero()).is_zero()),
        prop!("nrm1", g1, |m, c| m.is_zero(&c.elems[0]) || !m.norm(&c.elems[0]).is_zero()),
        prop!("nrm2", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.norm(&m.add(x, y)).le_sum(&m.norm(x), &m.norm(y))
        }),
        prop!("nrm3", g1s1, |m, c| {
            let (x, a) = (&c.elems[0], &c.scalars[0]);
            m.norm(&m.scale(a, x)).approx_eq(&m.norm(x).scale(a))
        }),
        prop!("nrm4", g2, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.norm(&m.mul(x, y)).le(&m.norm(x).mul(&m.norm(y)))
        }),
        prop!("nrm5", g_ordered, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            !m.leq(x, y) || m.norm(x).le(&m.norm(y))
        }),
        prop!("nrm6", g_maybe_ordered, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            m.excess(x, y).is_zero() == m.leq(x, y)
        }),
        prop!("ord", g_descending, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            let antisymmetric = !(m.leq(x, y) && m.leq(y, x)) || m.same(x, y);
            m.leq(x, x) && antisymmetric && (!(m.leq(z, y) && m.leq(y, x)) || m.leq(z, x))
        }),
        prop!("sp-chain", has_ball, Budget::Capped(1000), g_chain_start, |m, c| {
            let x = &c.elems[0];
            let spectrum = m.qsp(x, RegularScope::All);
            match singular_chain(m, x, m.chain_len()) {
                Ok(report) => report.links.iter().all(|l| spectrum.is_subset(&m.qsp(l, RegularScope::All))),
                Err(_) => false,
            }
        }),
        prop!("sp-commute", g_unit_pair, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            let xy = m.qsp(&m.mul(x, y), RegularScope::All);
            let yx = m.qsp(&m.mul(y, x), RegularScope::All);
            !m.is_unit(x) || xy.is_subset(&yx.with_zero())
        }),
        prop!("sp-identity", g1, |m, c| {
            let one = m.identity();
            let x = &c.elems[0];
            m.is_regular(&one) && m.same(&m.mul(&one, x), x) && m.same(&m.mul(x, &one), x)
        }),
        prop!("sp-inverse-bound", g_unit_near, |m, c| {
            let (x, t) = (&c.elems[0], &c.scalars[0]);
            let y = m.add(x, &m.scale(t, &m.identity()));
            let (Some(xi), Some(yi)) = (m.inverse(x), m.inverse(&y)) else { return true };
            let nxi = m.norm(&xi);
            let inside = nxi.mul(&m.hausdorff(x, &y)).scale(&M::Scalar::ratio(2, 1));
            !inside.lt(&Magnitude::of(&M::Scalar::one())) || m.norm(&yi).le(&nxi.scale(&M::Scalar::ratio(2, 1)))
        }),
        prop!("sp-monotone", g_ordered, |m, c| {
            let [x, y] = &c.elems[..] else { unreachable!() };
            !m.leq(x, y) || m.qsp(x, RegularScope::All).is_subset(&m.qsp(y, RegularScope::All))
        }),
        prop!("sp-not-open", has_ball, Budget::Full, g_unit_radius, |m, c| {
            let (x, r) = (&c.elems[0], &c.scalars[0]);
            let ball = m.unit_ball().expect("applies");
            let half = r.clone() / M::Scalar::ratio(2, 1);
            let y = m.add(x, &m.scale(&half, &ball));
            m.hausdorff(x, &y).le_scalar(r) && !m.is_unit(&y)
        }),
        prop!("sp-radius", g1, |m, c| radius_bound_holds(&m.to_elem(&c.elems[0]))),
        prop!("sp-unit-dist", g_unit_triple, |m, c| {
            let [x, y, z] = &c.elems[..] else { unreachable!() };
            !m.is_unit(x) || m.same(&m.mul(x, &m.add(y, z)), &m.add(&m.mul(x, y), &m.mul(x, z)))
        }),
        prop!("sp-unit-regular", g_unit, |m, c| !m.is_unit(&c.elems[0]) || m.is_regular(&c.elems[0])),
    ]
}

/// The properties that apply to `model`.
pub fn properties_for<M: Instance>(model: &M) -> Vec<Property<M>> {
    catalogue().into_iter().filter(|p| (p.applies)(model)).collect()
}

pub fn find<M: Instance>(id: &str) -> Option<Property<M>> {
    catalogue().into_iter().find(|p| p.id == id)
}
