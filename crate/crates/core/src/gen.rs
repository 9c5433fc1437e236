//! Class-stratified random elements and their shrink candidates.
//!
//! Several laws are vacuous unless their inputs are regular, singular,
//! symmetric or close to the identity, so generation first picks one of
//! those classes uniformly and then builds an element of that class.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::QuasiAlgebra;
use crate::models::{
    Disks, FuncTuple, Functions, Interval, IntervalUnion, Intervals, Matrix2, MatrixSet, MatrixSets, RealDisk, Reals,
    Unions,
};
use crate::scalar::Scalar;

pub type Rng64 = ChaCha8Rng;

/// Deterministic generator for a seed.
pub fn rng_for(seed: u64) -> Rng64 {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Zero,
    Regular,
    Singular,
    Symmetric,
    IdentityAdjacent,
    General,
}

impl Class {
    pub const ALL: [Class; 6] =
        [Class::Zero, Class::Regular, Class::Singular, Class::Symmetric, Class::IdentityAdjacent, Class::General];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Bound on generated numerators.
    pub max_num: i64,
    /// Bound on generated denominators.
    pub max_den: i64,
    /// Union parts per element.
    pub max_parts: usize,
    /// Matrix-set members per element.
    pub max_members: usize,
    /// Index-set size for function tuples.
    pub func_size: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { max_num: 64, max_den: 64, max_parts: 4, max_members: 4, func_size: 4 }
    }
}

impl GenConfig {
    /// Same bounds with fewer components, for bases of function tuples.
    pub fn smaller(&self) -> Self {
        GenConfig { max_parts: self.max_parts.min(2), max_members: self.max_members.min(2), ..self.clone() }
    }
}

/// Random rational `n/d` with `|n| <= max_num`, `1 <= d <= max_den`.
/// Small denominators are favored so that coincidences (touching parts,
/// equal endpoints) actually happen.
pub fn scalar<S: Scalar>(rng: &mut Rng64, cfg: &GenConfig) -> S {
    let n = rng.gen_range(-cfg.max_num..=cfg.max_num);
    let d = match rng.gen_range(0..4) {
        0 => 1,
        1 => *[2, 4].choose(rng).expect("nonempty").min(&cfg.max_den.max(1)),
        _ => rng.gen_range(1..=cfg.max_den.max(1)),
    };
    S::ratio(n, d)
}

pub fn nonneg_scalar<S: Scalar>(rng: &mut Rng64, cfg: &GenConfig) -> S {
    scalar::<S>(rng, cfg).abs()
}

pub fn positive_scalar<S: Scalar>(rng: &mut Rng64, cfg: &GenConfig) -> S {
    loop {
        let v = nonneg_scalar::<S>(rng, cfg);
        if v.is_positive() {
            return v;
        }
    }
}

/// Small offset in `[-1/4, 1/4]`.
pub fn small_scalar<S: Scalar>(rng: &mut Rng64) -> S {
    S::ratio(rng.gen_range(-8..=8), 32)
}

fn interval<S: Scalar>(rng: &mut Rng64, cfg: &GenConfig) -> Interval<S> {
    Interval::spanning(scalar(rng, cfg), scalar(rng, cfg))
}

fn proper_interval<S: Scalar>(rng: &mut Rng64, cfg: &GenConfig) -> Interval<S> {
    let a: S = scalar(rng, cfg);
    let w: S = positive_scalar(rng, cfg);
    Interval::spanning(a.clone(), a + w)
}

/// Random element strictly inside `[lo, hi]` (or equal when degenerate).
fn scalar_between<S: Scalar>(rng: &mut Rng64, lo: &S, hi: &S) -> S {
    let t = S::ratio(rng.gen_range(0..=8), 8);
    lo.clone() + t * (hi.clone() - lo.clone())
}

/// Element generation, neighbourhood construction and shrinking.
pub trait Generate: QuasiAlgebra {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> Self::Elem;

    fn generate(&self, rng: &mut Rng64, cfg: &GenConfig) -> Self::Elem {
        let class = *Class::ALL.choose(rng).expect("nonempty");
        self.generate_class(rng, cfg, class)
    }

    /// Random `y` with `x <= y`.
    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &Self::Elem) -> Self::Elem;

    /// Random `y` with `y <= x`.
    fn generate_below(&self, rng: &mut Rng64, cfg: &GenConfig, x: &Self::Elem) -> Self::Elem;

    /// Strictly simpler elements to try while shrinking.
    fn shrink(&self, x: &Self::Elem) -> Vec<Self::Elem>;

    /// Total scalar description size.
    fn complexity(&self, x: &Self::Elem) -> u64;
}

impl<S: Scalar> Generate for Reals<S> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> S {
        match class {
            Class::Zero | Class::Symmetric => S::zero(),
            Class::IdentityAdjacent => S::one() + small_scalar(rng),
            _ => scalar(rng, cfg),
        }
    }

    fn generate_above(&self, _rng: &mut Rng64, _cfg: &GenConfig, x: &S) -> S {
        x.clone()
    }

    fn generate_below(&self, _rng: &mut Rng64, _cfg: &GenConfig, x: &S) -> S {
        x.clone()
    }

    fn shrink(&self, x: &S) -> Vec<S> {
        x.simpler()
    }

    fn complexity(&self, x: &S) -> u64 {
        x.complexity()
    }
}

fn shrink_interval<S: Scalar>(i: &Interval<S>) -> Vec<Interval<S>> {
    let mut out = Vec::new();
    if !i.is_point() {
        out.push(Interval::point(i.lo().clone()));
        out.push(Interval::point(i.hi().clone()));
    }
    for lo in i.lo().simpler() {
        if lo <= *i.hi() {
            out.push(Interval::spanning(lo, i.hi().clone()));
        }
    }
    for hi in i.hi().simpler() {
        if hi >= *i.lo() {
            out.push(Interval::spanning(i.lo().clone(), hi));
        }
    }
    // Shift towards the origin keeping the width.
    for lo in i.lo().simpler() {
        let hi = lo.clone() + i.width();
        out.push(Interval::spanning(lo, hi));
    }
    out
}

fn interval_complexity<S: Scalar>(i: &Interval<S>) -> u64 {
    i.lo().complexity() + i.hi().complexity()
}

impl<S: Scalar> Generate for Intervals<S> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> Interval<S> {
        match class {
            Class::Zero => self.zero(),
            Class::Regular => Interval::point(scalar(rng, cfg)),
            Class::Singular => proper_interval(rng, cfg),
            Class::Symmetric => {
                let b: S = nonneg_scalar(rng, cfg);
                Interval::spanning(-b.clone(), b)
            }
            Class::IdentityAdjacent => {
                let e: S = small_scalar::<S>(rng).abs();
                Interval::spanning(S::one() - e.clone(), S::one() + e)
            }
            Class::General => interval(rng, cfg),
        }
    }

    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &Interval<S>) -> Interval<S> {
        let a: S = nonneg_scalar(rng, cfg);
        let b: S = nonneg_scalar(rng, cfg);
        Interval::spanning(x.lo().clone() - a, x.hi().clone() + b)
    }

    fn generate_below(&self, rng: &mut Rng64, _cfg: &GenConfig, x: &Interval<S>) -> Interval<S> {
        Interval::spanning(scalar_between(rng, x.lo(), x.hi()), scalar_between(rng, x.lo(), x.hi()))
    }

    fn shrink(&self, x: &Interval<S>) -> Vec<Interval<S>> {
        shrink_interval(x)
    }

    fn complexity(&self, x: &Interval<S>) -> u64 {
        interval_complexity(x)
    }
}

fn union_of<S: Scalar>(parts: Vec<Interval<S>>) -> IntervalUnion<S> {
    IntervalUnion::normalize(parts).expect("nonempty")
}

impl<S: Scalar> Generate for Unions<S> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> IntervalUnion<S> {
        let k = rng.gen_range(1..=cfg.max_parts.max(1));
        match class {
            Class::Zero => self.zero(),
            Class::Regular => IntervalUnion::point(scalar(rng, cfg)),
            Class::Singular => loop {
                let mut parts: Vec<Interval<S>> = (0..k)
                    .map(|_| if rng.gen_bool(0.5) { Interval::point(scalar(rng, cfg)) } else { interval(rng, cfg) })
                    .collect();
                if k == 1 {
                    parts[0] = proper_interval(rng, cfg);
                }
                let u = union_of(parts);
                if u.as_point().is_none() {
                    break u;
                }
            },
            Class::Symmetric => {
                let half = (k / 2).max(1);
                let mut parts = Vec::new();
                for _ in 0..half {
                    let p: Interval<S> = interval(rng, cfg);
                    parts.push(p.scale(&-S::one()));
                    parts.push(p);
                }
                union_of(parts)
            }
            Class::IdentityAdjacent => {
                let e: S = small_scalar::<S>(rng).abs();
                let mut parts = vec![Interval::spanning(S::one() - e.clone(), S::one() + e)];
                if k > 1 && rng.gen_bool(0.5) {
                    parts.push(interval(rng, cfg));
                }
                union_of(parts)
            }
            Class::General => union_of((0..k).map(|_| interval(rng, cfg)).collect()),
        }
    }

    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &IntervalUnion<S>) -> IntervalUnion<S> {
        match rng.gen_range(0..3) {
            0 => {
                let a: S = nonneg_scalar(rng, cfg);
                let b: S = nonneg_scalar(rng, cfg);
                x.add(&IntervalUnion::from(Interval::spanning(-a, b)))
            }
            1 => {
                let mut parts = x.parts().to_vec();
                parts.push(interval(rng, cfg));
                union_of(parts)
            }
            _ => union_of(vec![x.hull()]),
        }
    }

    fn generate_below(&self, rng: &mut Rng64, _cfg: &GenConfig, x: &IntervalUnion<S>) -> IntervalUnion<S> {
        let mut parts = Vec::new();
        for p in x.parts() {
            if parts.is_empty() || rng.gen_bool(0.5) {
                parts
                    .push(Interval::spanning(scalar_between(rng, p.lo(), p.hi()), scalar_between(rng, p.lo(), p.hi())));
            }
        }
        union_of(parts)
    }

    fn shrink(&self, x: &IntervalUnion<S>) -> Vec<IntervalUnion<S>> {
        let parts = x.parts();
        let mut out = Vec::new();
        if parts.len() > 1 {
            for i in 0..parts.len() {
                let mut rest = parts.to_vec();
                rest.remove(i);
                out.push(union_of(rest));
            }
        }
        for (i, p) in parts.iter().enumerate() {
            for q in shrink_interval(p) {
                let mut next = parts.to_vec();
                next[i] = q;
                out.push(union_of(next));
            }
        }
        out
    }

    fn complexity(&self, x: &IntervalUnion<S>) -> u64 {
        x.parts().iter().map(interval_complexity).sum()
    }
}

impl<S: Scalar> Generate for Disks<S> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> RealDisk<S> {
        let disk = |c: S, r: S| RealDisk::new(c, r).expect("non-negative radius");
        match class {
            Class::Zero => self.zero(),
            Class::Regular => RealDisk::point(scalar(rng, cfg)),
            Class::Singular => disk(scalar(rng, cfg), positive_scalar(rng, cfg)),
            Class::Symmetric => disk(S::zero(), nonneg_scalar(rng, cfg)),
            Class::IdentityAdjacent => disk(S::one() + small_scalar(rng), small_scalar::<S>(rng).abs()),
            Class::General => disk(scalar(rng, cfg), nonneg_scalar(rng, cfg)),
        }
    }

    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &RealDisk<S>) -> RealDisk<S> {
        let shift: S = scalar(rng, cfg);
        let extra: S = nonneg_scalar(rng, cfg);
        let r = x.radius().clone() + shift.abs() + extra;
        RealDisk::new(x.center().clone() + shift, r).expect("non-negative radius")
    }

    fn generate_below(&self, rng: &mut Rng64, _cfg: &GenConfig, x: &RealDisk<S>) -> RealDisk<S> {
        // |shift| <= r - r' with r' = t r and |shift| <= (1 - t) r.
        let t = S::ratio(rng.gen_range(0..=8), 8);
        let r = t.clone() * x.radius().clone();
        let slack = x.radius().clone() - r.clone();
        let s = S::ratio(rng.gen_range(-8..=8), 8) * slack;
        RealDisk::new(x.center().clone() + s, r).expect("non-negative radius")
    }

    fn shrink(&self, x: &RealDisk<S>) -> Vec<RealDisk<S>> {
        let mut out = Vec::new();
        for c in x.center().simpler() {
            out.push(RealDisk::from_parts_unchecked(c, x.radius().clone()));
        }
        for r in x.radius().simpler() {
            if !r.is_negative() {
                out.push(RealDisk::from_parts_unchecked(x.center().clone(), r));
            }
        }
        out
    }

    fn complexity(&self, x: &RealDisk<S>) -> u64 {
        x.center().complexity() + x.radius().complexity()
    }
}

/// Entries are kept smaller than set endpoints: triple products of matrices
/// grow quickly.
fn matrix<S: Scalar>(rng: &mut Rng64, cfg: &GenConfig) -> Matrix2<S> {
    let small = GenConfig { max_num: cfg.max_num.min(8), max_den: cfg.max_den.min(4), ..cfg.clone() };
    Matrix2::new(scalar(rng, &small), scalar(rng, &small), scalar(rng, &small), scalar(rng, &small))
}

fn matrix_set<S: Scalar>(members: Vec<Matrix2<S>>) -> MatrixSet<S> {
    MatrixSet::new(members).expect("nonempty")
}

impl<S: Scalar> Generate for MatrixSets<S> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> MatrixSet<S> {
        let k = rng.gen_range(1..=cfg.max_members.max(1));
        match class {
            Class::Zero => self.zero(),
            Class::Regular => MatrixSet::singleton(matrix(rng, cfg)),
            Class::Singular => loop {
                let s = matrix_set((0..k.max(2)).map(|_| matrix(rng, cfg)).collect());
                if s.members().len() > 1 {
                    break s;
                }
            },
            Class::Symmetric => {
                let mut members = vec![];
                for _ in 0..(k / 2).max(1) {
                    let m: Matrix2<S> = matrix(rng, cfg);
                    members.push(m.scale(&-S::one()));
                    members.push(m);
                }
                if rng.gen_bool(0.3) {
                    members.push(Matrix2::zero());
                }
                matrix_set(members)
            }
            Class::IdentityAdjacent => {
                let e = small_scalar::<S>(rng);
                let mut members = vec![Matrix2::identity()];
                if k > 1 {
                    members.push(Matrix2::identity().add(&Matrix2::diag(e.clone(), -e)));
                }
                matrix_set(members)
            }
            Class::General => matrix_set((0..k).map(|_| matrix(rng, cfg)).collect()),
        }
    }

    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &MatrixSet<S>) -> MatrixSet<S> {
        let mut members = x.members().to_vec();
        for _ in 0..rng.gen_range(0..=2) {
            members.push(matrix(rng, cfg));
        }
        matrix_set(members)
    }

    fn generate_below(&self, rng: &mut Rng64, _cfg: &GenConfig, x: &MatrixSet<S>) -> MatrixSet<S> {
        let mut members: Vec<_> = x.members().iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if members.is_empty() {
            members.push(x.members().choose(rng).expect("nonempty").clone());
        }
        matrix_set(members)
    }

    fn shrink(&self, x: &MatrixSet<S>) -> Vec<MatrixSet<S>> {
        let ms = x.members();
        let mut out = Vec::new();
        if ms.len() > 1 {
            for i in 0..ms.len() {
                let mut rest = ms.to_vec();
                rest.remove(i);
                out.push(matrix_set(rest));
            }
        }
        for (i, m) in ms.iter().enumerate() {
            for cell in 0..4 {
                let v = &m.e[cell / 2][cell % 2];
                for s in v.simpler() {
                    let mut next = ms.to_vec();
                    next[i].e[cell / 2][cell % 2] = s;
                    out.push(matrix_set(next));
                }
            }
        }
        out
    }

    fn complexity(&self, x: &MatrixSet<S>) -> u64 {
        x.members().iter().flat_map(|m| m.e.iter().flatten()).map(Scalar::complexity).sum()
    }
}

impl<M: Generate> Generate for Functions<M> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> FuncTuple<M::Elem> {
        let base_cfg = cfg.smaller();
        let values = match class {
            Class::General => (0..self.size).map(|_| self.base.generate(rng, &base_cfg)).collect(),
            Class::Singular => {
                let hot = rng.gen_range(0..self.size);
                (0..self.size)
                    .map(|i| {
                        let c = if i == hot { Class::Singular } else { *Class::ALL.choose(rng).expect("nonempty") };
                        self.base.generate_class(rng, &base_cfg, c)
                    })
                    .collect()
            }
            c => (0..self.size).map(|_| self.base.generate_class(rng, &base_cfg, c)).collect(),
        };
        FuncTuple::new(values)
    }

    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &FuncTuple<M::Elem>) -> FuncTuple<M::Elem> {
        let base_cfg = cfg.smaller();
        FuncTuple::new(x.values.iter().map(|v| self.base.generate_above(rng, &base_cfg, v)).collect())
    }

    fn generate_below(&self, rng: &mut Rng64, cfg: &GenConfig, x: &FuncTuple<M::Elem>) -> FuncTuple<M::Elem> {
        let base_cfg = cfg.smaller();
        FuncTuple::new(x.values.iter().map(|v| self.base.generate_below(rng, &base_cfg, v)).collect())
    }

    fn shrink(&self, x: &FuncTuple<M::Elem>) -> Vec<FuncTuple<M::Elem>> {
        let mut out = Vec::new();
        for (i, v) in x.values.iter().enumerate() {
            for s in self.base.shrink(v) {
                let mut next = x.values.clone();
                next[i] = s;
                out.push(FuncTuple::new(next));
            }
        }
        out
    }

    fn complexity(&self, x: &FuncTuple<M::Elem>) -> u64 {
        x.values.iter().map(|v| self.base.complexity(v)).sum()
    }
}

/// Shrink candidates of a tagged element.
pub fn shrink_elem<S: Scalar>(e: &crate::elem::Elem<S>) -> Vec<crate::elem::Elem<S>> {
    use crate::elem::Elem;
    match e {
        Elem::Real(a) => a.simpler().into_iter().map(Elem::Real).collect(),
        Elem::Interval(a) => shrink_interval(a).into_iter().map(Elem::Interval).collect(),
        Elem::Union(a) => Unions::new().shrink(a).into_iter().map(Elem::Union).collect(),
        Elem::Disk(a) => Disks::new().shrink(a).into_iter().map(Elem::Disk).collect(),
        Elem::MatrixSet(a) => MatrixSets::new().shrink(a).into_iter().map(Elem::MatrixSet).collect(),
        Elem::Func(f) => {
            let mut out = Vec::new();
            for (i, v) in f.values.iter().enumerate() {
                for s in shrink_elem(v) {
                    let mut next = f.values.clone();
                    next[i] = s;
                    out.push(Elem::Func(FuncTuple::new(next)));
                }
            }
            out
        }
    }
}

/// Scalar description size of a tagged element.
pub fn elem_complexity<S: Scalar>(e: &crate::elem::Elem<S>) -> u64 {
    use crate::elem::Elem;
    match e {
        Elem::Real(a) => a.complexity(),
        Elem::Interval(a) => interval_complexity(a),
        Elem::Union(a) => Unions::new().complexity(a),
        Elem::Disk(a) => Disks::new().complexity(a),
        Elem::MatrixSet(a) => MatrixSets::new().complexity(a),
        Elem::Func(f) => f.values.iter().map(elem_complexity).sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn fixed_seed_fixes_stream() {
        let m = Unions::<Rational>::new();
        let cfg = GenConfig::default();
        let a: Vec<_> = {
            let mut rng = rng_for(7);
            (0..50).map(|_| m.generate(&mut rng, &cfg)).collect()
        };
        let b: Vec<_> = {
            let mut rng = rng_for(7);
            (0..50).map(|_| m.generate(&mut rng, &cfg)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn classes_generate_what_they_claim() {
        let cfg = GenConfig::default();
        let mut rng = rng_for(1);
        let u = Unions::<Rational>::new();
        let d = Disks::<Rational>::new();
        let m = MatrixSets::<Rational>::new();
        for _ in 0..200 {
            assert!(u.is_regular(&u.generate_class(&mut rng, &cfg, Class::Regular)));
            assert!(!u.is_regular(&u.generate_class(&mut rng, &cfg, Class::Singular)));
            assert!(u.is_symmetric(&u.generate_class(&mut rng, &cfg, Class::Symmetric)));
            assert!(!d.is_regular(&d.generate_class(&mut rng, &cfg, Class::Singular)));
            assert!(m.is_symmetric(&m.generate_class(&mut rng, &cfg, Class::Symmetric)));
            assert!(!m.is_regular(&m.generate_class(&mut rng, &cfg, Class::Singular)));
            let x = u.generate(&mut rng, &cfg);
            assert!(u.is_canonical(&x));
            assert!(x.parts().len() <= cfg.max_parts);
        }
    }

    #[test]
    fn neighbours_respect_the_order() {
        let cfg = GenConfig::default();
        let mut rng = rng_for(2);
        let u = Unions::<Rational>::new();
        let d = Disks::<Rational>::new();
        let m = MatrixSets::<Rational>::new();
        let i = Intervals::<Rational>::new();
        for _ in 0..300 {
            let x = u.generate(&mut rng, &cfg);
            assert!(u.leq(&x, &u.generate_above(&mut rng, &cfg, &x)));
            assert!(u.leq(&u.generate_below(&mut rng, &cfg, &x), &x));
            let x = d.generate(&mut rng, &cfg);
            assert!(d.leq(&x, &d.generate_above(&mut rng, &cfg, &x)));
            assert!(d.leq(&d.generate_below(&mut rng, &cfg, &x), &x));
            let x = m.generate(&mut rng, &cfg);
            assert!(m.leq(&x, &m.generate_above(&mut rng, &cfg, &x)));
            assert!(m.leq(&m.generate_below(&mut rng, &cfg, &x), &x));
            let x = i.generate(&mut rng, &cfg);
            assert!(i.leq(&x, &i.generate_above(&mut rng, &cfg, &x)));
            assert!(i.leq(&i.generate_below(&mut rng, &cfg, &x), &x));
        }
    }

    #[test]
    fn shrink_candidates_stay_canonical() {
        let u = Unions::<Rational>::new();
        let mut rng = rng_for(3);
        let cfg = GenConfig::default();
        for _ in 0..100 {
            let x = u.generate(&mut rng, &cfg);
            for c in u.shrink(&x) {
                assert!(u.is_canonical(&c));
                assert!(c.parts().len() <= x.parts().len());
            }
        }
        assert!(u.shrink(&u.zero()).is_empty());
    }
}
