//! Seeded model bugs. The suite must catch each of them.

use qalg::gen::{Class, GenConfig, Generate, Rng64};
use qalg::models::{Disks, Interval, IntervalUnion, Intervals, RealDisk, Unions};
use qalg::spectrum::{RegularScope, Spectral, SpectrumSet};
use qalg::{Elem, Magnitude, Normed, QuasiAlgebra, Scalar, Tag, Unital};

use crate::instance::Instance;

/// Replacement operations; `None` defers to the base model.
pub trait Mutation<M: QuasiAlgebra>: Send + Sync {
    fn name(&self) -> &'static str;

    fn add(&self, _x: &M::Elem, _y: &M::Elem) -> Option<M::Elem> {
        None
    }

    fn scale(&self, _a: &M::Scalar, _x: &M::Elem) -> Option<M::Elem> {
        None
    }

    fn mul(&self, _x: &M::Elem, _y: &M::Elem) -> Option<M::Elem> {
        None
    }
}

/// `base` with some operations replaced.
pub struct Mutant<M, F> {
    pub base: M,
    pub mutation: F,
}

impl<M: QuasiAlgebra, F: Mutation<M>> QuasiAlgebra for Mutant<M, F> {
    type Scalar = M::Scalar;
    type Elem = M::Elem;

    fn tag(&self) -> Tag {
        self.base.tag()
    }

    fn zero(&self) -> M::Elem {
        self.base.zero()
    }

    fn leq(&self, x: &M::Elem, y: &M::Elem) -> bool {
        self.base.leq(x, y)
    }

    fn add(&self, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.mutation.add(x, y).unwrap_or_else(|| self.base.add(x, y))
    }

    fn scale(&self, a: &M::Scalar, x: &M::Elem) -> M::Elem {
        self.mutation.scale(a, x).unwrap_or_else(|| self.base.scale(a, x))
    }

    fn mul(&self, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.mutation.mul(x, y).unwrap_or_else(|| self.base.mul(x, y))
    }

    fn same(&self, x: &M::Elem, y: &M::Elem) -> bool {
        self.base.same(x, y)
    }

    fn is_canonical(&self, x: &M::Elem) -> bool {
        self.base.is_canonical(x)
    }

    fn size(&self, x: &M::Elem) -> usize {
        self.base.size(x)
    }

    fn unit_ball(&self) -> Option<M::Elem> {
        self.base.unit_ball()
    }

    fn is_thin(&self, x: &M::Elem) -> bool {
        self.base.is_thin(x)
    }
}

impl<M: Normed, F: Mutation<M>> Normed for Mutant<M, F> {
    fn norm(&self, x: &M::Elem) -> Magnitude<M::Scalar> {
        self.base.norm(x)
    }

    fn excess(&self, x: &M::Elem, y: &M::Elem) -> Magnitude<M::Scalar> {
        self.base.excess(x, y)
    }
}

impl<M: Unital, F: Mutation<M>> Unital for Mutant<M, F> {
    fn identity(&self) -> M::Elem {
        self.base.identity()
    }

    fn inverse(&self, x: &M::Elem) -> Option<M::Elem> {
        self.base.inverse(x)
    }
}

impl<M: Spectral, F: Mutation<M>> Spectral for Mutant<M, F> {
    fn qsp(&self, x: &M::Elem, scope: RegularScope) -> SpectrumSet<M::Scalar> {
        self.base.qsp(x, scope)
    }
}

impl<M: Generate, F: Mutation<M>> Generate for Mutant<M, F> {
    fn generate_class(&self, rng: &mut Rng64, cfg: &GenConfig, class: Class) -> M::Elem {
        self.base.generate_class(rng, cfg, class)
    }

    fn generate_above(&self, rng: &mut Rng64, cfg: &GenConfig, x: &M::Elem) -> M::Elem {
        self.base.generate_above(rng, cfg, x)
    }

    fn generate_below(&self, rng: &mut Rng64, cfg: &GenConfig, x: &M::Elem) -> M::Elem {
        self.base.generate_below(rng, cfg, x)
    }

    fn shrink(&self, x: &M::Elem) -> Vec<M::Elem> {
        self.base.shrink(x)
    }

    fn complexity(&self, x: &M::Elem) -> u64 {
        self.base.complexity(x)
    }
}

impl<M: Instance, F: Mutation<M>> Instance for Mutant<M, F> {
    fn label(&self) -> String {
        format!("{}+{}", self.base.label(), self.mutation.name())
    }

    fn to_elem(&self, x: &M::Elem) -> Elem<M::Scalar> {
        self.base.to_elem(x)
    }

    fn from_elem(&self, e: &Elem<M::Scalar>) -> Option<M::Elem> {
        self.base.from_elem(e)
    }

    fn chain_len(&self) -> usize {
        self.base.chain_len()
    }
}

/// Interval product from `lo*lo'` and `hi*hi'` only.
pub struct SwappedProduct;

impl<S: Scalar> Mutation<Intervals<S>> for SwappedProduct {
    fn name(&self) -> &'static str {
        "swapped-product"
    }

    fn mul(&self, x: &Interval<S>, y: &Interval<S>) -> Option<Interval<S>> {
        Some(Interval::spanning(x.lo().clone() * y.lo().clone(), x.hi().clone() * y.hi().clone()))
    }
}

/// Union results sorted but never merged.
pub struct DroppedMerge;

fn sorted<S: Scalar>(mut parts: Vec<Interval<S>>) -> IntervalUnion<S> {
    parts.sort_by(|a, b| {
        a.lo().partial_cmp(b.lo()).and_then(|o| Some(o.then(a.hi().partial_cmp(b.hi())?))).expect("ordered")
    });
    IntervalUnion::from_parts_unchecked(parts)
}

fn pairwise<S: Scalar>(
    x: &IntervalUnion<S>,
    y: &IntervalUnion<S>,
    op: impl Fn(&Interval<S>, &Interval<S>) -> Interval<S>,
) -> IntervalUnion<S> {
    sorted(x.parts().iter().flat_map(|a| y.parts().iter().map(|b| op(a, b)).collect::<Vec<_>>()).collect())
}

impl<S: Scalar> Mutation<Unions<S>> for DroppedMerge {
    fn name(&self) -> &'static str {
        "dropped-merge"
    }

    fn add(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> Option<IntervalUnion<S>> {
        Some(pairwise(x, y, Interval::add))
    }

    fn scale(&self, a: &S, x: &IntervalUnion<S>) -> Option<IntervalUnion<S>> {
        Some(sorted(x.parts().iter().map(|p| p.scale(a)).collect()))
    }

    fn mul(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> Option<IntervalUnion<S>> {
        Some(pairwise(x, y, Interval::mul))
    }
}

/// Disk product radius with signed centers instead of their absolute values.
pub struct RadiusSign;

impl<S: Scalar> Mutation<Disks<S>> for RadiusSign {
    fn name(&self) -> &'static str {
        "radius-sign"
    }

    fn mul(&self, x: &RealDisk<S>, y: &RealDisk<S>) -> Option<RealDisk<S>> {
        let radius = x.radius().clone() * y.radius().clone()
            + y.center().clone() * x.radius().clone()
            + x.center().clone() * y.radius().clone();
        Some(RealDisk::from_parts_unchecked(x.center().clone() * y.center().clone(), radius))
    }
}

pub fn swapped_product<S: Scalar>() -> Mutant<Intervals<S>, SwappedProduct> {
    Mutant { base: Intervals::new(), mutation: SwappedProduct }
}

pub fn dropped_merge<S: Scalar>() -> Mutant<Unions<S>, DroppedMerge> {
    Mutant { base: Unions::new(), mutation: DroppedMerge }
}

pub fn radius_sign<S: Scalar>() -> Mutant<Disks<S>, RadiusSign> {
    Mutant { base: Disks::new(), mutation: RadiusSign }
}
