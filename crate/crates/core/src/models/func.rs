//! Functions from a finite index set into a base quasi-algebra, with
//! pointwise operations and order and the max norm.

use std::fmt;

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::elem::Tag;
use crate::magnitude::Magnitude;

#[derive(Clone, Debug, PartialEq)]
pub struct FuncTuple<E> {
    pub values: Vec<E>,
}

impl<E> FuncTuple<E> {
    pub fn new(values: Vec<E>) -> Self {
        FuncTuple { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<E: fmt::Display> fmt::Display for FuncTuple<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `C(S, X)` for `|S| = size`.
#[derive(Clone, Debug)]
pub struct Functions<M> {
    pub base: M,
    pub size: usize,
}

impl<M: QuasiAlgebra> Functions<M> {
    pub fn new(base: M, size: usize) -> Self {
        assert!(size >= 1, "index set must be nonempty");
        Functions { base, size }
    }

    fn pointwise(
        &self,
        x: &FuncTuple<M::Elem>,
        y: &FuncTuple<M::Elem>,
        f: impl Fn(&M::Elem, &M::Elem) -> M::Elem,
    ) -> FuncTuple<M::Elem> {
        FuncTuple { values: x.values.iter().zip(&y.values).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn constant(&self, v: M::Elem) -> FuncTuple<M::Elem> {
        FuncTuple { values: vec![v; self.size] }
    }
}

impl<M: QuasiAlgebra> QuasiAlgebra for Functions<M> {
    type Scalar = M::Scalar;
    type Elem = FuncTuple<M::Elem>;

    fn tag(&self) -> Tag {
        Tag::Func
    }

    fn zero(&self) -> Self::Elem {
        self.constant(self.base.zero())
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x.values.iter().zip(&y.values).all(|(a, b)| self.base.leq(a, b))
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.pointwise(x, y, |a, b| self.base.add(a, b))
    }

    fn scale(&self, a: &Self::Scalar, x: &Self::Elem) -> Self::Elem {
        FuncTuple { values: x.values.iter().map(|v| self.base.scale(a, v)).collect() }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.pointwise(x, y, |a, b| self.base.mul(a, b))
    }

    fn same(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x.len() == y.len() && x.values.iter().zip(&y.values).all(|(a, b)| self.base.same(a, b))
    }

    fn is_canonical(&self, x: &Self::Elem) -> bool {
        x.len() == self.size && x.values.iter().all(|v| self.base.is_canonical(v))
    }

    fn size(&self, x: &Self::Elem) -> usize {
        x.values.iter().map(|v| self.base.size(v)).max().unwrap_or(0)
    }

    fn unit_ball(&self) -> Option<Self::Elem> {
        self.base.unit_ball().map(|b| self.constant(b))
    }

    fn is_thin(&self, x: &Self::Elem) -> bool {
        x.values.iter().any(|v| self.base.is_thin(v))
    }
}

impl<M: Normed> Normed for Functions<M> {
    fn norm(&self, x: &Self::Elem) -> Magnitude<Self::Scalar> {
        x.values.iter().map(|v| self.base.norm(v)).fold(Magnitude::zero(), Magnitude::max)
    }

    fn excess(&self, x: &Self::Elem, y: &Self::Elem) -> Magnitude<Self::Scalar> {
        x.values.iter().zip(&y.values).map(|(a, b)| self.base.excess(a, b)).fold(Magnitude::zero(), Magnitude::max)
    }
}

impl<M: Unital> Unital for Functions<M> {
    fn identity(&self) -> Self::Elem {
        self.constant(self.base.identity())
    }

    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let values = x.values.iter().map(|v| self.base.inverse(v)).collect::<Option<Vec<_>>>()?;
        Some(FuncTuple { values })
    }
}
