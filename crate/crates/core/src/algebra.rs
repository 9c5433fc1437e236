//! The quasi-algebra contract and the constructions that only need it.
//!
//! A model supplies a partial order, Minkowski-style addition, scalar
//! multiplication and a product. Regularity, symmetry, singular chains and
//! order-membership are derived here from those operations alone.

use std::fmt::{Debug, Display};

use num_traits::One;

use crate::elem::Tag;
use crate::error::{QaError, Result};
use crate::magnitude::Magnitude;
use crate::scalar::Scalar;

/// Chains whose links exceed this many components are refused.
pub const SIZE_LIMIT: usize = 1 << 16;

/// Largest pairwise operation a chain step may attempt, in component pairs.
pub const WORK_LIMIT: usize = 1 << 20;

pub trait QuasiAlgebra: Send + Sync {
    type Scalar: Scalar;
    type Elem: Clone + Debug + Display + PartialEq + Send + Sync;

    fn tag(&self) -> Tag;

    fn zero(&self) -> Self::Elem;

    /// The partial order `x <= y`.
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn scale(&self, a: &Self::Scalar, x: &Self::Elem) -> Self::Elem;

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// Equality of canonical forms.
    fn same(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x == y
    }

    /// Whether `x` satisfies the model's canonical-form invariant.
    fn is_canonical(&self, x: &Self::Elem) -> bool;

    /// Number of components (union parts, set members) in `x`.
    fn size(&self, _x: &Self::Elem) -> usize {
        1
    }

    /// A fixed symmetric singular element used to climb above regular
    /// elements. `None` when the model is an ordinary algebra.
    fn unit_ball(&self) -> Option<Self::Elem> {
        None
    }

    /// Singular elements for which `x + x - x` explodes in description size
    /// without ever filling gaps (finite point sets). Chains start from
    /// [`singular_above`] for these.
    fn is_thin(&self, _x: &Self::Elem) -> bool {
        false
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        self.scale(&-Self::Scalar::one(), x)
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    /// `x - x = 0`
    fn is_regular(&self, x: &Self::Elem) -> bool {
        self.same(&self.sub(x, x), &self.zero())
    }

    /// `-x = x`
    fn is_symmetric(&self, x: &Self::Elem) -> bool {
        self.same(&self.neg(x), x)
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.same(x, &self.zero())
    }
}

/// Norm and the directed distance it induces.
pub trait Normed: QuasiAlgebra {
    fn norm(&self, x: &Self::Elem) -> Magnitude<Self::Scalar>;

    /// Least `r` with `x <= y + a` for some `a` of norm at most `r`.
    fn excess(&self, x: &Self::Elem, y: &Self::Elem) -> Magnitude<Self::Scalar>;

    fn hausdorff(&self, x: &Self::Elem, y: &Self::Elem) -> Magnitude<Self::Scalar> {
        self.excess(x, y).max(self.excess(y, x))
    }
}

pub trait Unital: QuasiAlgebra {
    fn identity(&self) -> Self::Elem;

    /// Two-sided product inverse, if `x` is a unit.
    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn is_unit(&self, x: &Self::Elem) -> bool {
        self.inverse(x).is_some()
    }
}

/// A finite strictly increasing run of elements above `start`.
#[derive(Clone, Debug)]
pub struct ChainReport<E> {
    pub start: E,
    pub links: Vec<E>,
    /// `strict[i]`: the link before `links[i]` is strictly below it.
    pub strict: Vec<bool>,
}

impl<E> ChainReport<E> {
    pub fn is_strict(&self) -> bool {
        self.strict.iter().all(|s| *s)
    }
}

/// `x + B` where `B` is the model's symmetric unit ball; singular and above `x`.
pub fn singular_above<M: QuasiAlgebra>(model: &M, x: &M::Elem) -> Result<M::Elem> {
    let ball = model.unit_ball().ok_or(QaError::Unsupported(model.tag()))?;
    Ok(model.add(x, &ball))
}

fn check_work(a: usize, b: usize) -> Result<()> {
    match a.saturating_mul(b) {
        w if w > WORK_LIMIT => Err(QaError::TooLarge(w)),
        _ => Ok(()),
    }
}

/// `x + x - x`, refused before it materializes too many pairs.
fn grow<M: QuasiAlgebra>(model: &M, x: &M::Elem) -> Result<M::Elem> {
    let s = model.size(x);
    check_work(s, s)?;
    let doubled = model.add(x, x);
    check_work(model.size(&doubled), s)?;
    Ok(model.sub(&doubled, x))
}

/// `x < x1 < x2 < ...` with `x_{i+1} = x_i + x_i - x_i`.
///
/// A regular (or thin) start first climbs to `singular_above(x)`.
pub fn singular_chain<M: QuasiAlgebra>(model: &M, x: &M::Elem, n: usize) -> Result<ChainReport<M::Elem>> {
    if n == 0 {
        return Err(QaError::InvalidArgument("chain length must be at least 1".into()));
    }
    if model.unit_ball().is_none() {
        return Err(QaError::Unsupported(model.tag()));
    }
    let mut links = Vec::with_capacity(n);
    let mut strict = Vec::with_capacity(n);
    let mut prev = x.clone();
    for i in 0..n {
        let next = if i == 0 && (model.is_regular(x) || model.is_thin(x)) {
            singular_above(model, x)?
        } else {
            grow(model, &prev)?
        };
        let size = model.size(&next);
        if size > SIZE_LIMIT {
            return Err(QaError::TooLarge(size));
        }
        strict.push(model.leq(&prev, &next) && !model.same(&prev, &next));
        links.push(next.clone());
        prev = next;
    }
    Ok(ChainReport { start: x.clone(), links, strict })
}

/// `s` lies below some member of `set`.
pub fn l_member<M: QuasiAlgebra>(model: &M, s: &M::Elem, set: &[M::Elem]) -> bool {
    set.iter().any(|r| model.leq(s, r))
}

/// `s` lies above some member of `set`.
pub fn g_member<M: QuasiAlgebra>(model: &M, s: &M::Elem, set: &[M::Elem]) -> bool {
    set.iter().any(|r| model.leq(r, s))
}

pub fn l_subset<M: QuasiAlgebra>(model: &M, t: &[M::Elem], s: &[M::Elem]) -> bool {
    t.iter().all(|x| l_member(model, x, s))
}

pub fn g_subset<M: QuasiAlgebra>(model: &M, t: &[M::Elem], s: &[M::Elem]) -> bool {
    t.iter().all(|x| g_member(model, x, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{IntervalUnion, Reals, Unions};
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn iv(lo: i64, hi: i64) -> IntervalUnion<Rational> {
        IntervalUnion::interval(q(lo), q(hi)).unwrap()
    }

    #[test]
    fn singular_above_adds_unit_ball() {
        let m = Unions::<Rational>::new();
        assert_eq!(singular_above(&m, &iv(5, 5)).unwrap(), iv(4, 6));
        assert_eq!(singular_above(&m, &iv(0, 1)).unwrap(), iv(-1, 2));
        assert_eq!(singular_above(&m, &iv(0, 0)).unwrap(), iv(-1, 1));
        assert!(!m.is_regular(&iv(4, 6)));
    }

    #[test]
    fn chain_from_singular_interval() {
        let m = Unions::<Rational>::new();
        let report = singular_chain(&m, &iv(0, 1), 2).unwrap();
        assert_eq!(report.links, vec![iv(-1, 2), iv(-4, 5)]);
        assert!(report.is_strict());
    }

    #[test]
    fn chain_from_regular_starts_with_ball() {
        let m = Unions::<Rational>::new();
        let report = singular_chain(&m, &iv(0, 0), 1).unwrap();
        assert_eq!(report.links, vec![iv(-1, 1)]);
        assert!(matches!(singular_chain(&m, &iv(0, 0), 0), Err(QaError::InvalidArgument(_))));
    }

    #[test]
    fn algebra_has_no_singular_elements() {
        let r = Reals::<Rational>::new();
        assert!(matches!(singular_above(&r, &q(3)), Err(QaError::Unsupported(Tag::Real))));
        assert!(matches!(singular_chain(&r, &q(3), 2), Err(QaError::Unsupported(_))));
    }

    #[test]
    fn order_membership() {
        let m = Unions::<Rational>::new();
        let set = vec![iv(-2, 2)];
        assert!(l_member(&m, &iv(0, 1), &set));
        assert!(!l_member(&m, &iv(3, 3), &set));
        assert!(!l_member(&m, &iv(0, 0), &[]));
        assert!(g_member(&m, &iv(-3, 3), &set));
        assert!(l_subset(&m, &[iv(0, 0)], &[iv(-1, 1)]));
        assert!(!g_subset(&m, &[iv(0, 0)], &[iv(-1, 1)]));
    }
}
