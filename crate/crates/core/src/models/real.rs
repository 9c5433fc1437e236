use std::marker::PhantomData;

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::elem::Tag;
use crate::magnitude::Magnitude;
use crate::scalar::Scalar;

/// The real line as an ordinary algebra: every element is regular and the
/// order is equality.
#[derive(Debug)]
pub struct Reals<S>(PhantomData<fn() -> S>);

impl<S> Reals<S> {
    pub fn new() -> Self {
        Reals(PhantomData)
    }
}

impl<S> Default for Reals<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S> Clone for Reals<S> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<S: Scalar> QuasiAlgebra for Reals<S> {
    type Scalar = S;
    type Elem = S;

    fn tag(&self) -> Tag {
        Tag::Real
    }

    fn zero(&self) -> S {
        S::zero()
    }

    fn leq(&self, x: &S, y: &S) -> bool {
        x.approx_eq(y)
    }

    fn add(&self, x: &S, y: &S) -> S {
        x.clone() + y.clone()
    }

    fn scale(&self, a: &S, x: &S) -> S {
        a.clone() * x.clone()
    }

    fn mul(&self, x: &S, y: &S) -> S {
        x.clone() * y.clone()
    }

    fn same(&self, x: &S, y: &S) -> bool {
        x.approx_eq(y)
    }

    fn is_canonical(&self, _x: &S) -> bool {
        true
    }
}

impl<S: Scalar> Normed for Reals<S> {
    fn norm(&self, x: &S) -> Magnitude<S> {
        Magnitude::of(x)
    }

    fn excess(&self, x: &S, y: &S) -> Magnitude<S> {
        Magnitude::of(&(x.clone() - y.clone()))
    }
}

impl<S: Scalar> Unital for Reals<S> {
    fn identity(&self) -> S {
        S::one()
    }

    fn inverse(&self, x: &S) -> Option<S> {
        (!x.is_zero()).then(|| S::one() / x.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn order_is_equality() {
        let r = Reals::<Rational>::new();
        let a = Rational::from_integer(3.into());
        let b = Rational::from_integer(4.into());
        assert!(r.leq(&a, &a));
        assert!(!r.leq(&a, &b));
        assert!(r.is_regular(&a));
        assert_eq!(r.hausdorff(&a, &b).exact(), Some(Rational::from_integer(1.into())));
    }
}
