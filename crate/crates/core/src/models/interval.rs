use std::fmt;
use std::marker::PhantomData;

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::elem::Tag;
use crate::error::{QaError, Result};
use crate::magnitude::Magnitude;
use crate::scalar::{self, Scalar};

/// Closed bounded interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval<S> {
    lo: S,
    hi: S,
}

impl<S: Scalar> Interval<S> {
    pub fn new(lo: S, hi: S) -> Result<Self> {
        if lo > hi && !lo.approx_eq(&hi) {
            return Err(QaError::InvertedInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(v: S) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    /// Interval spanning `a` and `b` in either order.
    pub fn spanning(a: S, b: S) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> &S {
        &self.lo
    }

    pub fn hi(&self) -> &S {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo.approx_eq(&self.hi)
    }

    pub fn width(&self) -> S {
        self.hi.clone() - self.lo.clone()
    }

    pub fn center(&self) -> S {
        scalar::half(&(self.lo.clone() + self.hi.clone()))
    }

    pub fn radius(&self) -> S {
        scalar::half(&self.width())
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &Self) -> bool {
        self.lo.approx_le(&other.lo) && other.hi.approx_le(&self.hi)
    }

    pub fn contains_point(&self, p: &S) -> bool {
        self.lo.approx_le(p) && p.approx_le(&self.hi)
    }

    pub fn add(&self, other: &Self) -> Self {
        Interval { lo: self.lo.clone() + other.lo.clone(), hi: self.hi.clone() + other.hi.clone() }
    }

    pub fn scale(&self, a: &S) -> Self {
        Interval::spanning(a.clone() * self.lo.clone(), a.clone() * self.hi.clone())
    }

    /// Exact pointwise product: hull of the four endpoint products.
    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            self.lo.clone() * other.lo.clone(),
            self.lo.clone() * other.hi.clone(),
            self.hi.clone() * other.lo.clone(),
            self.hi.clone() * other.hi.clone(),
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            lo = scalar::min(&lo, p);
            hi = scalar::max(&hi, p);
        }
        Interval { lo, hi }
    }

    pub fn hull(&self, other: &Self) -> Self {
        Interval { lo: scalar::min(&self.lo, &other.lo), hi: scalar::max(&self.hi, &other.hi) }
    }

    /// `max |t|` over the interval.
    pub fn magnitude(&self) -> S {
        scalar::max(&self.lo.abs(), &self.hi.abs())
    }

    pub fn distance_to_point(&self, p: &S) -> S {
        if *p < self.lo {
            self.lo.clone() - p.clone()
        } else if *p > self.hi {
            p.clone() - self.hi.clone()
        } else {
            S::zero()
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.lo.approx_eq(&other.lo) && self.hi.approx_eq(&other.hi)
    }
}

impl<S: Scalar> fmt::Display for Interval<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Bounded closed convex subsets of the real line.
#[derive(Debug)]
pub struct Intervals<S>(PhantomData<fn() -> S>);

impl<S> Intervals<S> {
    pub fn new() -> Self {
        Intervals(PhantomData)
    }
}

impl<S> Default for Intervals<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S> Clone for Intervals<S> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<S: Scalar> QuasiAlgebra for Intervals<S> {
    type Scalar = S;
    type Elem = Interval<S>;

    fn tag(&self) -> Tag {
        Tag::Interval
    }

    fn zero(&self) -> Interval<S> {
        Interval::point(S::zero())
    }

    fn leq(&self, x: &Interval<S>, y: &Interval<S>) -> bool {
        y.contains(x)
    }

    fn add(&self, x: &Interval<S>, y: &Interval<S>) -> Interval<S> {
        x.add(y)
    }

    fn scale(&self, a: &S, x: &Interval<S>) -> Interval<S> {
        x.scale(a)
    }

    fn mul(&self, x: &Interval<S>, y: &Interval<S>) -> Interval<S> {
        x.mul(y)
    }

    fn same(&self, x: &Interval<S>, y: &Interval<S>) -> bool {
        x.approx_eq(y)
    }

    fn is_canonical(&self, x: &Interval<S>) -> bool {
        x.lo.approx_le(&x.hi)
    }

    fn unit_ball(&self) -> Option<Interval<S>> {
        Some(Interval { lo: -S::one(), hi: S::one() })
    }
}

impl<S: Scalar> Normed for Intervals<S> {
    fn norm(&self, x: &Interval<S>) -> Magnitude<S> {
        Magnitude::of(&x.magnitude())
    }

    fn excess(&self, x: &Interval<S>, y: &Interval<S>) -> Magnitude<S> {
        let below = y.lo.clone() - x.lo.clone();
        let above = x.hi.clone() - y.hi.clone();
        Magnitude::of(&scalar::max(&S::zero(), &scalar::max(&below, &above)))
    }
}

impl<S: Scalar> Unital for Intervals<S> {
    fn identity(&self) -> Interval<S> {
        Interval::point(S::one())
    }

    fn inverse(&self, x: &Interval<S>) -> Option<Interval<S>> {
        (x.is_point() && !x.lo.is_zero()).then(|| Interval::point(S::one() / x.lo.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn iv(lo: i64, hi: i64) -> Interval<Rational> {
        Interval::new(Rational::from_integer(lo.into()), Rational::from_integer(hi.into())).unwrap()
    }

    #[test]
    fn product_of_symmetric_intervals() {
        assert_eq!(iv(-2, 2).mul(&iv(-4, 4)), iv(-8, 8));
        assert_eq!(iv(1, 2).mul(&iv(-1, 3)), iv(-2, 6));
        assert_eq!(iv(0, 0).mul(&iv(0, 0)), iv(0, 0));
    }

    #[test]
    fn order_is_inclusion() {
        let m = Intervals::<Rational>::new();
        assert!(m.leq(&iv(3, 3), &iv(-4, 4)));
        assert!(!m.leq(&iv(3, 3), &iv(-2, 2)));
        assert!(m.leq(&iv(1, 2), &iv(1, 2)));
    }

    #[test]
    fn inverted_interval_rejected() {
        assert!(Interval::new(Rational::from_integer(2.into()), Rational::from_integer(1.into())).is_err());
    }

    #[test]
    fn excess_and_distance() {
        let m = Intervals::<Rational>::new();
        assert_eq!(m.excess(&iv(0, 2), &iv(0, 1)).exact(), Some(Rational::from_integer(1.into())));
        assert_eq!(m.hausdorff(&iv(0, 1), &iv(2, 5)).exact(), Some(Rational::from_integer(4.into())));
        assert_eq!(m.norm(&iv(-2, 5)).exact(), Some(Rational::from_integer(5.into())));
    }

    #[test]
    fn float_mode_uses_tolerance() {
        let m = Intervals::<f64>::new();
        let x = Interval::new(0.1 + 0.2, 1.0).unwrap();
        let y = Interval::new(0.3, 1.0).unwrap();
        assert!(m.same(&x, &y));
        assert!(m.leq(&y, &x));
    }
}
