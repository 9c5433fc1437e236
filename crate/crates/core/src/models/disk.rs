//! Real-centered disks in the complex plane with the centered-form product.

use std::fmt;
use std::marker::PhantomData;

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::elem::Tag;
use crate::error::{QaError, Result};
use crate::magnitude::Magnitude;
use crate::models::Interval;
use crate::scalar::{self, Scalar};

/// `{z : |z - center| <= radius}` with a real center.
#[derive(Clone, Debug, PartialEq)]
pub struct RealDisk<S> {
    center: S,
    radius: S,
}

impl<S: Scalar> RealDisk<S> {
    pub fn new(center: S, radius: S) -> Result<Self> {
        if radius.is_negative() && !radius.approx_eq(&S::zero()) {
            return Err(QaError::NegativeRadius(radius.to_string()));
        }
        Ok(RealDisk { center, radius })
    }

    pub fn point(center: S) -> Self {
        RealDisk { center, radius: S::zero() }
    }

    /// Disk spanning the interval as a diameter.
    pub fn from_interval(i: &Interval<S>) -> Self {
        RealDisk { center: i.center(), radius: i.radius() }
    }

    #[doc(hidden)]
    pub fn from_parts_unchecked(center: S, radius: S) -> Self {
        RealDisk { center, radius }
    }

    pub fn center(&self) -> &S {
        &self.center
    }

    pub fn radius(&self) -> &S {
        &self.radius
    }

    /// Real points of the disk: `[c - r, c + r]`.
    pub fn real_section(&self) -> Interval<S> {
        Interval::spanning(self.center.clone() - self.radius.clone(), self.center.clone() + self.radius.clone())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.center.approx_eq(&other.center) && self.radius.approx_eq(&other.radius)
    }
}

impl<S: Scalar> fmt::Display for RealDisk<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d({},{})", self.center, self.radius)
    }
}

#[derive(Debug)]
pub struct Disks<S>(PhantomData<fn() -> S>);

impl<S> Disks<S> {
    pub fn new() -> Self {
        Disks(PhantomData)
    }
}

impl<S> Default for Disks<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S> Clone for Disks<S> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<S: Scalar> QuasiAlgebra for Disks<S> {
    type Scalar = S;
    type Elem = RealDisk<S>;

    fn tag(&self) -> Tag {
        Tag::Disk
    }

    fn zero(&self) -> RealDisk<S> {
        RealDisk::point(S::zero())
    }

    fn leq(&self, x: &RealDisk<S>, y: &RealDisk<S>) -> bool {
        let gap = (x.center.clone() - y.center.clone()).abs();
        gap.approx_le(&(y.radius.clone() - x.radius.clone()))
    }

    fn add(&self, x: &RealDisk<S>, y: &RealDisk<S>) -> RealDisk<S> {
        RealDisk { center: x.center.clone() + y.center.clone(), radius: x.radius.clone() + y.radius.clone() }
    }

    fn scale(&self, a: &S, x: &RealDisk<S>) -> RealDisk<S> {
        RealDisk { center: a.clone() * x.center.clone(), radius: a.abs() * x.radius.clone() }
    }

    fn mul(&self, x: &RealDisk<S>, y: &RealDisk<S>) -> RealDisk<S> {
        let radius =
            x.radius.clone() * y.radius.clone() + y.center.abs() * x.radius.clone() + x.center.abs() * y.radius.clone();
        RealDisk { center: x.center.clone() * y.center.clone(), radius }
    }

    fn same(&self, x: &RealDisk<S>, y: &RealDisk<S>) -> bool {
        x.approx_eq(y)
    }

    fn is_canonical(&self, x: &RealDisk<S>) -> bool {
        !x.radius.is_negative() || x.radius.approx_eq(&S::zero())
    }

    fn unit_ball(&self) -> Option<RealDisk<S>> {
        Some(RealDisk { center: S::zero(), radius: S::one() })
    }
}

impl<S: Scalar> Normed for Disks<S> {
    fn norm(&self, x: &RealDisk<S>) -> Magnitude<S> {
        Magnitude::of(&(x.center.abs() + x.radius.clone()))
    }

    fn excess(&self, x: &RealDisk<S>, y: &RealDisk<S>) -> Magnitude<S> {
        let over = (x.center.clone() - y.center.clone()).abs() + x.radius.clone() - y.radius.clone();
        Magnitude::of(&scalar::max(&S::zero(), &over))
    }
}

impl<S: Scalar> Unital for Disks<S> {
    fn identity(&self) -> RealDisk<S> {
        RealDisk::point(S::one())
    }

    fn inverse(&self, x: &RealDisk<S>) -> Option<RealDisk<S>> {
        (x.radius.approx_eq(&S::zero()) && !x.center.is_zero()).then(|| RealDisk::point(S::one() / x.center.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn d(c: i64, r: i64) -> RealDisk<Rational> {
        RealDisk::new(Rational::from_integer(c.into()), Rational::from_integer(r.into())).unwrap()
    }

    #[test]
    fn centered_form_product() {
        let m = Disks::<Rational>::new();
        assert_eq!(m.mul(&d(0, 1), &d(0, 1)), d(0, 1));
        assert_eq!(m.mul(&d(2, 1), &d(3, 1)), d(6, 6));
        assert_eq!(m.mul(&d(-2, 0), &d(3, 0)), d(-6, 0));
        assert_eq!(m.mul(&d(-2, 1), &d(3, 0)), d(-6, 3));
    }

    #[test]
    fn containment_and_norm() {
        let m = Disks::<Rational>::new();
        assert!(m.leq(&d(1, 1), &d(0, 3)));
        assert!(!m.leq(&d(2, 2), &d(0, 3)));
        assert_eq!(m.norm(&d(1, 2)).exact(), Some(Rational::from_integer(3.into())));
        assert_eq!(m.excess(&d(5, 1), &d(0, 3)).exact(), Some(Rational::from_integer(3.into())));
    }

    #[test]
    fn regular_disks_have_zero_radius() {
        let m = Disks::<Rational>::new();
        assert!(m.is_regular(&d(4, 0)));
        assert!(!m.is_regular(&d(4, 1)));
        assert!(m.is_symmetric(&d(0, 2)));
        assert!(RealDisk::new(Rational::from_integer(0.into()), Rational::from_integer((-1).into())).is_err());
    }
}
