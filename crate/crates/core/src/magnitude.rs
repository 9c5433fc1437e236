//! Non-negative reals of the form `sqrt(q)`.
//!
//! Frobenius norms of rational matrices are square roots of rationals, so
//! norms and distances are carried by their square. Every comparison used by
//! the norm and metric laws (sums, products, scalar bounds) stays decidable
//! without rounding.

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Magnitude<S> {
    sq: S,
}

impl<S: Scalar> Magnitude<S> {
    pub fn zero() -> Self {
        Magnitude { sq: S::zero() }
    }

    /// `|v|`
    pub fn of(v: &S) -> Self {
        Magnitude { sq: v.clone() * v.clone() }
    }

    /// `sqrt(sq)`; `sq` must be non-negative.
    pub fn from_square(sq: S) -> Self {
        assert!(!sq.is_negative(), "negative squared magnitude");
        Magnitude { sq }
    }

    pub fn square(&self) -> &S {
        &self.sq
    }

    pub fn is_zero(&self) -> bool {
        self.sq.approx_eq(&S::zero())
    }

    /// Exact value when the square is a perfect square.
    pub fn exact(&self) -> Option<S> {
        self.sq.exact_sqrt()
    }

    pub fn to_f64(&self) -> f64 {
        self.sq.to_f64().unwrap_or(f64::NAN).max(0.0).sqrt()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Magnitude { sq: self.sq.clone() * other.sq.clone() }
    }

    /// `|a| * self`
    pub fn scale(&self, a: &S) -> Self {
        Magnitude { sq: self.sq.clone() * a.clone() * a.clone() }
    }

    pub fn max(self, other: Self) -> Self {
        if other.sq > self.sq {
            other
        } else {
            self
        }
    }

    pub fn le(&self, other: &Self) -> bool {
        self.sq.approx_le(&other.sq)
    }

    pub fn lt(&self, other: &Self) -> bool {
        !other.le(self)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.sq.approx_eq(&other.sq)
    }

    /// `self <= a + b`
    pub fn le_sum(&self, a: &Self, b: &Self) -> bool {
        // sqrt(s) <= sqrt(a) + sqrt(b)  <=>  d <= 0 or d^2 <= 4ab, d = s - a - b
        let d = self.sq.clone() - a.sq.clone() - b.sq.clone();
        if d.approx_le(&S::zero()) {
            return true;
        }
        let four = S::from_u8(4).expect("4");
        (d.clone() * d).approx_le(&(four * a.sq.clone() * b.sq.clone()))
    }

    /// `self <= v` for a plain scalar `v`.
    pub fn le_scalar(&self, v: &S) -> bool {
        if v.is_negative() {
            return self.is_zero() && v.approx_eq(&S::zero());
        }
        self.sq.approx_le(&(v.clone() * v.clone()))
    }

    /// `v <= self` for a plain scalar `v`.
    pub fn ge_scalar(&self, v: &S) -> bool {
        if !v.is_positive() {
            return true;
        }
        (v.clone() * v.clone()).approx_le(&self.sq)
    }

    /// `|self - v| <= tol`
    pub fn within(&self, v: &S, tol: &S) -> bool {
        self.le_scalar(&(v.clone() + tol.clone())) && self.ge_scalar(&(v.clone() - tol.clone()))
    }
}

impl<S: Scalar> PartialOrd for Magnitude<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.sq.partial_cmp(&other.sq)
    }
}

impl<S: Scalar> fmt::Display for Magnitude<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "sqrt({}) ~ {:.12}", self.sq, self.to_f64()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::ratio(n, d)
    }

    #[test]
    fn sum_comparison_is_exact() {
        let two = Magnitude::from_square(q(2, 1));
        let one = Magnitude::of(&q(1, 1));
        // sqrt(2) <= 1 + 1, but sqrt(2) > 1 + 0
        assert!(two.le_sum(&one, &one));
        assert!(!two.le_sum(&one, &Magnitude::zero()));
        // sqrt(8) = sqrt(2) + sqrt(2) exactly
        let eight = Magnitude::from_square(q(8, 1));
        assert!(eight.le_sum(&two, &two));
        assert!(!Magnitude::from_square(q(801, 100)).le_sum(&two, &two));
    }

    #[test]
    fn scalar_bounds() {
        let m = Magnitude::from_square(q(2, 1));
        assert!(m.le_scalar(&q(3, 2)));
        assert!(!m.le_scalar(&q(7, 5)));
        assert!(m.ge_scalar(&q(7, 5)));
        assert!(m.within(&q(3, 2), &q(1, 10)));
        assert!(!m.within(&q(2, 1), &q(1, 10)));
        assert_eq!(Magnitude::of(&q(-3, 2)).exact(), Some(q(3, 2)));
    }
}
