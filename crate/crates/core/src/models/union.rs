//! Finite unions of closed intervals: an exactly computable stand-in for the
//! nonempty closed bounded subsets of the real line.

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::elem::Tag;
use crate::error::{QaError, Result};
use crate::magnitude::Magnitude;
use crate::models::Interval;
use crate::scalar::{self, Scalar};

/// Sorted, pairwise separated (gap > 0) closed intervals. Never empty.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalUnion<S> {
    parts: Vec<Interval<S>>,
}

fn by_lo<S: Scalar>(a: &Interval<S>, b: &Interval<S>) -> Ordering {
    a.lo()
        .partial_cmp(b.lo())
        .unwrap_or(Ordering::Equal)
        .then_with(|| a.hi().partial_cmp(b.hi()).unwrap_or(Ordering::Equal))
}

impl<S: Scalar> IntervalUnion<S> {
    /// Sorts and merges overlapping or touching parts.
    pub fn normalize(mut raw: Vec<Interval<S>>) -> Result<Self> {
        if raw.is_empty() {
            return Err(QaError::EmptySet);
        }
        raw.sort_by(by_lo);
        let mut parts: Vec<Interval<S>> = Vec::with_capacity(raw.len());
        for next in raw {
            match parts.last_mut() {
                Some(cur) if next.lo().approx_le(cur.hi()) => {
                    if next.hi() > cur.hi() {
                        *cur = Interval::spanning(cur.lo().clone(), next.hi().clone());
                    }
                }
                _ => parts.push(next),
            }
        }
        Ok(IntervalUnion { parts })
    }

    fn from_nonempty(raw: Vec<Interval<S>>) -> Self {
        Self::normalize(raw).expect("nonempty")
    }

    /// Wraps parts without normalizing. The caller vouches for canonical form.
    #[doc(hidden)]
    pub fn from_parts_unchecked(parts: Vec<Interval<S>>) -> Self {
        IntervalUnion { parts }
    }

    pub fn interval(lo: S, hi: S) -> Result<Self> {
        Ok(IntervalUnion { parts: vec![Interval::new(lo, hi)?] })
    }

    pub fn point(v: S) -> Self {
        IntervalUnion { parts: vec![Interval::point(v)] }
    }

    pub fn parts(&self) -> &[Interval<S>] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Interval<S>> {
        self.parts
    }

    pub fn is_canonical(&self) -> bool {
        !self.parts.is_empty()
            && self.parts.iter().all(|p| p.lo().approx_le(p.hi()))
            && self.parts.windows(2).all(|w| !w[1].lo().approx_le(w[0].hi()))
    }

    /// A single degenerate part.
    pub fn as_point(&self) -> Option<&S> {
        match self.parts.as_slice() {
            [p] if p.is_point() => Some(p.lo()),
            _ => None,
        }
    }

    pub fn is_finite_point_set(&self) -> bool {
        self.parts.iter().all(Interval::is_point)
    }

    pub fn hull(&self) -> Interval<S> {
        let first = &self.parts[0];
        let last = &self.parts[self.parts.len() - 1];
        Interval::spanning(first.lo().clone(), last.hi().clone())
    }

    /// `other ⊆ self`. Each part of `other` is connected, so it must sit
    /// inside a single part of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        let mut i = 0;
        for part in &other.parts {
            while i < self.parts.len() && !part.lo().approx_le(self.parts[i].hi()) {
                i += 1;
            }
            match self.parts.get(i) {
                Some(host) if host.contains(part) => {}
                _ => return false,
            }
        }
        true
    }

    pub fn contains_point(&self, p: &S) -> bool {
        self.parts.iter().any(|part| part.contains_point(p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut raw = Vec::with_capacity(self.parts.len() * other.parts.len());
        for a in &self.parts {
            for b in &other.parts {
                raw.push(a.add(b));
            }
        }
        Self::from_nonempty(raw)
    }

    pub fn scale(&self, a: &S) -> Self {
        if a.is_zero() {
            return Self::point(S::zero());
        }
        let mut parts: Vec<_> = self.parts.iter().map(|p| p.scale(a)).collect();
        if a.is_negative() {
            parts.reverse();
        }
        IntervalUnion { parts }
    }

    /// Pointwise product: union of the pairwise interval products.
    pub fn mul(&self, other: &Self) -> Self {
        let mut raw = Vec::with_capacity(self.parts.len() * other.parts.len());
        for a in &self.parts {
            for b in &other.parts {
                raw.push(a.mul(b));
            }
        }
        Self::from_nonempty(raw)
    }

    pub fn magnitude(&self) -> S {
        let hull = self.hull();
        hull.magnitude()
    }

    pub fn distance_to_point(&self, p: &S) -> S {
        let mut best: Option<S> = None;
        for part in &self.parts {
            let d = part.distance_to_point(p);
            best = Some(match best {
                Some(b) => scalar::min(&b, &d),
                None => d,
            });
        }
        best.expect("nonempty")
    }

    /// `sup_{p in self} dist(p, other)`.
    ///
    /// The distance to `other` is piecewise linear with peaks at the gap
    /// midpoints of `other`, so it suffices to probe each part's endpoints
    /// and every gap midpoint clamped into the part.
    pub fn excess_over(&self, other: &Self) -> S {
        let mids: Vec<S> =
            other.parts.windows(2).map(|w| scalar::half(&(w[0].hi().clone() + w[1].lo().clone()))).collect();
        let mut worst = S::zero();
        for part in &self.parts {
            let mut probe = |p: &S| {
                let d = other.distance_to_point(p);
                if d > worst {
                    worst = d;
                }
            };
            probe(part.lo());
            probe(part.hi());
            for m in &mids {
                if part.contains_point(m) {
                    probe(m);
                }
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.parts.len() == other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a.approx_eq(b))
    }
}

impl<S: Scalar> From<Interval<S>> for IntervalUnion<S> {
    fn from(i: Interval<S>) -> Self {
        IntervalUnion { parts: vec![i] }
    }
}

impl<S: Scalar> fmt::Display for IntervalUnion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug)]
pub struct Unions<S>(PhantomData<fn() -> S>);

impl<S> Unions<S> {
    pub fn new() -> Self {
        Unions(PhantomData)
    }
}

impl<S> Default for Unions<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S> Clone for Unions<S> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<S: Scalar> QuasiAlgebra for Unions<S> {
    type Scalar = S;
    type Elem = IntervalUnion<S>;

    fn tag(&self) -> Tag {
        Tag::Union
    }

    fn zero(&self) -> IntervalUnion<S> {
        IntervalUnion::point(S::zero())
    }

    fn leq(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> bool {
        y.contains(x)
    }

    fn add(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> IntervalUnion<S> {
        x.add(y)
    }

    fn scale(&self, a: &S, x: &IntervalUnion<S>) -> IntervalUnion<S> {
        x.scale(a)
    }

    fn mul(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> IntervalUnion<S> {
        x.mul(y)
    }

    fn same(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> bool {
        x.approx_eq(y)
    }

    fn is_canonical(&self, x: &IntervalUnion<S>) -> bool {
        x.is_canonical()
    }

    fn size(&self, x: &IntervalUnion<S>) -> usize {
        x.parts.len()
    }

    fn unit_ball(&self) -> Option<IntervalUnion<S>> {
        Some(IntervalUnion { parts: vec![Interval::spanning(-S::one(), S::one())] })
    }

    fn is_thin(&self, x: &IntervalUnion<S>) -> bool {
        x.is_finite_point_set()
    }
}

impl<S: Scalar> Normed for Unions<S> {
    fn norm(&self, x: &IntervalUnion<S>) -> Magnitude<S> {
        Magnitude::of(&x.magnitude())
    }

    fn excess(&self, x: &IntervalUnion<S>, y: &IntervalUnion<S>) -> Magnitude<S> {
        Magnitude::of(&x.excess_over(y))
    }
}

impl<S: Scalar> Unital for Unions<S> {
    fn identity(&self) -> IntervalUnion<S> {
        IntervalUnion::point(S::one())
    }

    fn inverse(&self, x: &IntervalUnion<S>) -> Option<IntervalUnion<S>> {
        let a = x.as_point()?;
        (!a.is_zero()).then(|| IntervalUnion::point(S::one() / a.clone()))
    }
}
