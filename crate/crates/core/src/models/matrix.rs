//! Finite sets of real 2x2 matrices under elementwise (Minkowski) operations.

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::elem::Tag;
use crate::error::{QaError, Result};
use crate::magnitude::Magnitude;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<S> {
    pub e: [[S; 2]; 2],
}

impl<S: Scalar> Matrix2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Matrix2 { e: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn diag(a: S, d: S) -> Self {
        Self::new(a, S::zero(), S::zero(), d)
    }

    fn map2(&self, o: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let e = &self.e;
        let g = &o.e;
        Matrix2 { e: [[f(&e[0][0], &g[0][0]), f(&e[0][1], &g[0][1])], [f(&e[1][0], &g[1][0]), f(&e[1][1], &g[1][1])]] }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.map2(o, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.map2(o, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map2(self, |a, _| k.clone() * a.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = &self.e;
        let b = &o.e;
        let cell = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
        Matrix2 { e: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]] }
    }

    /// Squared Frobenius norm.
    pub fn frob_sq(&self) -> S {
        self.e.iter().flatten().fold(S::zero(), |acc, v| acc + v.clone() * v.clone())
    }

    pub fn trace(&self) -> S {
        self.e[0][0].clone() + self.e[1][1].clone()
    }

    pub fn det(&self) -> S {
        self.e[0][0].clone() * self.e[1][1].clone() - self.e[0][1].clone() * self.e[1][0].clone()
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.approx_eq(&S::zero()) {
            return None;
        }
        let [[a, b], [c, d]] = &self.e;
        Some(Self::new(d.clone() / det.clone(), -b.clone() / det.clone(), -c.clone() / det.clone(), a.clone() / det))
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.e.iter().flatten().zip(o.e.iter().flatten()).all(|(a, b)| a.approx_eq(b))
    }

    fn cmp_entries(&self, o: &Self) -> Ordering {
        for (a, b) in self.e.iter().flatten().zip(o.e.iter().flatten()) {
            match a.partial_cmp(b).unwrap_or(Ordering::Equal) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

impl<S: Scalar> fmt::Display for Matrix2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Nonempty finite set of matrices, sorted lexicographically, no duplicates.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSet<S> {
    members: Vec<Matrix2<S>>,
}

impl<S: Scalar> MatrixSet<S> {
    pub fn new(mut members: Vec<Matrix2<S>>) -> Result<Self> {
        if members.is_empty() {
            return Err(QaError::EmptySet);
        }
        members.sort_by(|a, b| a.cmp_entries(b));
        members.dedup_by(|a, b| a.approx_eq(b));
        Ok(MatrixSet { members })
    }

    fn from_nonempty(members: Vec<Matrix2<S>>) -> Self {
        Self::new(members).expect("nonempty")
    }

    pub fn singleton(m: Matrix2<S>) -> Self {
        MatrixSet { members: vec![m] }
    }

    pub fn members(&self) -> &[Matrix2<S>] {
        &self.members
    }

    pub fn contains_member(&self, m: &Matrix2<S>) -> bool {
        self.members.iter().any(|x| x.approx_eq(m))
    }

    fn pairwise(&self, o: &Self, f: impl Fn(&Matrix2<S>, &Matrix2<S>) -> Matrix2<S>) -> Self {
        let mut out = Vec::with_capacity(self.members.len() * o.members.len());
        for a in &self.members {
            for b in &o.members {
                out.push(f(a, b));
            }
        }
        Self::from_nonempty(out)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.pairwise(o, Matrix2::add)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.pairwise(o, Matrix2::mul)
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_nonempty(self.members.iter().map(|m| m.scale(k)).collect())
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.members.len() == o.members.len() && self.members.iter().zip(&o.members).all(|(a, b)| a.approx_eq(b))
    }
}

impl<S: Scalar> fmt::Display for MatrixSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m(")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug)]
pub struct MatrixSets<S>(PhantomData<fn() -> S>);

impl<S> MatrixSets<S> {
    pub fn new() -> Self {
        MatrixSets(PhantomData)
    }
}

impl<S> Default for MatrixSets<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S> Clone for MatrixSets<S> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<S: Scalar> QuasiAlgebra for MatrixSets<S> {
    type Scalar = S;
    type Elem = MatrixSet<S>;

    fn tag(&self) -> Tag {
        Tag::MatrixSet
    }

    fn zero(&self) -> MatrixSet<S> {
        MatrixSet::singleton(Matrix2::zero())
    }

    fn leq(&self, x: &MatrixSet<S>, y: &MatrixSet<S>) -> bool {
        x.members.iter().all(|m| y.contains_member(m))
    }

    fn add(&self, x: &MatrixSet<S>, y: &MatrixSet<S>) -> MatrixSet<S> {
        x.add(y)
    }

    fn scale(&self, a: &S, x: &MatrixSet<S>) -> MatrixSet<S> {
        x.scale(a)
    }

    fn mul(&self, x: &MatrixSet<S>, y: &MatrixSet<S>) -> MatrixSet<S> {
        x.mul(y)
    }

    fn same(&self, x: &MatrixSet<S>, y: &MatrixSet<S>) -> bool {
        x.approx_eq(y)
    }

    fn is_canonical(&self, x: &MatrixSet<S>) -> bool {
        !x.members.is_empty() && x.members.windows(2).all(|w| w[0].cmp_entries(&w[1]) == Ordering::Less)
    }

    fn size(&self, x: &MatrixSet<S>) -> usize {
        x.members.len()
    }

    fn unit_ball(&self) -> Option<MatrixSet<S>> {
        let i = Matrix2::identity();
        Some(MatrixSet::from_nonempty(vec![i.scale(&-S::one()), Matrix2::zero(), i]))
    }

    fn is_thin(&self, _x: &MatrixSet<S>) -> bool {
        true
    }
}

impl<S: Scalar> Normed for MatrixSets<S> {
    fn norm(&self, x: &MatrixSet<S>) -> Magnitude<S> {
        x.members.iter().map(|m| Magnitude::from_square(m.frob_sq())).fold(Magnitude::zero(), Magnitude::max)
    }

    /// Discrete directed Hausdorff distance under the Frobenius metric.
    fn excess(&self, x: &MatrixSet<S>, y: &MatrixSet<S>) -> Magnitude<S> {
        let mut worst = S::zero();
        for a in &x.members {
            let nearest = y
                .members
                .iter()
                .map(|b| a.sub(b).frob_sq())
                .reduce(|p, q| if q < p { q } else { p })
                .expect("nonempty");
            if nearest > worst {
                worst = nearest;
            }
        }
        Magnitude::from_square(worst)
    }
}

impl<S: Scalar> Unital for MatrixSets<S> {
    fn identity(&self) -> MatrixSet<S> {
        MatrixSet::singleton(Matrix2::identity())
    }

    fn inverse(&self, x: &MatrixSet<S>) -> Option<MatrixSet<S>> {
        match x.members.as_slice() {
            [m] => m.inverse().map(MatrixSet::singleton),
            _ => None,
        }
    }
}
