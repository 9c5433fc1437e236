//! Spectra of regular elements and quasi-spectra of arbitrary ones.
//!
//! The quasi-spectrum of `x` is the union of the spectra of the regular
//! elements below `x`. Every shipped model lets those minorants be read off
//! directly, so nothing here searches.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::Unital;
use crate::elem::Elem;
use crate::models::{
    Disks, FuncTuple, Functions, Interval, IntervalUnion, Intervals, Matrix2, MatrixSet, MatrixSets, Reals, Unions,
};
use crate::scalar::Scalar;

/// Possibly empty finite union of closed intervals and points.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSet<S> {
    set: Option<IntervalUnion<S>>,
}

impl<S: Scalar> SpectrumSet<S> {
    pub fn empty() -> Self {
        SpectrumSet { set: None }
    }

    pub fn point(v: S) -> Self {
        SpectrumSet { set: Some(IntervalUnion::point(v)) }
    }

    pub fn from_union(u: IntervalUnion<S>) -> Self {
        SpectrumSet { set: Some(u) }
    }

    pub fn from_parts(parts: Vec<Interval<S>>) -> Self {
        SpectrumSet { set: IntervalUnion::normalize(parts).ok() }
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_none()
    }

    pub fn parts(&self) -> &[Interval<S>] {
        self.set.as_ref().map_or(&[], |u| u.parts())
    }

    pub fn as_union(&self) -> Option<&IntervalUnion<S>> {
        self.set.as_ref()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.parts().to_vec();
        parts.extend_from_slice(other.parts());
        Self::from_parts(parts)
    }

    pub fn with_zero(&self) -> Self {
        self.union(&Self::point(S::zero()))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        match (&self.set, &other.set) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => b.contains(a),
        }
    }

    pub fn contains_point(&self, p: &S) -> bool {
        self.set.as_ref().is_some_and(|u| u.contains_point(p))
    }

    /// Largest `|t|` over the set; zero when empty.
    pub fn radius(&self) -> S {
        self.set.as_ref().map_or_else(S::zero, IntervalUnion::magnitude)
    }

    pub fn to_json(&self) -> Value {
        let parts: Vec<Value> = self
            .parts()
            .iter()
            .map(|p| json!({"lo": p.lo().to_json_string(), "hi": p.hi().to_json_string()}))
            .collect();
        json!({"empty": self.is_empty(), "parts": parts})
    }
}

impl<S: Scalar> fmt::Display for SpectrumSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.set {
            None => f.write_str("empty"),
            Some(u) => write!(f, "{u}"),
        }
    }
}

/// Which regular elements count as the regular part when forming spectra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegularScope {
    /// Every regular element of the ambient model.
    #[default]
    All,
    /// Only the zero element. Its regular part is the trivial algebra, where
    /// `0` is the identity and is invertible, so every spectrum is empty.
    ZeroOnly,
}

/// Enclosure width for irrational eigenvalues.
pub fn eigen_width<S: Scalar>() -> S {
    S::ratio(1, 1_000_000_000_000)
}

pub fn sp_real<S: Scalar>(a: &S) -> SpectrumSet<S> {
    SpectrumSet::point(a.clone())
}

/// Real eigenvalues of a 2x2 matrix: exact when the discriminant is a
/// perfect square, otherwise enclosures of width at most [`eigen_width`].
pub fn sp_matrix2<S: Scalar>(m: &Matrix2<S>) -> SpectrumSet<S> {
    let t = m.trace();
    let four = S::from_u8(4).expect("4");
    let two = S::from_u8(2).expect("2");
    let disc = t.clone() * t.clone() - four * m.det();
    if disc.is_negative() && !disc.approx_eq(&S::zero()) {
        return SpectrumSet::empty();
    }
    let disc = if disc.is_negative() { S::zero() } else { disc };
    // Width of sqrt(disc) enclosure is halved in each root.
    let (lo, hi) = disc.sqrt_enclosure(&(eigen_width::<S>() * two.clone()));
    let small = Interval::spanning((t.clone() - hi.clone()) / two.clone(), (t.clone() - lo.clone()) / two.clone());
    let large = Interval::spanning((t.clone() + lo) / two.clone(), (t + hi) / two);
    SpectrumSet::from_parts(vec![small, large])
}

/// `a >= t * sqrt(f)` for `f >= 0`, decided exactly.
fn ge_scaled_root<S: Scalar>(a: &S, t: &S, f: &S) -> bool {
    let rhs_sq = t.clone() * t.clone() * f.clone();
    if !t.is_positive() {
        !a.is_negative() || (a.clone() * a.clone()).approx_le(&rhs_sq)
    } else {
        !a.is_negative() && rhs_sq.approx_le(&(a.clone() * a.clone()))
    }
}

/// Every real eigenvalue `l` of `m` satisfies `l^2 <= bound_sq`. Exact even
/// when the eigenvalues and the bound are irrational.
pub fn eigenvalues_within<S: Scalar>(m: &Matrix2<S>, bound_sq: &S) -> bool {
    let t = m.trace();
    let d = m.det();
    let four = S::from_u8(4).expect("4");
    if (t.clone() * t.clone() - four.clone() * d.clone()).is_negative() {
        return true;
    }
    // Both roots of p(l) = l^2 - t l + d lie in [-R, R] iff p(R) >= 0,
    // p(-R) >= 0 and the vertex t/2 lies in [-R, R].
    let a = bound_sq.clone() + d;
    ge_scaled_root(&a, &t, bound_sq)
        && ge_scaled_root(&a, &-t.clone(), bound_sq)
        && (t.clone() * t).approx_le(&(four * bound_sq.clone()))
}

/// Models whose quasi-spectrum is computable.
pub trait Spectral: Unital {
    fn qsp(&self, x: &Self::Elem, scope: RegularScope) -> SpectrumSet<Self::Scalar>;
}

impl<S: Scalar> Spectral for Reals<S> {
    fn qsp(&self, x: &S, scope: RegularScope) -> SpectrumSet<S> {
        match scope {
            RegularScope::All => sp_real(x),
            RegularScope::ZeroOnly => SpectrumSet::empty(),
        }
    }
}

impl<S: Scalar> Spectral for Intervals<S> {
    fn qsp(&self, x: &Interval<S>, scope: RegularScope) -> SpectrumSet<S> {
        match scope {
            RegularScope::All => SpectrumSet::from_union(x.clone().into()),
            RegularScope::ZeroOnly => SpectrumSet::empty(),
        }
    }
}

impl<S: Scalar> Spectral for Unions<S> {
    /// The regular minorants of a set are its points `{a}`, each with
    /// spectrum `{a}`, so the quasi-spectrum is the set itself.
    fn qsp(&self, x: &IntervalUnion<S>, scope: RegularScope) -> SpectrumSet<S> {
        match scope {
            RegularScope::All => SpectrumSet::from_union(x.clone()),
            RegularScope::ZeroOnly => SpectrumSet::empty(),
        }
    }
}

impl<S: Scalar> Spectral for Disks<S> {
    /// Regular minorants are the real points of the disk.
    fn qsp(&self, x: &crate::models::RealDisk<S>, scope: RegularScope) -> SpectrumSet<S> {
        match scope {
            RegularScope::All => SpectrumSet::from_union(x.real_section().into()),
            RegularScope::ZeroOnly => SpectrumSet::empty(),
        }
    }
}

impl<S: Scalar> Spectral for MatrixSets<S> {
    fn qsp(&self, x: &MatrixSet<S>, scope: RegularScope) -> SpectrumSet<S> {
        match scope {
            RegularScope::All => x.members().iter().fold(SpectrumSet::empty(), |acc, m| acc.union(&sp_matrix2(m))),
            RegularScope::ZeroOnly => SpectrumSet::empty(),
        }
    }
}

impl<M: Spectral> Spectral for Functions<M> {
    fn qsp(&self, x: &FuncTuple<M::Elem>, scope: RegularScope) -> SpectrumSet<M::Scalar> {
        x.values.iter().fold(SpectrumSet::empty(), |acc, v| acc.union(&self.base.qsp(v, scope)))
    }
}

/// Quasi-spectrum of a tagged element.
pub fn qsp<S: Scalar>(x: &Elem<S>, scope: RegularScope) -> SpectrumSet<S> {
    match x {
        Elem::Real(a) => Reals::new().qsp(a, scope),
        Elem::Interval(a) => Intervals::new().qsp(a, scope),
        Elem::Union(a) => Unions::new().qsp(a, scope),
        Elem::Disk(a) => Disks::new().qsp(a, scope),
        Elem::MatrixSet(a) => MatrixSets::new().qsp(a, scope),
        Elem::Func(f) => f.values.iter().fold(SpectrumSet::empty(), |acc, v| acc.union(&qsp(v, scope))),
    }
}

/// `|l| <= ||x||` for every spectrum point, decided exactly.
pub fn radius_bound_holds<S: Scalar>(x: &Elem<S>) -> bool {
    match x {
        Elem::MatrixSet(set) => {
            let norm_sq = x.norm().square().clone();
            set.members().iter().all(|m| eigenvalues_within(m, &norm_sq))
        }
        Elem::Func(f) => f.values.iter().all(radius_bound_holds),
        _ => x.norm().ge_scalar(&qsp(x, RegularScope::All).radius()),
    }
}

/// Zero is regular in every model; it is the only element of the
/// [`RegularScope::ZeroOnly`] scope.
pub fn scope_admits<S: Scalar>(scope: RegularScope, t: &Elem<S>) -> bool {
    match scope {
        RegularScope::All => t.is_regular(),
        RegularScope::ZeroOnly => t.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(a: i64, b: i64, c: i64, d: i64) -> Matrix2<Rational> {
        Matrix2::new(q(a), q(b), q(c), q(d))
    }

    #[test]
    fn real_spectrum_is_the_value() {
        assert_eq!(sp_real(&q(3)), SpectrumSet::point(q(3)));
        assert_eq!(
            sp_real(&Rational::new((-1).into(), 2.into())).parts()[0].lo(),
            &Rational::new((-1).into(), 2.into())
        );
    }

    #[test]
    fn matrix_spectra() {
        assert_eq!(
            sp_matrix2(&Matrix2::diag(q(1), q(2))),
            SpectrumSet::from_parts(vec![Interval::point(q(1)), Interval::point(q(2))])
        );
        assert!(sp_matrix2(&mat(0, -1, 1, 0)).is_empty());
        assert_eq!(
            sp_matrix2(&mat(0, 1, 1, 0)),
            SpectrumSet::from_parts(vec![Interval::point(q(-1)), Interval::point(q(1))])
        );
        assert_eq!(sp_matrix2(&mat(1, 1, 0, 1)), SpectrumSet::point(q(1)));
    }

    #[test]
    fn irrational_eigenvalues_are_enclosed() {
        // [[1,1],[1,0]]: golden ratio and its conjugate.
        let sp = sp_matrix2(&mat(1, 1, 1, 0));
        assert_eq!(sp.parts().len(), 2);
        for part in sp.parts() {
            assert!(part.width() <= eigen_width::<Rational>());
            // p(l) = l^2 - l - 1 changes sign across each enclosure.
            let p = |l: &Rational| l * l - l - q(1);
            assert!(p(part.lo()) * p(part.hi()) <= q(0));
        }
    }

    #[test]
    fn union_quasi_spectrum_is_the_set() {
        let x = IntervalUnion::normalize(vec![Interval::new(q(1), q(2)).unwrap(), Interval::point(q(5))]).unwrap();
        let m = Unions::<Rational>::new();
        assert_eq!(m.qsp(&x, RegularScope::All), SpectrumSet::from_union(x.clone()));
        assert!(m.qsp(&x, RegularScope::ZeroOnly).is_empty());
    }

    #[test]
    fn matrix_quasi_spectrum_is_member_union() {
        let x = MatrixSet::new(vec![Matrix2::diag(q(1), q(2)), mat(0, -1, 1, 0)]).unwrap();
        let sp = MatrixSets::new().qsp(&x, RegularScope::All);
        assert_eq!(sp, SpectrumSet::from_parts(vec![Interval::point(q(1)), Interval::point(q(2))]));
    }

    #[test]
    fn exact_eigen_bound() {
        // Eigenvalues 1 and 2; Frobenius norm sqrt(5).
        let m = Matrix2::diag(q(1), q(2));
        assert!(eigenvalues_within(&m, &q(5)));
        assert!(eigenvalues_within(&m, &q(4)));
        assert!(!eigenvalues_within(&m, &Rational::new(399.into(), 100.into())));
        assert!(eigenvalues_within(&mat(0, -1, 1, 0), &q(0)));
    }
}
