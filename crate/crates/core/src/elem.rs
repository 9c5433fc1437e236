//! Tagged elements of any shipped model, with checked dynamic operations and
//! the JSON wire form.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{Normed, QuasiAlgebra, Unital};
use crate::error::{QaError, Result};
use crate::magnitude::Magnitude;
use crate::models::{
    Disks, FuncTuple, Interval, IntervalUnion, Intervals, Matrix2, MatrixSet, MatrixSets, RealDisk, Reals, Unions,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Real,
    Interval,
    Union,
    Disk,
    MatrixSet,
    Func,
}

impl Tag {
    pub const ALL: [Tag; 6] = [Tag::Real, Tag::Interval, Tag::Union, Tag::Disk, Tag::MatrixSet, Tag::Func];

    pub fn name(self) -> &'static str {
        match self {
            Tag::Real => "real",
            Tag::Interval => "interval",
            Tag::Union => "union",
            Tag::Disk => "disk",
            Tag::MatrixSet => "matrixset",
            Tag::Func => "func",
        }
    }

    pub fn parse(name: &str) -> Option<Tag> {
        Tag::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Elem<S> {
    Real(S),
    Interval(Interval<S>),
    Union(IntervalUnion<S>),
    Disk(RealDisk<S>),
    MatrixSet(MatrixSet<S>),
    Func(FuncTuple<Elem<S>>),
}

/// Two elements known to share a model.
enum Pair<'a, S> {
    Real(&'a S, &'a S),
    Interval(&'a Interval<S>, &'a Interval<S>),
    Union(&'a IntervalUnion<S>, &'a IntervalUnion<S>),
    Disk(&'a RealDisk<S>, &'a RealDisk<S>),
    MatrixSet(&'a MatrixSet<S>, &'a MatrixSet<S>),
    Func(&'a [Elem<S>], &'a [Elem<S>]),
}

fn zip_func<S: Scalar>(
    a: &[Elem<S>],
    b: &[Elem<S>],
    f: impl Fn(&Elem<S>, &Elem<S>) -> Result<Elem<S>>,
) -> Result<Elem<S>> {
    let values = a.iter().zip(b).map(|(x, y)| f(x, y)).collect::<Result<Vec<_>>>()?;
    Ok(Elem::Func(FuncTuple::new(values)))
}

fn max_func<S: Scalar>(
    a: &[Elem<S>],
    b: &[Elem<S>],
    f: impl Fn(&Elem<S>, &Elem<S>) -> Result<Magnitude<S>>,
) -> Result<Magnitude<S>> {
    a.iter().zip(b).try_fold(Magnitude::zero(), |acc, (x, y)| Ok(acc.max(f(x, y)?)))
}

impl<S: Scalar> Elem<S> {
    pub fn tag(&self) -> Tag {
        match self {
            Elem::Real(_) => Tag::Real,
            Elem::Interval(_) => Tag::Interval,
            Elem::Union(_) => Tag::Union,
            Elem::Disk(_) => Tag::Disk,
            Elem::MatrixSet(_) => Tag::MatrixSet,
            Elem::Func(_) => Tag::Func,
        }
    }

    pub fn func(values: Vec<Elem<S>>) -> Result<Self> {
        let first = values.first().ok_or(QaError::EmptySet)?;
        let shape = first.shape();
        if let Some(bad) = values.iter().find(|v| v.shape() != shape) {
            return Err(QaError::TagMismatch { left: first.tag(), right: bad.tag() });
        }
        Ok(Elem::Func(FuncTuple::new(values)))
    }

    /// Tag path through nested function tuples, with their lengths.
    fn shape(&self) -> Vec<(Tag, usize)> {
        match self {
            Elem::Func(f) => {
                let mut s = vec![(Tag::Func, f.len())];
                s.extend(f.values[0].shape());
                s
            }
            other => vec![(other.tag(), 0)],
        }
    }

    fn pair<'a>(&'a self, o: &'a Self) -> Result<Pair<'a, S>> {
        Ok(match (self, o) {
            (Elem::Real(a), Elem::Real(b)) => Pair::Real(a, b),
            (Elem::Interval(a), Elem::Interval(b)) => Pair::Interval(a, b),
            (Elem::Union(a), Elem::Union(b)) => Pair::Union(a, b),
            (Elem::Disk(a), Elem::Disk(b)) => Pair::Disk(a, b),
            (Elem::MatrixSet(a), Elem::MatrixSet(b)) => Pair::MatrixSet(a, b),
            (Elem::Func(a), Elem::Func(b)) => {
                if a.len() != b.len() {
                    return Err(QaError::IndexMismatch { left: a.len(), right: b.len() });
                }
                Pair::Func(&a.values, &b.values)
            }
            _ => return Err(QaError::TagMismatch { left: self.tag(), right: o.tag() }),
        })
    }

    /// Errors unless both elements belong to the same model.
    pub fn same_model(&self, o: &Self) -> Result<()> {
        self.pair(o).map(|_| ())
    }

    /// The zero of this element's model.
    pub fn zero_like(&self) -> Self {
        match self {
            Elem::Real(_) => Elem::Real(S::zero()),
            Elem::Interval(_) => Elem::Interval(Intervals::new().zero()),
            Elem::Union(_) => Elem::Union(Unions::new().zero()),
            Elem::Disk(_) => Elem::Disk(Disks::new().zero()),
            Elem::MatrixSet(_) => Elem::MatrixSet(MatrixSets::new().zero()),
            Elem::Func(f) => Elem::Func(FuncTuple::new(f.values.iter().map(Elem::zero_like).collect())),
        }
    }

    pub fn identity_like(&self) -> Self {
        match self {
            Elem::Real(_) => Elem::Real(S::one()),
            Elem::Interval(_) => Elem::Interval(Intervals::new().identity()),
            Elem::Union(_) => Elem::Union(Unions::new().identity()),
            Elem::Disk(_) => Elem::Disk(Disks::new().identity()),
            Elem::MatrixSet(_) => Elem::MatrixSet(MatrixSets::new().identity()),
            Elem::Func(f) => Elem::Func(FuncTuple::new(f.values.iter().map(Elem::identity_like).collect())),
        }
    }

    pub fn unit_ball_like(&self) -> Result<Self> {
        Ok(match self {
            Elem::Real(_) => return Err(QaError::Unsupported(Tag::Real)),
            Elem::Interval(_) => Elem::Interval(Intervals::new().unit_ball().expect("ball")),
            Elem::Union(_) => Elem::Union(Unions::new().unit_ball().expect("ball")),
            Elem::Disk(_) => Elem::Disk(Disks::new().unit_ball().expect("ball")),
            Elem::MatrixSet(_) => Elem::MatrixSet(MatrixSets::new().unit_ball().expect("ball")),
            Elem::Func(f) => {
                Elem::Func(FuncTuple::new(f.values.iter().map(Elem::unit_ball_like).collect::<Result<_>>()?))
            }
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(match self.pair(o)? {
            Pair::Real(a, b) => Elem::Real(Reals::new().add(a, b)),
            Pair::Interval(a, b) => Elem::Interval(a.add(b)),
            Pair::Union(a, b) => Elem::Union(a.add(b)),
            Pair::Disk(a, b) => Elem::Disk(Disks::new().add(a, b)),
            Pair::MatrixSet(a, b) => Elem::MatrixSet(a.add(b)),
            Pair::Func(a, b) => return zip_func(a, b, Elem::add),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Ok(match self.pair(o)? {
            Pair::Real(a, b) => Elem::Real(Reals::new().mul(a, b)),
            Pair::Interval(a, b) => Elem::Interval(a.mul(b)),
            Pair::Union(a, b) => Elem::Union(a.mul(b)),
            Pair::Disk(a, b) => Elem::Disk(Disks::new().mul(a, b)),
            Pair::MatrixSet(a, b) => Elem::MatrixSet(a.mul(b)),
            Pair::Func(a, b) => return zip_func(a, b, Elem::mul),
        })
    }

    pub fn scale(&self, k: &S) -> Self {
        match self {
            Elem::Real(a) => Elem::Real(k.clone() * a.clone()),
            Elem::Interval(a) => Elem::Interval(a.scale(k)),
            Elem::Union(a) => Elem::Union(a.scale(k)),
            Elem::Disk(a) => Elem::Disk(Disks::new().scale(k, a)),
            Elem::MatrixSet(a) => Elem::MatrixSet(a.scale(k)),
            Elem::Func(f) => Elem::Func(FuncTuple::new(f.values.iter().map(|v| v.scale(k)).collect())),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn leq(&self, o: &Self) -> Result<bool> {
        Ok(match self.pair(o)? {
            Pair::Real(a, b) => Reals::new().leq(a, b),
            Pair::Interval(a, b) => Intervals::new().leq(a, b),
            Pair::Union(a, b) => Unions::new().leq(a, b),
            Pair::Disk(a, b) => Disks::new().leq(a, b),
            Pair::MatrixSet(a, b) => MatrixSets::new().leq(a, b),
            Pair::Func(a, b) => {
                for (x, y) in a.iter().zip(b) {
                    if !x.leq(y)? {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }

    /// Equality of canonical forms (up to the scalar tolerance).
    pub fn same(&self, o: &Self) -> bool {
        match self.pair(o) {
            Ok(Pair::Real(a, b)) => a.approx_eq(b),
            Ok(Pair::Interval(a, b)) => a.approx_eq(b),
            Ok(Pair::Union(a, b)) => a.approx_eq(b),
            Ok(Pair::Disk(a, b)) => a.approx_eq(b),
            Ok(Pair::MatrixSet(a, b)) => a.approx_eq(b),
            Ok(Pair::Func(a, b)) => a.iter().zip(b).all(|(x, y)| x.same(y)),
            Err(_) => false,
        }
    }

    pub fn norm(&self) -> Magnitude<S> {
        match self {
            Elem::Real(a) => Reals::new().norm(a),
            Elem::Interval(a) => Intervals::new().norm(a),
            Elem::Union(a) => Unions::new().norm(a),
            Elem::Disk(a) => Disks::new().norm(a),
            Elem::MatrixSet(a) => MatrixSets::new().norm(a),
            Elem::Func(f) => f.values.iter().map(Elem::norm).fold(Magnitude::zero(), Magnitude::max),
        }
    }

    pub fn excess(&self, o: &Self) -> Result<Magnitude<S>> {
        Ok(match self.pair(o)? {
            Pair::Real(a, b) => Reals::new().excess(a, b),
            Pair::Interval(a, b) => Intervals::new().excess(a, b),
            Pair::Union(a, b) => Unions::new().excess(a, b),
            Pair::Disk(a, b) => Disks::new().excess(a, b),
            Pair::MatrixSet(a, b) => MatrixSets::new().excess(a, b),
            Pair::Func(a, b) => return max_func(a, b, Elem::excess),
        })
    }

    pub fn hausdorff(&self, o: &Self) -> Result<Magnitude<S>> {
        Ok(self.excess(o)?.max(o.excess(self)?))
    }

    pub fn is_regular(&self) -> bool {
        let diff = self.sub(self).expect("same model");
        diff.same(&self.zero_like())
    }

    pub fn is_symmetric(&self) -> bool {
        self.neg().same(self)
    }

    pub fn is_zero(&self) -> bool {
        self.same(&self.zero_like())
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = match self {
            Elem::Real(a) => Reals::new().inverse(a).map(Elem::Real),
            Elem::Interval(a) => Intervals::new().inverse(a).map(Elem::Interval),
            Elem::Union(a) => Unions::new().inverse(a).map(Elem::Union),
            Elem::Disk(a) => Disks::new().inverse(a).map(Elem::Disk),
            Elem::MatrixSet(a) => MatrixSets::new().inverse(a).map(Elem::MatrixSet),
            Elem::Func(f) => {
                let values = f.values.iter().map(Elem::inverse).collect::<Result<Vec<_>>>()?;
                Some(Elem::Func(FuncTuple::new(values)))
            }
        };
        inv.ok_or(QaError::NotAUnit)
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_ok()
    }

    pub fn is_thin(&self) -> bool {
        match self {
            Elem::Union(a) => a.is_finite_point_set(),
            Elem::MatrixSet(_) => true,
            Elem::Func(f) => f.values.iter().any(Elem::is_thin),
            _ => false,
        }
    }

    /// Number of components (union parts, set members; max over a tuple).
    pub fn size(&self) -> usize {
        match self {
            Elem::Union(a) => a.parts().len(),
            Elem::MatrixSet(a) => a.members().len(),
            Elem::Func(f) => f.values.iter().map(Elem::size).max().unwrap_or(0),
            _ => 1,
        }
    }

    pub fn as_interval(&self) -> Option<&Interval<S>> {
        match self {
            Elem::Interval(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_union(&self) -> Option<&IntervalUnion<S>> {
        match self {
            Elem::Union(u) => Some(u),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let s = |v: &S| Value::String(v.to_json_string());
        let iv = |i: &Interval<S>| json!({"lo": s(i.lo()), "hi": s(i.hi())});
        let payload = match self {
            Elem::Real(a) => s(a),
            Elem::Interval(i) => iv(i),
            Elem::Union(u) => json!({"parts": u.parts().iter().map(iv).collect::<Vec<_>>()}),
            Elem::Disk(d) => json!({"center": s(d.center()), "radius": s(d.radius())}),
            Elem::MatrixSet(m) => json!({
                "members": m.members().iter().map(|x| {
                    json!(x.e.iter().map(|row| row.iter().map(s).collect::<Vec<_>>()).collect::<Vec<_>>())
                }).collect::<Vec<_>>()
            }),
            Elem::Func(f) => json!({"values": f.values.iter().map(Elem::to_json).collect::<Vec<_>>()}),
        };
        json!({"kind": self.tag().name(), "payload": payload})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| QaError::Json(what.to_string());
        let scalar = |v: &Value| -> Result<S> {
            v.as_str().and_then(S::parse_literal).ok_or_else(|| bad(&format!("expected rational string, got {v}")))
        };
        let interval = |v: &Value| -> Result<Interval<S>> { Interval::new(scalar(&v["lo"])?, scalar(&v["hi"])?) };
        let kind = v["kind"].as_str().ok_or_else(|| bad("missing kind"))?;
        let tag = Tag::parse(kind).ok_or_else(|| bad(&format!("unknown kind {kind}")))?;
        let p = &v["payload"];
        let array = |v: &Value, what: &str| -> Result<Vec<Value>> {
            v.as_array().cloned().ok_or_else(|| bad(&format!("{what} must be an array")))
        };
        Ok(match tag {
            Tag::Real => Elem::Real(scalar(p)?),
            Tag::Interval => Elem::Interval(interval(p)?),
            Tag::Union => {
                let parts = array(&p["parts"], "parts")?.iter().map(interval).collect::<Result<Vec<_>>>()?;
                let u = IntervalUnion::normalize(parts)?;
                Elem::Union(u)
            }
            Tag::Disk => Elem::Disk(RealDisk::new(scalar(&p["center"])?, scalar(&p["radius"])?)?),
            Tag::MatrixSet => {
                let mut members = Vec::new();
                for m in array(&p["members"], "members")? {
                    let rows = array(&m, "matrix")?;
                    if rows.len() != 2 {
                        return Err(bad("matrix must have 2 rows"));
                    }
                    let mut cells = Vec::with_capacity(4);
                    for row in &rows {
                        let row = array(row, "row")?;
                        if row.len() != 2 {
                            return Err(bad("matrix row must have 2 entries"));
                        }
                        for c in &row {
                            cells.push(scalar(c)?);
                        }
                    }
                    let mut it = cells.into_iter();
                    let mut next = || it.next().expect("4 cells");
                    members.push(Matrix2::new(next(), next(), next(), next()));
                }
                Elem::MatrixSet(MatrixSet::new(members)?)
            }
            Tag::Func => {
                let values = array(&p["values"], "values")?.iter().map(Elem::from_json).collect::<Result<Vec<_>>>()?;
                Elem::func(values)?
            }
        })
    }
}

impl<S: Scalar> fmt::Display for Elem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Real(a) => write!(f, "{a}"),
            Elem::Interval(a) => write!(f, "{a}"),
            Elem::Union(a) => write!(f, "{a}"),
            Elem::Disk(a) => write!(f, "{a}"),
            Elem::MatrixSet(a) => write!(f, "{a}"),
            Elem::Func(a) => write!(f, "{a}"),
        }
    }
}

impl<S> From<Interval<S>> for Elem<S> {
    fn from(v: Interval<S>) -> Self {
        Elem::Interval(v)
    }
}

impl<S> From<IntervalUnion<S>> for Elem<S> {
    fn from(v: IntervalUnion<S>) -> Self {
        Elem::Union(v)
    }
}

impl<S> From<RealDisk<S>> for Elem<S> {
    fn from(v: RealDisk<S>) -> Self {
        Elem::Disk(v)
    }
}

impl<S> From<MatrixSet<S>> for Elem<S> {
    fn from(v: MatrixSet<S>) -> Self {
        Elem::MatrixSet(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn iv(lo: i64, hi: i64) -> Elem<Rational> {
        Elem::Interval(Interval::new(q(lo), q(hi)).unwrap())
    }

    #[test]
    fn mixed_tags_are_rejected() {
        let d = Elem::Disk(RealDisk::new(q(0), q(1)).unwrap());
        assert_eq!(iv(0, 1).add(&d), Err(QaError::TagMismatch { left: Tag::Interval, right: Tag::Disk }));
        let f2 = Elem::func(vec![iv(0, 1), iv(0, 1)]).unwrap();
        let f3 = Elem::func(vec![iv(0, 1), iv(0, 1), iv(0, 1)]).unwrap();
        assert_eq!(f2.add(&f3), Err(QaError::IndexMismatch { left: 2, right: 3 }));
        assert!(Elem::func(vec![iv(0, 1), Elem::Real(q(1))]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = MatrixSet::new(vec![Matrix2::new(q(1), q(2), q(3), q(4)), Matrix2::identity()]).unwrap();
        let u = IntervalUnion::normalize(vec![Interval::new(q(1), q(2)).unwrap(), Interval::point(q(5))]).unwrap();
        let cases = vec![
            Elem::Real(Rational::new(q(-3).to_integer(), 4.into())),
            iv(-2, 2),
            Elem::Union(u.clone()),
            Elem::Disk(RealDisk::new(q(1), q(2)).unwrap()),
            Elem::MatrixSet(m),
            Elem::func(vec![Elem::Union(u.clone()), Elem::Union(u)]).unwrap(),
        ];
        for e in cases {
            let back = Elem::<Rational>::from_json(&e.to_json()).unwrap();
            assert_eq!(back, e);
        }
        assert_eq!(iv(0, 1).to_json()["payload"]["hi"], "1/1");
    }

    #[test]
    fn dynamic_ops_follow_models() {
        assert_eq!(iv(-2, 2).mul(&iv(-4, 4)).unwrap(), iv(-8, 8));
        assert!(iv(3, 3).leq(&iv(-4, 4)).unwrap());
        assert!(!iv(3, 3).leq(&iv(-2, 2)).unwrap());
        assert!(iv(5, 5).is_regular());
        assert!(!iv(0, 1).is_regular());
        assert_eq!(iv(2, 2).inverse().unwrap(), Elem::Interval(Interval::point(Rational::new(1.into(), 2.into()))));
        assert_eq!(iv(0, 1).inverse(), Err(QaError::NotAUnit));
    }
}
