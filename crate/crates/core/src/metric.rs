//! The Hausdorff metric from its infimum definition, as an independent
//! check on each model's closed-form `excess`.
//!
//! `h(x, y)` is the least `r` such that `x <= y + a1` and `y <= x + a2` for
//! some `a1`, `a2` of norm at most `r`. The oracle below never calls
//! `excess`; it builds candidate perturbations and checks them with the
//! order, addition and norm only.

use crate::elem::Elem;
use crate::error::Result;
use crate::models::{FuncTuple, Interval, IntervalUnion, MatrixSet, RealDisk};
use crate::scalar::Scalar;

/// Certificate that `h(x, y) <= r`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricWitness<S> {
    pub a1: Elem<S>,
    pub a2: Elem<S>,
    pub r: S,
}

impl<S: Scalar> MetricWitness<S> {
    /// Re-checks the certificate against `(x, y)`.
    pub fn certifies(&self, x: &Elem<S>, y: &Elem<S>) -> Result<bool> {
        Ok(!self.r.is_negative()
            && x.leq(&y.add(&self.a1)?)?
            && y.leq(&x.add(&self.a2)?)?
            && self.a1.norm().le_scalar(&self.r)
            && self.a2.norm().le_scalar(&self.r))
    }
}

/// Default oracle grid step.
pub fn default_resolution<S: Scalar>() -> S {
    S::ratio(1, 64)
}

/// A perturbation `a` with `||a|| <= r` and `x <= y + a`, if the model's
/// candidate family contains one.
///
/// Set models use the symmetric ball of radius `r`. Matrix sets use the
/// differences `x_i - y_j` of norm at most `r`. Reals use `x - y`.
pub fn witness_for<S: Scalar>(x: &Elem<S>, y: &Elem<S>, r: &S) -> Result<Option<Elem<S>>> {
    let candidate = match (x, y) {
        (Elem::Real(a), Elem::Real(b)) => Some(Elem::Real(a.clone() - b.clone())),
        (Elem::Interval(_), _) => Some(Elem::Interval(Interval::spanning(-r.clone(), r.clone()))),
        (Elem::Union(_), _) => Some(Elem::Union(IntervalUnion::from(Interval::spanning(-r.clone(), r.clone())))),
        (Elem::Disk(_), _) => Some(Elem::Disk(RealDisk::new(S::zero(), r.clone())?)),
        (Elem::MatrixSet(a), Elem::MatrixSet(b)) => {
            let r_sq = r.clone() * r.clone();
            let diffs: Vec<_> = a
                .members()
                .iter()
                .flat_map(|p| b.members().iter().map(move |q| p.sub(q)))
                .filter(|d| d.frob_sq().approx_le(&r_sq))
                .collect();
            MatrixSet::new(diffs).ok().map(Elem::MatrixSet)
        }
        (Elem::Func(f), Elem::Func(g)) => {
            let mut values = Vec::with_capacity(f.len());
            for (a, b) in f.values.iter().zip(&g.values) {
                match witness_for(a, b, r)? {
                    Some(w) => values.push(w),
                    None => return Ok(None),
                }
            }
            Some(Elem::Func(FuncTuple::new(values)))
        }
        _ => {
            x.same_model(y)?;
            None
        }
    };
    let Some(a) = candidate else { return Ok(None) };
    let ok = a.norm().le_scalar(r) && x.leq(&y.add(&a)?)?;
    Ok(ok.then_some(a))
}

fn witness_at<S: Scalar>(x: &Elem<S>, y: &Elem<S>, r: &S) -> Result<Option<MetricWitness<S>>> {
    let Some(a1) = witness_for(x, y, r)? else { return Ok(None) };
    let Some(a2) = witness_for(y, x, r)? else { return Ok(None) };
    Ok(Some(MetricWitness { a1, a2, r: r.clone() }))
}

/// Least grid point `k * resolution` admitting a witness, with the witness.
///
/// Witness existence is monotone in `r`, so the grid is searched by
/// doubling and then bisection.
pub fn hausdorff_oracle<S: Scalar>(x: &Elem<S>, y: &Elem<S>, resolution: &S) -> Result<(S, MetricWitness<S>)> {
    assert!(resolution.is_positive(), "resolution must be positive");
    let at = |k: u64| -> Result<Option<MetricWitness<S>>> {
        let r = S::from_u64(k).expect("grid index") * resolution.clone();
        witness_at(x, y, &r)
    };
    if let Some(w) = at(0)? {
        return Ok((S::zero(), w));
    }
    let mut lo = 0u64;
    let mut hi = 1u64;
    let mut best = loop {
        if let Some(w) = at(hi)? {
            break w;
        }
        lo = hi;
        hi = hi.checked_mul(2).expect("oracle search diverged");
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match at(mid)? {
            Some(w) => {
                hi = mid;
                best = w;
            }
            None => lo = mid,
        }
    }
    Ok((best.r.clone(), best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::Matrix2;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn iv(lo: i64, hi: i64) -> Elem<Rational> {
        Elem::Interval(Interval::new(q(lo, 1), q(hi, 1)).unwrap())
    }

    #[test]
    fn oracle_matches_closed_form_on_intervals() {
        let (r, w) = hausdorff_oracle(&iv(0, 1), &iv(2, 5), &q(1, 8)).unwrap();
        assert_eq!(r, q(4, 1));
        assert!(w.certifies(&iv(0, 1), &iv(2, 5)).unwrap());
        let (r, _) = hausdorff_oracle(&iv(3, 3), &iv(0, 1), &q(1, 16)).unwrap();
        assert_eq!(r, q(3, 1));
    }

    #[test]
    fn oracle_of_equal_elements_is_zero() {
        let (r, w) = hausdorff_oracle(&iv(-1, 2), &iv(-1, 2), &q(1, 64)).unwrap();
        assert_eq!(r, q(0, 1));
        assert!(w.a1.is_zero() && w.a2.is_zero());
    }

    #[test]
    fn oracle_rounds_up_to_grid() {
        let x = Elem::Interval(Interval::new(q(0, 1), q(1, 3)).unwrap());
        let (r, _) = hausdorff_oracle(&x, &iv(0, 0), &q(1, 8)).unwrap();
        assert_eq!(r, q(3, 8));
    }

    #[test]
    fn matrix_witness_uses_differences() {
        let a = Elem::MatrixSet(MatrixSet::singleton(Matrix2::new(q(3, 1), q(0, 1), q(0, 1), q(4, 1))));
        let z = Elem::MatrixSet(MatrixSet::singleton(Matrix2::zero()));
        let (r, w) = hausdorff_oracle(&a, &z, &q(1, 64)).unwrap();
        assert_eq!(r, q(5, 1));
        assert!(w.certifies(&a, &z).unwrap());
    }
}
