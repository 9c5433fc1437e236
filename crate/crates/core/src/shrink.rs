//! Greedy counterexample minimization.
//!
//! A failing case is a list of elements. Candidates come from shrinking
//! one element at a time; a candidate is accepted when it still fails and
//! is strictly smaller under the order (largest component count, total
//! components, scalar complexity). The first accepted candidate wins, so
//! the result depends only on the input.

use crate::elem::Elem;
use crate::gen::{elem_complexity, Generate};
use crate::scalar::Scalar;

/// Shrink measure of a case: (max components, total components, complexity).
pub type Measure = (usize, usize, u64);

pub fn measure<M: Generate>(model: &M, case: &[M::Elem]) -> Measure {
    let sizes: Vec<usize> = case.iter().map(|x| model.size(x)).collect();
    (sizes.iter().copied().max().unwrap_or(0), sizes.iter().sum(), case.iter().map(|x| model.complexity(x)).sum())
}

/// [`measure`] for dynamically tagged elements.
pub fn measure_elems<S: Scalar>(case: &[Elem<S>]) -> Measure {
    let sizes: Vec<usize> = case.iter().map(Elem::size).collect();
    (sizes.iter().copied().max().unwrap_or(0), sizes.iter().sum(), case.iter().map(elem_complexity).sum())
}

/// All cases obtained by shrinking exactly one element.
pub fn case_candidates<M: Generate>(model: &M, case: &[M::Elem]) -> Vec<Vec<M::Elem>> {
    let mut out = Vec::new();
    for (i, x) in case.iter().enumerate() {
        for s in model.shrink(x) {
            let mut next = case.to_vec();
            next[i] = s;
            out.push(next);
        }
    }
    out
}

/// Cap on accepted shrink steps; each step strictly decreases the measure,
/// so this only bounds pathological inputs.
pub const MAX_STEPS: usize = 10_000;

/// Minimizes a failing case. `fails` must hold for `start`.
pub fn shrink_case<T: Clone, K: Ord>(
    start: T,
    candidates: impl Fn(&T) -> Vec<T>,
    measure: impl Fn(&T) -> K,
    fails: impl Fn(&T) -> bool,
) -> T {
    let mut cur = start;
    let mut cur_measure = measure(&cur);
    for _ in 0..MAX_STEPS {
        let mut next: Vec<(K, T)> =
            candidates(&cur).into_iter().map(|c| (measure(&c), c)).filter(|(m, _)| *m < cur_measure).collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        match next.into_iter().find(|(_, c)| fails(c)) {
            Some((m, c)) => {
                cur = c;
                cur_measure = m;
            }
            None => break,
        }
    }
    cur
}

/// [`shrink_case`] for element lists of a model.
pub fn shrink_elems<M: Generate>(model: &M, start: Vec<M::Elem>, fails: impl Fn(&[M::Elem]) -> bool) -> Vec<M::Elem> {
    shrink_case(start, |c| case_candidates(model, c), |c| measure(model, c), |c| fails(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuasiAlgebra;
    use crate::gen::{rng_for, GenConfig};
    use crate::models::{Interval, IntervalUnion, Unions};
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn shrinks_to_fewer_components_and_keeps_failing() {
        let m = Unions::<Rational>::new();
        // "Fails" whenever the union has a part of positive width.
        let fails = |c: &[IntervalUnion<Rational>]| c[0].parts().iter().any(|p| !p.is_point());
        let start = IntervalUnion::normalize(vec![
            Interval::new(q(-7), q(-5)).unwrap(),
            Interval::point(q(3)),
            Interval::new(q(10), q(13)).unwrap(),
            Interval::point(q(20)),
        ])
        .unwrap();
        let out = shrink_elems(&m, vec![start.clone()], fails);
        assert!(fails(&out));
        assert_eq!(out[0].parts().len(), 1);
        assert!(measure(&m, &out) < measure(&m, &[start]));
    }

    #[test]
    fn minimal_input_is_unchanged() {
        let m = Unions::<Rational>::new();
        let start = vec![m.zero()];
        let out = shrink_elems(&m, start.clone(), |c| c[0].parts().len() == 1);
        assert_eq!(out, start);
    }

    #[test]
    fn shrinking_is_deterministic() {
        let m = Unions::<Rational>::new();
        let cfg = GenConfig::default();
        let mut rng = rng_for(11);
        let fails = |c: &[IntervalUnion<Rational>]| !m.is_regular(&c[0]);
        for _ in 0..20 {
            let x = m.generate_class(&mut rng, &cfg, crate::gen::Class::Singular);
            let a = shrink_elems(&m, vec![x.clone()], fails);
            let b = shrink_elems(&m, vec![x], fails);
            assert_eq!(a, b);
        }
    }
}
