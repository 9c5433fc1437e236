//! Polynomial range enclosures by interval evaluation over a uniform
//! subdivision of the domain.

use num_traits::{One, Zero};
use qalg::models::Interval;
use qalg::{QaError, Rational, Result, Scalar};
use serde_json::{json, Value};

/// Grid steps in the reference sample of the true range; the grid has
/// `SAMPLES + 1` points including both ends of the domain.
pub const SAMPLES: usize = 10_000;

/// Deepest subdivision accepted (`2^20` pieces).
pub const MAX_DEPTH: u32 = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct Enclosure {
    /// `c0, c1, ...` of `c0 + c1 t + c2 t^2 + ...`
    pub coeffs: Vec<Rational>,
    pub domain: Interval<Rational>,
    pub depth: u32,
    pub enclosure: Interval<Rational>,
    /// Hull of the polynomial's values on the sample grid.
    pub sampled: Interval<Rational>,
    /// `width(enclosure) - width(sampled)`.
    pub excess: Rational,
}

impl Enclosure {
    pub fn is_sound(&self) -> bool {
        self.enclosure.lo() <= self.sampled.lo() && self.sampled.hi() <= self.enclosure.hi()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(Scalar::to_json_string).collect::<Vec<_>>(),
            "domain": self.domain.to_string(),
            "depth": self.depth,
            "enclosure": self.enclosure.to_string(),
            "sampled": self.sampled.to_string(),
            "excess": self.excess.to_json_string(),
        })
    }
}

/// `sum c_k X^k` with `X^k` as repeated interval products. Each power is
/// evaluated independently, so `t^2 - t` over `[0,1]` gives
/// `[0,1] - [0,1] = [-1,1]`.
pub fn eval_power_form(coeffs: &[Rational], x: &Interval<Rational>) -> Interval<Rational> {
    let mut power = Interval::point(Rational::one());
    let mut acc = Interval::point(Rational::zero());
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            power = power.mul(x);
        }
        acc = acc.add(&power.scale(c));
    }
    acc
}

/// Exact value at a point, by Horner's rule.
pub fn eval_point(coeffs: &[Rational], t: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

fn hull(a: &Interval<Rational>, b: &Interval<Rational>) -> Interval<Rational> {
    Interval::spanning(a.lo().min(b.lo()).clone(), a.hi().max(b.hi()).clone())
}

/// Range of the polynomial on the uniform sample grid.
pub fn sampled_range(coeffs: &[Rational], domain: &Interval<Rational>) -> Interval<Rational> {
    let step = domain.width() / Rational::from_integer((SAMPLES as i64).into());
    let mut t = domain.lo().clone();
    let first = eval_point(coeffs, &t);
    let (mut lo, mut hi) = (first.clone(), first);
    for _ in 0..SAMPLES {
        t += &step;
        let v = eval_point(coeffs, &t);
        if v < lo {
            lo = v;
        } else if v > hi {
            hi = v;
        }
    }
    Interval::spanning(lo, hi)
}

/// Hull of the power-form values over `2^depth` equal pieces of `domain`.
pub fn enclose(coeffs: &[Rational], domain: &Interval<Rational>, depth: u32) -> Result<Enclosure> {
    if depth > MAX_DEPTH {
        return Err(QaError::InvalidArgument(format!("depth {depth} exceeds {MAX_DEPTH}")));
    }
    let coeffs = if coeffs.is_empty() { vec![Rational::zero()] } else { coeffs.to_vec() };
    let pieces = 1i64 << depth;
    let step = domain.width() / Rational::from_integer(pieces.into());
    let mut enclosure: Option<Interval<Rational>> = None;
    let mut lo = domain.lo().clone();
    for i in 0..pieces {
        let hi = if i + 1 == pieces { domain.hi().clone() } else { lo.clone() + &step };
        let piece = eval_power_form(&coeffs, &Interval::spanning(lo, hi.clone()));
        enclosure = Some(match enclosure {
            Some(e) => hull(&e, &piece),
            None => piece,
        });
        lo = hi;
    }
    let enclosure = enclosure.expect("at least one piece");
    let sampled = sampled_range(&coeffs, domain);
    let excess = enclosure.width() - sampled.width();
    Ok(Enclosure { coeffs, domain: domain.clone(), depth, enclosure, sampled, excess })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn horner_matches_power_sum() {
        let c = [q(1, 1), q(-2, 1), q(3, 1)];
        assert_eq!(eval_point(&c, &q(2, 1)), q(9, 1));
    }

    #[test]
    fn depth_limit() {
        let d = Interval::new(q(0, 1), q(1, 1)).unwrap();
        assert!(enclose(&[q(1, 1)], &d, MAX_DEPTH + 1).is_err());
    }
}
