//! Scalar abstraction shared by every model.
//!
//! The exact path uses arbitrary-precision rationals; `f64`/`f32` are
//! supported for demonstrations and compare with an absolute slack.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Field of scalars a quasi-algebra is built over.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Absolute slack for order and equality decisions. Zero for exact types.
    fn tolerance() -> Self;

    /// `num / den`. Panics on a zero denominator.
    fn ratio(num: i64, den: i64) -> Self;

    fn approx_le(&self, other: &Self) -> bool {
        *self <= other.clone() + Self::tolerance()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).abs() <= Self::tolerance()
    }

    /// Square root when it is representable exactly.
    fn exact_sqrt(&self) -> Option<Self>;

    /// Bracket `[lo, hi]` around the square root of a non-negative value,
    /// with `hi - lo <= width`.
    fn sqrt_enclosure(&self, width: &Self) -> (Self, Self);

    /// Description size used to order shrink candidates.
    fn complexity(&self) -> u64;

    /// Strictly simpler values to try while shrinking.
    fn simpler(&self) -> Vec<Self>;

    /// Lossless string form used in JSON (`"num/den"` for rationals).
    fn to_json_string(&self) -> String;

    /// Parses `p/q`, an integer, or a decimal such as `-0.125`.
    fn parse_literal(text: &str) -> Option<Self>;
}

pub fn min<S: Scalar>(a: &S, b: &S) -> S {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max<S: Scalar>(a: &S, b: &S) -> S {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

fn two<S: Scalar>() -> S {
    S::one() + S::one()
}

pub(crate) fn half<S: Scalar>(x: &S) -> S {
    x.clone() / two::<S>()
}

/// Splits a decimal/ratio literal into an exact numerator and denominator.
fn parse_exact(text: &str) -> Option<(BigInt, BigInt)> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((n, d)) = text.split_once('/') {
        let (num, nd) = parse_exact(n)?;
        let (den, dd) = parse_exact(d)?;
        if den.is_zero() {
            return None;
        }
        return Some((num * dd, den * nd));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = digits.parse().ok()?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    if neg {
        num = -num;
    }
    Some((num, den))
}

fn bits(x: &BigInt) -> u64 {
    x.bits()
}

impl Scalar for BigRational {
    fn tolerance() -> Self {
        Self::zero()
    }

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn approx_le(&self, other: &Self) -> bool {
        self <= other
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| BigRational::new(n, d))
    }

    fn sqrt_enclosure(&self, width: &Self) -> (Self, Self) {
        assert!(!self.is_negative(), "square root of a negative value");
        if let Some(root) = self.exact_sqrt() {
            return (root.clone(), root);
        }
        // sqrt(p/q) = sqrt(p*q*N^2) / (q*N); the integer root brackets it to 1/(q*N).
        let mut scale = BigInt::one();
        while BigRational::new(BigInt::one(), scale.clone()) > *width {
            scale <<= 1;
        }
        let p = self.numer();
        let q = self.denom();
        let radicand = p * q * &scale * &scale;
        let root = radicand.sqrt();
        let den = q * &scale;
        (BigRational::new(root.clone(), den.clone()), BigRational::new(root + 1, den))
    }

    fn complexity(&self) -> u64 {
        bits(self.numer()) + bits(self.denom())
    }

    fn simpler(&self) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::new();
        let mut push = |c: Self| {
            if c.complexity() < self.complexity() && !out.contains(&c) {
                out.push(c);
            }
        };
        push(Self::zero());
        if self.is_negative() {
            push(-self.clone());
        }
        push(self.trunc());
        push(self.round());
        let twice = self.clone() * Self::from_integer(2.into());
        push(twice.trunc() / Self::from_integer(2.into()));
        push(BigRational::from_integer(self.numer().div_floor(&BigInt::from(2))) / self.denom());
        push(BigRational::new(self.numer().clone(), self.denom() / 2 + 1));
        out.sort_by_key(|c| c.complexity());
        out
    }

    fn to_json_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_literal(text: &str) -> Option<Self> {
        let (n, d) = parse_exact(text)?;
        Some(BigRational::new(n, d))
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn tolerance() -> Self {
                $tol
            }

            fn ratio(num: i64, den: i64) -> Self {
                assert!(den != 0, "zero denominator");
                num as $t / den as $t
            }

            fn exact_sqrt(&self) -> Option<Self> {
                (*self >= -Self::tolerance()).then(|| self.max(0.0).sqrt())
            }

            fn sqrt_enclosure(&self, _width: &Self) -> (Self, Self) {
                let r = self.max(0.0).sqrt();
                (r, r)
            }

            fn complexity(&self) -> u64 {
                let a = self.abs();
                let frac = if a.fract() == 0.0 { 0 } else { 32 };
                (a as u64).min(1 << 20) + frac
            }

            fn simpler(&self) -> Vec<Self> {
                let mut out = Vec::new();
                for c in [0.0, self.trunc(), self.abs(), (self * 2.0).trunc() / 2.0] {
                    if c.complexity() < self.complexity() && !out.contains(&c) {
                        out.push(c);
                    }
                }
                out
            }

            fn to_json_string(&self) -> String {
                format!("{}", self)
            }

            fn parse_literal(text: &str) -> Option<Self> {
                let (n, d) = parse_exact(text)?;
                Some(n.to_f64()? as $t / d.to_f64()? as $t)
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-5);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::ratio(n, d)
    }

    #[test]
    fn parses_exact_literals() {
        assert_eq!(BigRational::parse_literal("3/4"), Some(q(3, 4)));
        assert_eq!(BigRational::parse_literal("-0.125"), Some(q(-1, 8)));
        assert_eq!(BigRational::parse_literal("0.1"), Some(q(1, 10)));
        assert_eq!(BigRational::parse_literal("12"), Some(q(12, 1)));
        assert_eq!(BigRational::parse_literal("1.5/3"), Some(q(1, 2)));
        assert_eq!(BigRational::parse_literal("2/0"), None);
        assert_eq!(BigRational::parse_literal("."), None);
        assert_eq!(BigRational::parse_literal("1e3"), None);
        assert_eq!(f64::parse_literal("0.75"), Some(0.75));
    }

    #[test]
    fn json_form_is_num_over_den() {
        assert_eq!(q(6, 8).to_json_string(), "3/4");
        assert_eq!(q(-2, 1).to_json_string(), "-2/1");
        assert_eq!(BigRational::parse_literal(&q(-7, 3).to_json_string()), Some(q(-7, 3)));
    }

    #[test]
    fn exact_sqrt_only_for_squares() {
        assert_eq!(q(9, 4).exact_sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).exact_sqrt(), None);
        assert_eq!(q(-1, 1).exact_sqrt(), None);
    }

    #[test]
    fn sqrt_enclosure_brackets_root() {
        let width = q(1, 1_000_000_000_000);
        let (lo, hi) = q(2, 1).sqrt_enclosure(&width);
        assert!(&hi - &lo <= width);
        assert!(&lo * &lo <= q(2, 1));
        assert!(&hi * &hi >= q(2, 1));
        let (lo, hi) = q(5, 7).sqrt_enclosure(&width);
        assert!(&lo * &lo <= q(5, 7) && &hi * &hi >= q(5, 7));
    }

    #[test]
    fn simpler_candidates_shrink() {
        let x = q(37, 12);
        let c = x.simpler();
        assert!(!c.is_empty());
        assert!(c.iter().all(|v| v.complexity() < x.complexity()));
        assert!(q(0, 1).simpler().is_empty());
    }
}
