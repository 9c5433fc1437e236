//! Quasi-algebras with exact set-valued models.
//!
//! Every model is generic over its [`Scalar`] type. The exact path uses
//! arbitrary-precision rationals; `f64`/`f32` instantiations exist for quick
//! demonstrations and compare with a small absolute tolerance.

pub mod algebra;
pub mod elem;
pub mod error;
pub mod gen;
pub mod magnitude;
pub mod metric;
pub mod models;
pub mod morphisms;
pub mod scalar;
pub mod shrink;
pub mod spectrum;

pub use algebra::{singular_above, singular_chain, ChainReport, Normed, QuasiAlgebra, Unital};
pub use elem::{Elem, Tag};
pub use error::{QaError, Result};
pub use magnitude::Magnitude;
pub use scalar::Scalar;

/// Exact scalars.
pub type Rational = num_rational::BigRational;

pub type ExactElem = Elem<Rational>;
pub type ExactInterval = models::Interval<Rational>;
pub type ExactUnion = models::IntervalUnion<Rational>;
pub type ExactDisk = models::RealDisk<Rational>;
pub type ExactMatrix = models::Matrix2<Rational>;
pub type ExactMatrixSet = models::MatrixSet<Rational>;

pub type FloatElem = Elem<f64>;
pub type FloatInterval = models::Interval<f64>;
pub type FloatUnion = models::IntervalUnion<f64>;
