//! Concrete quasi-algebras.

mod disk;
mod func;
mod interval;
mod matrix;
mod real;
mod union;

pub use disk::{Disks, RealDisk};
pub use func::{FuncTuple, Functions};
pub use interval::{Interval, Intervals};
pub use matrix::{Matrix2, MatrixSet, MatrixSets};
pub use real::Reals;
pub use union::{IntervalUnion, Unions};
