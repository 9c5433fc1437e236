//! Command-line front end: expression evaluation, metric and spectrum
//! queries, the conformance runner and a range-enclosure demo.

pub mod app;
pub mod enclose;
pub mod expr;

pub use app::{run, Cli, CliError, Status};
pub use enclose::{enclose, Enclosure};
pub use expr::{eval_expr, evaluate, parse_expr, Expr, ExprError};
