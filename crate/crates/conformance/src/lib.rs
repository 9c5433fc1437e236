//! Randomized exact conformance suites for the quasi-algebra models.
//!
//! Each model runs the full law catalogue in [`property`]; map-level laws
//! run as the `morphisms` instance. Failures are minimized and reported as
//! tagged elements that replay under the recorded seed.

pub mod hom;
pub mod instance;
pub mod manifest;
pub mod mutants;
pub mod property;
pub mod report;
pub mod suite;

pub use instance::{Instance, INSTANCES};
pub use manifest::MANIFEST;
pub use property::Settings;
pub use report::{ConformanceReport, Counterexample, PropertyResult, SUITE_VERSION};
pub use suite::{replay, run_instance, run_morphisms, run_property, run_suite, SuiteConfig};
