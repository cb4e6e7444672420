//! Numerical falsification harness.
//!
//! The checks here can disprove univalence or a coefficient bound for a
//! concrete mapping; passing them proves nothing. They exist to catch errors
//! in the evaluators and solvers, and to exhibit the sharpness of the
//! extremal functions numerically.

mod coeff;
mod injectivity;
mod parseval;
mod schlicht;
mod sharpness;
pub mod suite;

pub use coeff::{check_coeff_bounds, check_coeff_bounds_measured, CoeffCheckReport, CoeffViolation};
pub use injectivity::{check_injectivity, InjectivityReport, COLLISION_TOL};
pub use parseval::{parseval_check, ParsevalReport, PARSEVAL_TOL};
pub use schlicht::{check_schlicht, SchlichtReport};
pub use sharpness::{sharpness_probe, SharpnessReport};
