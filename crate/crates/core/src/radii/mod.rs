//! Radius equations and their solvers.

mod constants;
mod params;
mod root;
mod solvers;

pub use constants::{
    coeff_bound, distortion_quadratic, energy_bound, k1_constant, k1_crossover, lambda0, lambda1, lambda_prime, m0,
    phi, CoeffTheorem,
};
pub use params::TheoremParams;
pub use root::{bisect, find_root, first_sign_change, Root, ROOT_TOL};
pub use solvers::{
    baseline_tc, baseline_td, baseline_te, baseline_tf, solve, solve_t21, solve_t22, solve_t26, solve_t27,
    RadiusResult, SolveRecord, BOUNDARY_PROBE, LEAST_ROOT_SCAN_STEP, SEARCH_HI, SEARCH_LO,
};
