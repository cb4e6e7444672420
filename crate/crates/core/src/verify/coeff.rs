use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::{empirical_constants, EllipticParams, EmpiricalConstants, Mapping, PolyharmonicMap};
use crate::radii::{coeff_bound, energy_bound, CoeffTheorem};

const NORMALIZATION_TOL: f64 = 1e-9;
const ENERGY_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffViolation {
    pub n: usize,
    pub k: usize,
    /// `|a_{n,k}| + |b_{n,k}|`.
    pub measured: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffCheckReport {
    pub theorem: CoeffTheorem,
    pub elliptic: EllipticParams,
    pub lambda: f64,
    /// Sorted by `(n, k)`.
    pub violations: Vec<CoeffViolation>,
    /// `Σ ((n+k−1)² + (k−1)²)(|a|² + |b|²)`.
    pub energy_lhs: f64,
    pub energy_rhs: f64,
    pub passed: bool,
}

fn check_normalization(map: &PolyharmonicMap, theorem: CoeffTheorem) -> Result<()> {
    if !map.sector_ok() {
        return Err(Error::Hypothesis("coefficient table has not been verified against the argument condition".into()));
    }
    let d = map.distortions(Complex64::new(0.0, 0.0))?;
    match theorem {
        CoeffTheorem::T24 | CoeffTheorem::C2 if (d.small_lambda - 1.0).abs() > NORMALIZATION_TOL => {
            Err(Error::Hypothesis(format!("λ_F(0) = {} but must be 1", d.small_lambda)))
        }
        CoeffTheorem::T25 | CoeffTheorem::C3 if (d.jacobian - 1.0).abs() > NORMALIZATION_TOL => {
            Err(Error::Hypothesis(format!("J_F(0) = {} but must be 1", d.jacobian)))
        }
        CoeffTheorem::T24 | CoeffTheorem::C2 | CoeffTheorem::T25 | CoeffTheorem::C3 if map.a0().norm() > 0.0 => {
            Err(Error::Hypothesis("F(0) must be 0".into()))
        }
        _ => Ok(()),
    }
}

/// Checks every stated coefficient estimate of `theorem` against the table,
/// plus the weighted energy inequality.
///
/// `elliptic` and `lambda` are taken as given: the caller is responsible for
/// them being valid hypotheses for `map` (see [`check_coeff_bounds_measured`]).
/// Normalisation and argument-condition failures are returned as
/// [`Error::Hypothesis`], never as violations.
pub fn check_coeff_bounds(
    map: &PolyharmonicMap,
    theorem: CoeffTheorem,
    elliptic: EllipticParams,
    lambda: f64,
) -> Result<CoeffCheckReport> {
    check_normalization(map, theorem)?;
    let mut violations = Vec::new();
    let mut energy_lhs = 0.0;
    for (n, k, a, b) in map.coefficients() {
        let weight = ((n + k - 1).pow(2) + (k - 1).pow(2)) as f64;
        energy_lhs += weight * (a.norm_sqr() + b.norm_sqr());
        if (n, k) == (1, 1) {
            continue;
        }
        let bound = coeff_bound(theorem, elliptic, lambda, n, k)?;
        let measured = a.norm() + b.norm();
        if measured > bound {
            violations.push(CoeffViolation { n, k, measured, bound });
        }
    }
    let energy_elliptic = match theorem {
        CoeffTheorem::C1 | CoeffTheorem::C2 | CoeffTheorem::C3 => elliptic.with_k_prime(0.0)?,
        _ => elliptic,
    };
    let energy_rhs = energy_bound(energy_elliptic, lambda);
    Ok(CoeffCheckReport {
        theorem,
        elliptic,
        lambda,
        passed: violations.is_empty() && energy_lhs <= energy_rhs + ENERGY_SLACK,
        violations,
        energy_lhs,
        energy_rhs,
    })
}

/// Measures `λ = sup λ_F` and `K = sup Λ_F/λ_F` on a `grid_n` grid and runs
/// [`check_coeff_bounds`] with `(K, K' = 0)`.
pub fn check_coeff_bounds_measured(
    map: &PolyharmonicMap,
    theorem: CoeffTheorem,
    grid_n: usize,
) -> Result<(EmpiricalConstants, CoeffCheckReport)> {
    let emp = empirical_constants(map, grid_n)?;
    let k = match (emp.sense_preserving, emp.k_emp) {
        (true, Some(k)) => k,
        _ => return Err(Error::Hypothesis("map is not sense-preserving with positive λ_F on the grid".into())),
    };
    let report = check_coeff_bounds(map, theorem, EllipticParams::quasiregular(k.max(1.0))?, emp.lambda_sup)?;
    Ok((emp, report))
}
