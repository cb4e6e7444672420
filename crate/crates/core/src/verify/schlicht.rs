use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::injectivity::{check_injectivity, InjectivityReport, COLLISION_TOL};
use crate::error::{Error, Result};
use crate::mapping::Mapping;

const INJECTIVITY_GRID: usize = 128;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchlichtReport {
    pub radius: f64,
    pub r_claimed: f64,
    pub boundary_min_modulus: f64,
    /// Angle at which the minimum modulus was found.
    pub argmin_theta: f64,
    pub injectivity: InjectivityReport,
    pub passed: bool,
}

/// Minimum of `|F|` on the circle `|z| = r`.
///
/// Passing requires `min |F| ≥ R_claimed − 1e-8` and a passing injectivity
/// check in `𝔻_r`; for univalent `F` with `F(0) = 0` this is the necessary
/// boundary condition for `F(𝔻_r)` to contain the disk of radius `R_claimed`.
pub fn check_schlicht<M: Mapping + ?Sized>(map: &M, r: f64, r_claimed: f64, boundary_n: usize) -> Result<SchlichtReport> {
    if boundary_n < 4096 {
        return Err(Error::validation(format!("boundary_n must be >= 4096, got {boundary_n}")));
    }
    let origin = map.eval(Complex64::new(0.0, 0.0))?;
    if origin.norm() > 1e-12 {
        return Err(Error::Precondition(format!("F(0) = {origin} is not 0")));
    }
    let injectivity = check_injectivity(map, r, INJECTIVITY_GRID, COLLISION_TOL)?;
    let (mut boundary_min_modulus, mut argmin_theta) = (f64::INFINITY, 0.0);
    for j in 0..boundary_n {
        let theta = std::f64::consts::TAU * j as f64 / boundary_n as f64;
        let m = map.eval(Complex64::from_polar(r, theta))?.norm();
        if m < boundary_min_modulus {
            boundary_min_modulus = m;
            argmin_theta = theta;
        }
    }
    Ok(SchlichtReport {
        radius: r,
        r_claimed,
        boundary_min_modulus,
        argmin_theta,
        passed: boundary_min_modulus >= r_claimed - 1e-8 && injectivity.passed,
        injectivity,
    })
}
