use serde::{Deserialize, Serialize};

use super::{polar_grid, Mapping};
use crate::error::{Error, Result};

/// Largest radius sampled by grid routines.
pub const MEASUREMENT_RADIUS: f64 = 0.999;

const DEGENERATE_LAMBDA: f64 = 1e-12;

/// Grid-measured hypotheses of a mapping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalConstants {
    /// `max λ_F` over the grid.
    pub lambda_sup: f64,
    /// `max Λ_F` over the grid.
    pub big_lambda_sup: f64,
    /// `max Λ_F/λ_F`; `None` when `λ_F < 1e-12` somewhere.
    pub k_emp: Option<f64>,
    pub sense_preserving: bool,
    pub min_jacobian: f64,
    pub degenerate_points: usize,
    pub grid_n: usize,
    pub measurement_radius: f64,
}

/// Measures `λ_F`, `Λ_F/λ_F` and the sign of `J_F` on a `grid_n × grid_n`
/// polar grid (plus the origin) of radius [`MEASUREMENT_RADIUS`].
pub fn empirical_constants<M: Mapping + ?Sized>(map: &M, grid_n: usize) -> Result<EmpiricalConstants> {
    if grid_n < 16 {
        return Err(Error::validation(format!("grid_n must be >= 16, got {grid_n}")));
    }
    let mut out = EmpiricalConstants {
        lambda_sup: 0.0,
        big_lambda_sup: 0.0,
        k_emp: Some(0.0),
        sense_preserving: true,
        min_jacobian: f64::INFINITY,
        degenerate_points: 0,
        grid_n,
        measurement_radius: MEASUREMENT_RADIUS,
    };
    let mut ratio_sup: f64 = 0.0;
    for z in polar_grid(MEASUREMENT_RADIUS, grid_n, grid_n as f64, grid_n) {
        let d = map.distortions(z)?;
        out.lambda_sup = out.lambda_sup.max(d.small_lambda);
        out.big_lambda_sup = out.big_lambda_sup.max(d.big_lambda);
        out.min_jacobian = out.min_jacobian.min(d.jacobian);
        if d.small_lambda < DEGENERATE_LAMBDA {
            out.degenerate_points += 1;
        } else {
            ratio_sup = ratio_sup.max(d.big_lambda / d.small_lambda);
        }
    }
    out.sense_preserving = out.min_jacobian > 0.0;
    out.k_emp = (out.degenerate_points == 0).then_some(ratio_sup);
    Ok(out)
}
