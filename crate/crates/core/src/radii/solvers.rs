use serde::{Deserialize, Serialize};

use super::params::TheoremParams;
use super::root::{find_root, first_sign_change, ROOT_TOL};
use crate::error::{Error, Result};
use crate::mapping::EllipticParams;

/// Search domain for radius equations; singular endpoints are never evaluated.
pub const SEARCH_LO: f64 = 1e-12;
pub const SEARCH_HI: f64 = 1.0 - 1e-12;

/// Where the schlicht expression is evaluated when there is no interior root.
pub const BOUNDARY_PROBE: f64 = 1.0 - 1e-6;

/// Step of the sign scan used for "least positive root" equations.
pub const LEAST_ROOT_SCAN_STEP: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius: f64,
    pub schlicht_radius: f64,
    /// `|equation(radius)|`. Zero for closed forms; for boundary cases, the
    /// magnitude of the equation at the top of the search domain.
    pub residual: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    /// No sign change on the search domain: univalent on the whole disk,
    /// `radius = 1`.
    pub boundary_case: bool,
}

/// A solved parameter point, as emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub variant: String,
    pub params: TheoremParams,
    #[serde(flatten)]
    pub result: RadiusResult,
}

impl SolveRecord {
    pub fn new(params: TheoremParams, result: RadiusResult) -> Self {
        SolveRecord { variant: params.variant_name().to_string(), params, result }
    }
}

#[derive(Clone, Copy)]
enum Scan {
    Direct,
    LeastRoot,
}

fn solve_equation(params: &TheoremParams, scan: Scan) -> Result<RadiusResult> {
    params.validate()?;
    let f = |r: f64| params.equation(r).ok().flatten().unwrap_or(f64::NAN);
    let bracket = match scan {
        Scan::Direct => Some((SEARCH_LO, SEARCH_HI)),
        Scan::LeastRoot => first_sign_change(f, SEARCH_LO, SEARCH_HI, LEAST_ROOT_SCAN_STEP)?,
    };
    let root = match bracket {
        Some((lo, hi)) if lo == hi => Some(super::Root { root: lo, residual: f(lo).abs(), iterations: 0, bracket: (lo, hi) }),
        Some((lo, hi)) => find_root(f, lo, hi, ROOT_TOL)?,
        None => None,
    };
    match root {
        Some(root) => Ok(RadiusResult {
            radius: root.root,
            schlicht_radius: params.schlicht(root.root)?,
            residual: root.residual,
            bracket: root.bracket,
            iterations: root.iterations,
            boundary_case: false,
        }),
        None => Ok(RadiusResult {
            radius: 1.0,
            schlicht_radius: params.schlicht(BOUNDARY_PROBE)?,
            residual: f(SEARCH_HI).abs(),
            bracket: (SEARCH_LO, SEARCH_HI),
            iterations: 0,
            boundary_case: true,
        }),
    }
}

fn wrong_variant(expected: &str, params: &TheoremParams) -> Error {
    Error::validation(format!("expected {expected} parameters, got {}", params.variant_name()))
}

/// Root of `Λ'(1−Λ'r)/(Λ'−r) − φ(r) = 0` with `Λ' = lambda_prime(K, K', Λ_p)`.
/// Also accepts `BaselineA`, which is the `K = 1, K' = 0` case.
pub fn solve_t21(params: &TheoremParams) -> Result<RadiusResult> {
    match params {
        TheoremParams::T21 { .. } | TheoremParams::BaselineA { .. } => solve_equation(params, Scan::Direct),
        other => Err(wrong_variant("T21 or BaselineA", other)),
    }
}

pub fn solve_t22(params: &TheoremParams) -> Result<RadiusResult> {
    match params {
        TheoremParams::T22 { .. } | TheoremParams::BaselineB { .. } => solve_equation(params, Scan::Direct),
        other => Err(wrong_variant("T22 or BaselineB", other)),
    }
}

/// The quasiregular radii `r₄` are `K' = 0` calls of this solver.
pub fn solve_t26(params: &TheoremParams) -> Result<RadiusResult> {
    match params {
        TheoremParams::T26 { .. } => solve_equation(params, Scan::Direct),
        other => Err(wrong_variant("T26", other)),
    }
}

/// The quasiregular radii `r₆` are `K' = 0` calls of this solver.
pub fn solve_t27(params: &TheoremParams) -> Result<RadiusResult> {
    match params {
        TheoremParams::T27 { .. } => solve_equation(params, Scan::Direct),
        other => Err(wrong_variant("T27", other)),
    }
}

/// Least positive root of the bounded-modulus equation.
pub fn baseline_tc(m: f64, p: usize) -> Result<RadiusResult> {
    solve_equation(&TheoremParams::BaselineC { p, m }, Scan::LeastRoot)
}

/// Least positive root of the bounded-distortion equation.
pub fn baseline_td(m: f64, p: usize) -> Result<RadiusResult> {
    solve_equation(&TheoremParams::BaselineD { p, m }, Scan::LeastRoot)
}

fn closed_form(params: &TheoremParams, radius: f64) -> Result<RadiusResult> {
    Ok(RadiusResult {
        radius,
        schlicht_radius: params.schlicht(radius)?,
        residual: 0.0,
        bracket: (radius, radius),
        iterations: 0,
        boundary_case: false,
    })
}

/// `ρ₅ = 1/(1 + Kλ + √K')`.
pub fn baseline_te(elliptic: EllipticParams, lambda: f64) -> Result<RadiusResult> {
    let params = TheoremParams::BaselineE { elliptic, lambda };
    params.validate()?;
    closed_form(&params, 1.0 / (1.0 + elliptic.k() * lambda + elliptic.k_prime().sqrt()))
}

/// `ρ₆ = 1/(1 + λK^{3/2})`.
pub fn baseline_tf(k: f64, lambda: f64) -> Result<RadiusResult> {
    let params = TheoremParams::BaselineF { k, lambda };
    params.validate()?;
    closed_form(&params, 1.0 / (1.0 + lambda * k.powf(1.5)))
}

/// Dispatches on the variant.
pub fn solve(params: &TheoremParams) -> Result<RadiusResult> {
    match params {
        TheoremParams::T21 { .. } | TheoremParams::BaselineA { .. } => solve_t21(params),
        TheoremParams::T22 { .. } | TheoremParams::BaselineB { .. } => solve_t22(params),
        TheoremParams::T26 { .. } => solve_t26(params),
        TheoremParams::T27 { .. } => solve_t27(params),
        TheoremParams::BaselineC { p, m } => baseline_tc(*m, *p),
        TheoremParams::BaselineD { p, m } => baseline_td(*m, *p),
        TheoremParams::BaselineE { elliptic, lambda } => baseline_te(*elliptic, *lambda),
        TheoremParams::BaselineF { k, lambda } => baseline_tf(*k, *lambda),
    }
}
