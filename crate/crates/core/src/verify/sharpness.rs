use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::injectivity::{check_injectivity, COLLISION_TOL};
use crate::error::{Error, Result};
use crate::mapping::{ExtremalMap, Mapping};
use crate::radii::{bisect, SolveRecord, TheoremParams, BOUNDARY_PROBE};

const INJECTIVITY_GRID: usize = 128;
const BOUNDARY_SAMPLES: usize = 4096;
const SCAN_STEP: f64 = 1e-3;
const SCAN_MAX: f64 = 0.999;
const SCAN_ANGLES: usize = 512;
const INNER_FACTOR: f64 = 1.0 - 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub theorem_radius: f64,
    /// Smallest radius with evidence of non-univalence; `None` when nothing
    /// was found up to 0.999.
    pub observed_failure_radius: Option<f64>,
    pub boundary_min_modulus: f64,
    pub schlicht_radius_claimed: f64,
    pub inner_injectivity_passed: bool,
    pub passed: bool,
}

fn all_one(list: &[f64]) -> bool {
    list.iter().all(|&m| m == 1.0)
}

fn check_configuration(ext: &ExtremalMap, params: &TheoremParams) -> Result<()> {
    ext.validate()?;
    let unit = |e: crate::mapping::EllipticParams| e.k() == 1.0 && e.k_prime() == 0.0;
    let ok = match (ext, params) {
        (ExtremalMap::F1 { lambda_p, p }, TheoremParams::T21 { p: q, elliptic, lambda_p: l, m_list }) => {
            unit(*elliptic) && p == q && lambda_p == l && all_one(m_list)
        }
        (ExtremalMap::F1 { lambda_p, p }, TheoremParams::BaselineA { p: q, lambda_p: l, m_list }) => {
            p == q && lambda_p == l && all_one(m_list)
        }
        (ExtremalMap::F2 { lambda_list, p }, TheoremParams::T22 { p: q, elliptic, lambda_list: l, m_p }) => {
            unit(*elliptic) && p == q && lambda_list == l && *m_p == 1.0
        }
        (ExtremalMap::F2 { lambda_list, p }, TheoremParams::BaselineB { p: q, lambda_list: l, m_p }) => {
            p == q && lambda_list == l && *m_p == 1.0
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{ext:?} is not the sharp configuration of {}",
            params.variant_name()
        )))
    }
}

fn min_jacobian_on_circle(ext: &ExtremalMap, r: f64) -> f64 {
    (0..SCAN_ANGLES)
        .map(|j| {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / SCAN_ANGLES as f64);
            ext.distortions(z).map(|d| d.jacobian).unwrap_or(f64::NAN)
        })
        .fold(f64::INFINITY, f64::min)
}

/// First radius where `min_θ J_F` reaches zero, i.e. where `λ_F` vanishes.
fn first_jacobian_zero(ext: &ExtremalMap) -> Result<Option<f64>> {
    let steps = (SCAN_MAX / SCAN_STEP).round() as usize;
    let mut prev = 0.0;
    for i in 1..=steps {
        let r = (i as f64 * SCAN_STEP).min(SCAN_MAX);
        if min_jacobian_on_circle(ext, r) <= 0.0 {
            let root = bisect(|s| min_jacobian_on_circle(ext, s), prev, r, 200)?;
            return Ok(Some(root.map_or(r, |root| root.root)));
        }
        prev = r;
    }
    Ok(None)
}

/// Probes an extremal function just inside and just outside a sharp radius.
///
/// Evidence of failure is either a grid collision / vanishing `λ_F` in a disk
/// `𝔻_{R(1+ε)}`, or a zero of `min_θ J_F` found by a radial scan (step 1e-3,
/// refined by bisection). `solved` must be the sharp configuration of `ext`.
pub fn sharpness_probe(ext: &ExtremalMap, solved: &SolveRecord, eps_list: &[f64]) -> Result<SharpnessReport> {
    check_configuration(ext, &solved.params)?;
    let radius = solved.result.radius;
    let inner = check_injectivity(ext, radius * INNER_FACTOR, INJECTIVITY_GRID, COLLISION_TOL)?;
    let mut observed = (!inner.passed).then_some(radius * INNER_FACTOR);
    let mut note = |r: f64| observed = Some(observed.map_or(r, |o: f64| o.min(r)));
    for &eps in eps_list {
        let outer = radius * (1.0 + eps);
        if outer < SCAN_MAX && !check_injectivity(ext, outer, INJECTIVITY_GRID, COLLISION_TOL)?.passed {
            note(outer);
        }
    }
    if let Some(r) = first_jacobian_zero(ext)? {
        note(r);
    }
    let probe = radius.min(BOUNDARY_PROBE);
    let boundary_min_modulus = (0..BOUNDARY_SAMPLES)
        .map(|j| {
            let z = Complex64::from_polar(probe, std::f64::consts::TAU * j as f64 / BOUNDARY_SAMPLES as f64);
            ext.eval(z).map(|w| w.norm())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let schlicht = solved.result.schlicht_radius;
    Ok(SharpnessReport {
        theorem_radius: radius,
        observed_failure_radius: observed,
        boundary_min_modulus,
        schlicht_radius_claimed: schlicht,
        inner_injectivity_passed: inner.passed,
        passed: inner.passed
            && observed.map_or(true, |o| o >= radius * INNER_FACTOR)
            && boundary_min_modulus >= schlicht - 1e-8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::EllipticParams;
    use crate::radii::solve;

    fn record(params: TheoremParams) -> SolveRecord {
        let res = solve(&params).unwrap();
        SolveRecord::new(params, res)
    }

    #[test]
    fn f2_degenerates_at_its_radius() {
        let ext = ExtremalMap::f2(vec![1.0], 2).unwrap();
        let rec = record(TheoremParams::T22 {
            p: 2,
            elliptic: EllipticParams::harmonic(),
            lambda_list: vec![1.0],
            m_p: 1.0,
        });
        let rep = sharpness_probe(&ext, &rec, &[1e-3, 1e-2]).unwrap();
        let crit = 1.0 / 3f64.sqrt();
        assert!((rep.observed_failure_radius.unwrap() - crit).abs() < 1e-8, "{rep:?}");
        assert!(rep.passed);
    }

    #[test]
    fn identity_never_fails() {
        let ext = ExtremalMap::f1(1.0, 1).unwrap();
        let rec = record(TheoremParams::BaselineA { p: 1, lambda_p: 1.0, m_list: vec![] });
        let rep = sharpness_probe(&ext, &rec, &[1e-2]).unwrap();
        assert_eq!(rep.observed_failure_radius, None);
        assert!(rep.passed);
    }

    #[test]
    fn mismatch_is_a_precondition_error() {
        let ext = ExtremalMap::f1(2.0, 2).unwrap();
        let rec = record(TheoremParams::T21 {
            p: 2,
            elliptic: EllipticParams::new(2.0, 0.0).unwrap(),
            lambda_p: 2.0,
            m_list: vec![1.0],
        });
        assert!(matches!(sharpness_probe(&ext, &rec, &[1e-2]), Err(Error::Precondition(_))));
    }
}
