// The extremal F2 loses local univalence exactly at its theorem radius.

use num_complex::Complex64;
use polyharmonic_landau::mapping::{EllipticParams, ExtremalMap, Mapping};
use polyharmonic_landau::radii::{solve, SolveRecord, TheoremParams};
use polyharmonic_landau::verify::sharpness_probe;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f2 = ExtremalMap::f2(vec![1.0], 2)?;
    let params = TheoremParams::T22 { p: 2, elliptic: EllipticParams::harmonic(), lambda_list: vec![1.0], m_p: 1.0 };
    let record = SolveRecord::new(params.clone(), solve(&params)?);
    let r2 = record.result.radius;

    for t in [0.9, 0.99, 1.0, 1.01, 1.1] {
        let d = f2.distortions(Complex64::new(r2 * t, 0.0))?;
        println!("r = {:.6}  λ_F = {:+.3e}  J_F = {:+.3e}", r2 * t, d.small_lambda, d.jacobian);
    }

    let rep = sharpness_probe(&f2, &record, &[1e-3, 1e-2, 5e-2])?;
    println!("theorem radius   {:.15}", rep.theorem_radius);
    println!("observed failure {:.15}", rep.observed_failure_radius.unwrap_or(f64::INFINITY));
    println!("min |F| on circle {:.15} (claimed {:.15})", rep.boundary_min_modulus, rep.schlicht_radius_claimed);
    assert!(rep.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
