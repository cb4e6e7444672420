// Coefficient estimates on a random admissible map, with hypotheses
// measured on a grid, and a deliberately broken copy.

use polyharmonic_landau::mapping::{random_quasiregular, EllipticParams, Normalization, RandomSpec};
use polyharmonic_landau::radii::{coeff_bound, CoeffTheorem};
use polyharmonic_landau::verify::{check_coeff_bounds, check_coeff_bounds_measured};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RandomSpec::new(2, 6, Normalization::Lambda0One);
    let map = random_quasiregular(&spec, 7, 128)?;
    let (emp, rep) = check_coeff_bounds_measured(&map, CoeffTheorem::T24, 128)?;
    let k = emp.k_emp.expect("sense-preserving map");
    println!("measured λ = {:.6}, K = {k:.6}", emp.lambda_sup);
    println!("energy {:.6} <= {:.6}, violations {}", rep.energy_lhs, rep.energy_rhs, rep.violations.len());
    assert!(rep.passed);

    let e = EllipticParams::quasiregular(k)?;
    let limit = coeff_bound(CoeffTheorem::T24, e, emp.lambda_sup, 2, 1)?;
    let a21 = map.a(2, 1);
    let mut broken = map.clone().with_a(2, 1, a21 / a21.norm() * (2.0 * limit))?;
    broken.verify_sector();
    let rep = check_coeff_bounds(&broken, CoeffTheorem::T24, e, emp.lambda_sup)?;
    for v in &rep.violations {
        println!("violation at ({}, {}): {:.6} > {:.6}", v.n, v.k, v.measured, v.bound);
    }
    assert!(!rep.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
