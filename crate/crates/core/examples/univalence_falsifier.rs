// Grid injectivity check inside a guaranteed radius, and on a map that is
// visibly not injective.

use num_complex::Complex64;
use polyharmonic_landau::mapping::{
    empirical_constants, random_quasiregular, EllipticParams, Normalization, PolyharmonicMap, RandomSpec,
};
use polyharmonic_landau::radii::{solve_t27, TheoremParams};
use polyharmonic_landau::verify::{check_injectivity, COLLISION_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RandomSpec::new(3, 6, Normalization::Jacobian0One);
    let map = random_quasiregular(&spec, 11, 128)?;
    let emp = empirical_constants(&map, 128)?;
    let params = TheoremParams::T27 {
        p: 3,
        elliptic: EllipticParams::quasiregular(emp.k_emp.expect("sense-preserving"))?,
        lambda: emp.lambda_sup,
    };
    let r = 0.999 * solve_t27(&params)?.radius;
    let rep = check_injectivity(&map, r, 128, COLLISION_TOL)?;
    println!("random map, r = {r:.6}: passed = {}, closest images {:.3e}", rep.passed, rep.min_pair_separation);
    assert!(rep.passed);

    // z² identifies z and −z.
    let square = PolyharmonicMap::zero(1, 2)?.with_a(2, 1, Complex64::new(1.0, 0.0))?;
    let rep = check_injectivity(&square, 0.5, 64, COLLISION_TOL)?;
    if let Some((z1, z2)) = rep.collision_witness {
        println!("z²: F({z1:.4}) = F({z2:.4})");
    }
    assert!(!rep.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
