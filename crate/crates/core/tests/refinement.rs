// Doubling the grid must not move the grid-measured quantities by more than 1%.

use polyharmonic_landau::mapping::{empirical_constants, random_quasiregular, EllipticParams, ExtremalMap, Normalization, RandomSpec};
use polyharmonic_landau::radii::{solve, solve_t27, TheoremParams};
use polyharmonic_landau::verify::suite::Manifest;
use polyharmonic_landau::verify::{check_injectivity, check_schlicht, COLLISION_TOL};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn injectivity_min_lambda_is_grid_stable() {
    let m = Manifest::pinned();
    for (i, &seed) in m.coeff.seeds.iter().take(12).enumerate() {
        let p = m.coeff.p_cycle[i % m.coeff.p_cycle.len()];
        let map = random_quasiregular(&RandomSpec::new(p, m.coeff.degree, Normalization::Jacobian0One), seed, 128).unwrap();
        let emp = empirical_constants(&map, 128).unwrap();
        let params = TheoremParams::T27 { p, elliptic: EllipticParams::quasiregular(emp.k_emp.unwrap()).unwrap(), lambda: emp.lambda_sup };
        let r = 0.999 * solve_t27(&params).unwrap().radius;
        let coarse = check_injectivity(&map, r, 64, COLLISION_TOL).unwrap();
        let fine = check_injectivity(&map, r, 128, COLLISION_TOL).unwrap();
        assert!(rel(coarse.min_small_lambda, fine.min_small_lambda) < 0.01, "seed {seed}");

        let coarse = empirical_constants(&map, 64).unwrap();
        assert!(rel(coarse.lambda_sup, emp.lambda_sup) < 0.01, "seed {seed}");
    }
}

#[test]
fn boundary_modulus_is_grid_stable() {
    for case in Manifest::pinned().sharpness.cases {
        let res = solve(&case.theorem).unwrap();
        let r = res.radius.min(0.99);
        let coarse = check_schlicht(&case.extremal, r, 0.0, 4096).unwrap();
        let fine = check_schlicht(&case.extremal, r, 0.0, 8192).unwrap();
        assert!(rel(coarse.boundary_min_modulus, fine.boundary_min_modulus) < 0.01, "{}", case.name);
    }
    let f1 = ExtremalMap::f1(2.0, 2).unwrap();
    let a = check_schlicht(&f1, 0.3, 0.0, 4096).unwrap();
    let b = check_schlicht(&f1, 0.3, 0.0, 8192).unwrap();
    assert!(rel(a.boundary_min_modulus, b.boundary_min_modulus) < 0.01);
}
