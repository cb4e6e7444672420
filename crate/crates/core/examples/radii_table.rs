// Univalence and schlicht radii for a handful of parameter points.

use polyharmonic_landau::mapping::EllipticParams;
use polyharmonic_landau::radii::{solve, TheoremParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = EllipticParams::new(2.0, 1.0)?;
    let cases = vec![
        TheoremParams::T21 { p: 2, elliptic: e, lambda_p: 1.0, m_list: vec![1.0] },
        TheoremParams::T22 { p: 2, elliptic: EllipticParams::harmonic(), lambda_list: vec![1.0], m_p: 1.0 },
        TheoremParams::T26 { p: 3, elliptic: e, lambda: 1.0 },
        TheoremParams::T27 { p: 3, elliptic: e, lambda: 1.0 },
        TheoremParams::BaselineC { p: 2, m: 1.2 },
        TheoremParams::BaselineD { p: 2, m: 1.5 },
        TheoremParams::BaselineE { elliptic: EllipticParams::harmonic(), lambda: 1.0 },
        TheoremParams::BaselineF { k: 4.0, lambda: 1.0 },
    ];
    println!("{:<10} {:>20} {:>20} {:>10}", "variant", "radius", "schlicht", "residual");
    for params in cases {
        let r = solve(&params)?;
        assert!(r.schlicht_radius > 0.0 && r.schlicht_radius < r.radius);
        println!("{:<10} {:>20.15} {:>20.15} {:>10.2e}", params.variant_name(), r.radius, r.schlicht_radius, r.residual);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
