// Circle mean of |F_z|² against its coefficient expansion.

use polyharmonic_landau::mapping::{random_admissible, Normalization, RandomSpec};
use polyharmonic_landau::verify::parseval_check;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RandomSpec::new(3, 6, Normalization::Lambda0One).shared_angle(true);
    let map = random_admissible(&spec, 5);
    for r in [0.3, 0.6, 0.9] {
        let rep = parseval_check(&map, r, 4096)?;
        println!(
            "r = {r}: quadrature {:.15}  expansion {:.15}  diagonal {:.15}  rel {:.1e}",
            rep.lhs, rep.rhs, rep.diagonal, rep.rel_error
        );
        assert!(rep.passed && rep.diagonal <= rep.rhs * (1.0 + 1e-12));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
