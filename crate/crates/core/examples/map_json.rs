// Coefficient tables as JSON.

use num_complex::Complex64;
use polyharmonic_landau::mapping::{Mapping, PolyharmonicMap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let map = PolyharmonicMap::zero(2, 3)?
        .with_a(1, 1, Complex64::new(1.0, 0.0))?
        .with_b(3, 2, Complex64::new(0.25, -0.5))?;
    let json = serde_json::to_string(&map)?;
    println!("{json}");
    let back: PolyharmonicMap = serde_json::from_str(&json)?;
    let z = Complex64::new(0.3, 0.2);
    println!("F({z}) = {}", back.eval(z)?);
    assert_eq!(serde_json::to_string(&back)?, json);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
