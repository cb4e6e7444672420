// CSV sweep of the Jacobian-normalised radius over K.

use polyharmonic_landau::cli::{write_sweep, Axis, ParamValues, SweepSpec, TheoremTag};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec {
        variant: TheoremTag::T27,
        axis: Axis::K,
        range: (1.0, 5.0, 9),
        fixed: ParamValues { p: Some(1), k_prime: Some(0.0), lambda: Some(1.0), ..Default::default() },
    };
    let mut csv = Vec::new();
    write_sweep(&spec, &mut csv)?;
    let text = String::from_utf8(csv)?;
    print!("{text}");
    let radii: Vec<f64> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert!(radii.windows(2).all(|w| w[1] < w[0]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
