use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::{sector_condition_holds, Mapping, PolyharmonicMap};

pub const PARSEVAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsevalReport {
    pub r: f64,
    pub nodes: usize,
    /// Trapezoid mean of `|F_z(re^{iθ})|²`.
    pub lhs: f64,
    /// Coefficient expansion, diagonal and cross terms.
    pub rhs: f64,
    /// Diagonal terms only; a lower bound for `rhs` under the argument condition.
    pub diagonal: f64,
    pub rel_error: f64,
    pub passed: bool,
}

/// Compares the circle mean of `|F_z|²` with its Fourier expansion.
///
/// On `|z| = r`, `F_z` has the mode `e^{i(n-1)θ}` with coefficient
/// `r^{n-1} Σ_k (n+k−1) r^{2(k-1)} a_{n,k}` and the mode `e^{-i(n+1)θ}` with
/// coefficient `r^{n-1} Σ_k (k−1) r^{2(k-1)} conj(b_{n,k})`; these modes are
/// distinct, so the mean is the sum of their squared moduli.
pub fn parseval_check(map: &PolyharmonicMap, r: f64, nodes: usize) -> Result<ParsevalReport> {
    if !(r > 0.0 && r <= 0.95) {
        return Err(Error::Domain(format!("Parseval radius must lie in (0, 0.95], got {r}")));
    }
    if nodes < 1024 {
        return Err(Error::validation(format!("nodes must be >= 1024, got {nodes}")));
    }
    if !sector_condition_holds(map) {
        return Err(Error::Precondition("coefficient table violates the argument condition".into()));
    }
    let lhs = (0..nodes)
        .map(|j| {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / nodes as f64);
            map.wirtinger(z).map(|(fz, _)| fz.norm_sqr())
        })
        .sum::<Result<f64>>()?
        / nodes as f64;

    let (mut rhs, mut diagonal) = (0.0, 0.0);
    for n in 1..=map.degree() {
        let radial = r.powi(2 * (n as i32 - 1));
        let (mut analytic, mut anti) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for k in 1..=map.p() {
            let w = r.powi(2 * (k as i32 - 1));
            let (a, b) = (map.a(n, k), map.b(n, k));
            let (wa, wb) = ((n + k - 1) as f64 * w, (k - 1) as f64 * w);
            analytic += a * wa;
            anti += b * wb;
            diagonal += radial * (wa * wa * a.norm_sqr() + wb * wb * b.norm_sqr());
        }
        rhs += radial * (analytic.norm_sqr() + anti.norm_sqr());
    }
    let rel_error = if rhs == 0.0 { lhs.abs() } else { (lhs - rhs).abs() / rhs };
    Ok(ParsevalReport { r, nodes, lhs, rhs, diagonal, rel_error, passed: rel_error <= PARSEVAL_TOL })
}
