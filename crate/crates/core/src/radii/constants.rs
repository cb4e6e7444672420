//! Closed-form constants and auxiliary functions of the radius theorems.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::EllipticParams;

const SQRT5: f64 = 2.23606797749979;
const SQRT10: f64 = 3.1622776601683795;

/// `K₁(M) = min{√(2M²−1), 4M/π}`.
pub fn k1_constant(m: f64) -> Result<f64> {
    if !(m >= 1.0) || !m.is_finite() {
        return Err(Error::Domain(format!("K1 requires M >= 1, got {m}")));
    }
    Ok((2.0 * m * m - 1.0).sqrt().min(4.0 * m / PI))
}

/// The `M` at which both branches of [`k1_constant`] coincide, `1/√(2 − 16/π²)`.
pub fn k1_crossover() -> f64 {
    1.0 / (2.0 - 16.0 / (PI * PI)).sqrt()
}

/// `φ(r) = Σ_{k=2}^p r^{2(k-1)} [(2k−1)K₁(M) + √(2M²−2)(2(k−1)r/√(1−r²) + r√(4−3r²+r⁴)/(1−r²)^{3/2})]`
/// with `M = m_list[k-2]`.
pub fn phi(r: f64, p: usize, m_list: &[f64]) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("phi requires 0 <= r < 1, got {r}")));
    }
    if m_list.len() + 1 != p.max(1) {
        return Err(Error::validation(format!("M_list must have p-1 = {} entries", p.saturating_sub(1))));
    }
    let one_minus = 1.0 - r * r;
    let tail = r * (4.0 - 3.0 * r * r + r.powi(4)).sqrt() / one_minus.powf(1.5);
    let mut sum = 0.0;
    for (k, &m) in (2..=p).zip(m_list) {
        let km1 = (k - 1) as f64;
        let growth = (2.0 * m * m - 2.0).max(0.0).sqrt() * (2.0 * km1 * r / one_minus.sqrt() + tail);
        sum += r.powi(2 * (k as i32 - 1)) * ((2 * k - 1) as f64 * k1_constant(m)? + growth);
    }
    Ok(sum)
}

/// Bound on `Λ_G` for a `(K, K')`-elliptic harmonic layer with `λ_G ≤ Λ`:
/// `(KΛ + √(K²Λ² + 4K'))/2`.
pub fn lambda_prime(elliptic: EllipticParams, lambda: f64) -> f64 {
    let k = elliptic.k();
    0.5 * (k * lambda + (k * k * lambda * lambda + 4.0 * elliptic.k_prime()).sqrt())
}

/// `(K²+1)λ² + 2K√K'λ + K'`.
pub fn distortion_quadratic(elliptic: EllipticParams, lambda: f64) -> f64 {
    let (k, kp) = (elliptic.k(), elliptic.k_prime());
    (k * k + 1.0) * lambda * lambda + 2.0 * k * kp.sqrt() * lambda + kp
}

/// Upper bound of `Σ_{n,k} ((n+k−1)² + (k−1)²)(|a_{n,k}|² + |b_{n,k}|²)`.
pub fn energy_bound(elliptic: EllipticParams, lambda: f64) -> f64 {
    0.5 * distortion_quadratic(elliptic, lambda)
}

/// Which coefficient estimate to evaluate. The `C*` variants are the
/// quasiregular (`K' = 0`) specialisations of `T23`, `T24`, `T25`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoeffTheorem {
    /// No normalisation at the origin.
    T23,
    /// `λ_F(0) = 1`.
    T24,
    /// `J_F(0) = 1`.
    T25,
    C1,
    C2,
    C3,
}

impl CoeffTheorem {
    fn base(self) -> (CoeffTheorem, bool) {
        match self {
            CoeffTheorem::C1 => (CoeffTheorem::T23, true),
            CoeffTheorem::C2 => (CoeffTheorem::T24, true),
            CoeffTheorem::C3 => (CoeffTheorem::T25, true),
            t => (t, false),
        }
    }

    /// The quasiregular counterpart.
    pub fn corollary(self) -> CoeffTheorem {
        match self.base().0 {
            CoeffTheorem::T23 => CoeffTheorem::C1,
            CoeffTheorem::T24 => CoeffTheorem::C2,
            _ => CoeffTheorem::C3,
        }
    }
}

/// Bound on `|a_{n,k}| + |b_{n,k}|`: `√B / D` with `B` the distortion quadratic
/// minus `{0, 1, 1/(K+K')}` and `D ∈ {n, √10, √5}` by regime.
pub fn coeff_bound(theorem: CoeffTheorem, elliptic: EllipticParams, lambda: f64, n: usize, k: usize) -> Result<f64> {
    let denominator = match (n, k) {
        (0, _) | (_, 0) => return Err(Error::validation("n and k start at 1")),
        (1, 1) => return Err(Error::UnsupportedRegime),
        (n, 1) => n as f64,
        (1, _) => SQRT5,
        _ => SQRT10,
    };
    let (base, quasiregular) = theorem.base();
    let elliptic = if quasiregular { elliptic.with_k_prime(0.0)? } else { elliptic };
    let offset = match base {
        CoeffTheorem::T24 => 1.0,
        CoeffTheorem::T25 => 1.0 / (elliptic.k() + elliptic.k_prime()),
        _ => 0.0,
    };
    let b = distortion_quadratic(elliptic, lambda) - offset;
    if b < 0.0 {
        return Err(Error::Hypothesis(format!(
            "(K²+1)λ²+2K√K′λ+K′ must be >= {offset} for {theorem:?}, got {}",
            b + offset
        )));
    }
    Ok(b.sqrt() / denominator)
}

/// `M₀ = π / (2·(2π² − 16)^{1/4})`, where the two branches of [`lambda0`] meet.
pub fn m0() -> f64 {
    PI / (2.0 * (2.0 * PI * PI - 16.0).powf(0.25))
}

/// `√2 / (√(M²−1) + √(M²+1))`.
pub fn lambda1(m: f64) -> Result<f64> {
    if !(m >= 1.0) {
        return Err(Error::Domain(format!("lambda1 requires M >= 1, got {m}")));
    }
    Ok(2f64.sqrt() / ((m * m - 1.0).sqrt() + (m * m + 1.0).sqrt()))
}

/// [`lambda1`] up to `M₀`, then `π/(4M)`.
pub fn lambda0(m: f64) -> Result<f64> {
    if m <= m0() {
        lambda1(m)
    } else {
        Ok(PI / (4.0 * m))
    }
}

pub(crate) fn inv_sqrt5() -> f64 {
    1.0 / SQRT5
}

pub(crate) fn inv_sqrt10() -> f64 {
    1.0 / SQRT10
}
