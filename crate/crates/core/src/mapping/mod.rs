//! Polyharmonic mappings on the unit disk.

mod empirical;
mod extremal;
mod random;
mod series;

pub use empirical::{empirical_constants, EmpiricalConstants, MEASUREMENT_RADIUS};
pub use extremal::ExtremalMap;
pub use random::{random_admissible, random_quasiregular, Normalization, RandomSpec};
pub use series::{sector_condition_holds, PolyharmonicMap};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rejects non-finite points and points with `|z| >= 1`.
pub fn check_point(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() || z.norm() >= 1.0 {
        return Err(Error::OutsideDisk { re: z.re, im: z.im });
    }
    Ok(())
}

/// Anything that can be evaluated and differentiated on the unit disk.
pub trait Mapping {
    fn eval(&self, z: Complex64) -> Result<Complex64>;

    /// Returns `(F_z, F_zbar)`.
    fn wirtinger(&self, z: Complex64) -> Result<(Complex64, Complex64)>;

    fn distortions(&self, z: Complex64) -> Result<DistortionTriple> {
        let (fz, fzbar) = self.wirtinger(z)?;
        Ok(DistortionTriple::from_wirtinger(fz, fzbar))
    }
}

impl<M: Mapping + ?Sized> Mapping for &M {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        (**self).eval(z)
    }

    fn wirtinger(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        (**self).wirtinger(z)
    }
}

/// Maximum distortion `Λ`, minimum distortion `λ` and Jacobian `J` at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistortionTriple {
    pub big_lambda: f64,
    pub small_lambda: f64,
    pub jacobian: f64,
}

impl DistortionTriple {
    pub fn from_wirtinger(fz: Complex64, fzbar: Complex64) -> Self {
        let (p, q) = (fz.norm(), fzbar.norm());
        DistortionTriple {
            big_lambda: p + q,
            small_lambda: (p - q).abs(),
            jacobian: fz.norm_sqr() - fzbar.norm_sqr(),
        }
    }
}

/// Ellipticity constants `(K, K')` of `‖Df‖² ≤ K·J_f + K'`.
///
/// The equivalent pointwise constants `c`, `d` of `|f_zbar| ≤ c|f_z| + d`
/// are derived on demand.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawElliptic", into = "RawElliptic")]
pub struct EllipticParams {
    k: f64,
    k_prime: f64,
}

#[derive(Serialize, Deserialize)]
struct RawElliptic {
    #[serde(rename = "K")]
    k: f64,
    #[serde(rename = "Kp")]
    k_prime: f64,
}

impl TryFrom<RawElliptic> for EllipticParams {
    type Error = Error;

    fn try_from(raw: RawElliptic) -> Result<Self> {
        EllipticParams::new(raw.k, raw.k_prime)
    }
}

impl From<EllipticParams> for RawElliptic {
    fn from(e: EllipticParams) -> Self {
        RawElliptic { k: e.k, k_prime: e.k_prime }
    }
}

impl EllipticParams {
    pub fn new(k: f64, k_prime: f64) -> Result<Self> {
        if !k.is_finite() || k < 1.0 {
            return Err(Error::validation(format!("K must be a finite real >= 1, got {k}")));
        }
        if !k_prime.is_finite() || k_prime < 0.0 {
            return Err(Error::validation(format!("K' must be a finite real >= 0, got {k_prime}")));
        }
        Ok(EllipticParams { k, k_prime })
    }

    /// The harmonic case `K = 1, K' = 0`.
    pub fn harmonic() -> Self {
        EllipticParams { k: 1.0, k_prime: 0.0 }
    }

    /// `K`-quasiregular, i.e. `K' = 0`.
    pub fn quasiregular(k: f64) -> Result<Self> {
        Self::new(k, 0.0)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn k_prime(&self) -> f64 {
        self.k_prime
    }

    pub fn c(&self) -> f64 {
        (self.k - 1.0) / (self.k + 1.0)
    }

    pub fn d(&self) -> f64 {
        self.k_prime.sqrt() / (1.0 + self.k)
    }

    pub fn with_k(self, k: f64) -> Result<Self> {
        Self::new(k, self.k_prime)
    }

    pub fn with_k_prime(self, k_prime: f64) -> Result<Self> {
        Self::new(self.k, k_prime)
    }
}

/// Polar sample points: the origin plus `radial` rings at
/// `r_max·i/radial_den` (`i = 1..=radial`), each with `angular` points.
pub(crate) fn polar_grid(
    r_max: f64,
    radial: usize,
    radial_den: f64,
    angular: usize,
) -> impl Iterator<Item = Complex64> {
    std::iter::once(Complex64::new(0.0, 0.0)).chain((1..=radial).flat_map(move |i| {
        let rho = r_max * i as f64 / radial_den;
        (0..angular).map(move |j| {
            Complex64::from_polar(rho, std::f64::consts::TAU * j as f64 / angular as f64)
        })
    }))
}
