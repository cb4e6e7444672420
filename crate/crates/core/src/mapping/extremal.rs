use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_point, Mapping, PolyharmonicMap};
use crate::error::{Error, Result};

/// Closed-form extremal functions of the sharp Landau-type radii.
///
/// * `F1(z) = Λ²z + (Λ³−Λ)·log(1 − z/Λ) − Σ_{k=2}^p |z|^{2(k-1)} z`, using the
///   principal branch of `log` (`Re(1 − z/Λ) > 0` on the disk since `Λ ≥ 1`).
/// * `F2(z) = z − Σ_{k=1}^{p-1} Λ_{p-k} |z|^{2k} z`, where
///   `lambda_list[j]` is the coefficient of `|z|^{2(j+1)} z`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ExtremalMap {
    F1 { lambda_p: f64, p: usize },
    F2 { lambda_list: Vec<f64>, p: usize },
}

impl ExtremalMap {
    pub fn f1(lambda_p: f64, p: usize) -> Result<Self> {
        let map = ExtremalMap::F1 { lambda_p, p };
        map.validate()?;
        Ok(map)
    }

    pub fn f2(lambda_list: Vec<f64>, p: usize) -> Result<Self> {
        let map = ExtremalMap::F2 { lambda_list, p };
        map.validate()?;
        Ok(map)
    }

    pub fn p(&self) -> usize {
        match self {
            ExtremalMap::F1 { p, .. } | ExtremalMap::F2 { p, .. } => *p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p() == 0 {
            return Err(Error::validation("p must be positive"));
        }
        match self {
            ExtremalMap::F1 { lambda_p, .. } => {
                if !(lambda_p.is_finite() && *lambda_p >= 1.0) {
                    return Err(Error::validation(format!("F1 requires Lambda_p >= 1, got {lambda_p}")));
                }
            }
            ExtremalMap::F2 { lambda_list, p } => {
                if lambda_list.len() != p - 1 {
                    return Err(Error::validation(format!(
                        "F2 requires {} Lambda values for p = {p}, got {}",
                        p - 1,
                        lambda_list.len()
                    )));
                }
                if lambda_list.iter().any(|l| !(l.is_finite() && *l >= 0.0)) {
                    return Err(Error::validation("F2 Lambda values must be finite and >= 0"));
                }
            }
        }
        Ok(())
    }

    /// `(m, coefficient)` pairs of the polynomial layers `coeff·|z|^{2m} z`.
    fn layers(&self) -> Vec<(usize, f64)> {
        match self {
            ExtremalMap::F1 { p, .. } => (1..*p).map(|m| (m, -1.0)).collect(),
            ExtremalMap::F2 { lambda_list, .. } => {
                lambda_list.iter().enumerate().map(|(j, &l)| (j + 1, -l)).collect()
            }
        }
    }

    /// `F2` written as a coefficient table: `a_{1,1} = 1`, `a_{1,k} = −Λ_{p−k+1}`.
    pub fn to_polyharmonic(&self) -> Option<PolyharmonicMap> {
        let ExtremalMap::F2 { lambda_list, p } = self else {
            return None;
        };
        let mut map = PolyharmonicMap::zero(*p, 1).ok()?;
        map.set_a(1, 1, Complex64::new(1.0, 0.0)).ok()?;
        for (j, &l) in lambda_list.iter().enumerate() {
            map.set_a(1, j + 2, Complex64::new(-l, 0.0)).ok()?;
        }
        Some(map)
    }
}

impl Mapping for ExtremalMap {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_point(z)?;
        self.validate()?;
        let rho2 = z.norm_sqr();
        let head = match self {
            ExtremalMap::F1 { lambda_p: l, .. } => {
                let l = *l;
                z * (l * l) + (Complex64::new(1.0, 0.0) - z / l).ln() * (l * l * l - l)
            }
            ExtremalMap::F2 { .. } => z,
        };
        Ok(self
            .layers()
            .into_iter()
            .fold(head, |acc, (m, coeff)| acc + z * (coeff * rho2.powi(m as i32))))
    }

    fn wirtinger(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        check_point(z)?;
        self.validate()?;
        let rho2 = z.norm_sqr();
        let one = Complex64::new(1.0, 0.0);
        let mut fz = match self {
            ExtremalMap::F1 { lambda_p: l, .. } => (one - z * *l) / (one - z / *l),
            ExtremalMap::F2 { .. } => one,
        };
        let mut fzbar = Complex64::new(0.0, 0.0);
        // |z|^{2m} z = z^{m+1} zbar^m
        for (m, coeff) in self.layers() {
            fz += coeff * (m + 1) as f64 * rho2.powi(m as i32);
            fzbar += z * z * (coeff * m as f64 * rho2.powi(m as i32 - 1));
        }
        Ok((fz, fzbar))
    }
}
