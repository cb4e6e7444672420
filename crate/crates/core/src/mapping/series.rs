use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_point, Mapping};
use crate::error::{Error, Result};

/// Truncated polyharmonic series
/// `F(z) = a0 + Σ_{k=1}^p |z|^{2(k-1)} Σ_{n=1}^N (a_{n,k} z^n + conj(b_{n,k} z^n))`.
///
/// Layer `k` is the harmonic mapping `G_{p-k+1} = h_k + conj(g_k)`. All
/// statements made about a map by this crate refer to the truncated object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MapJson", into = "MapJson")]
pub struct PolyharmonicMap {
    p: usize,
    degree: usize,
    a0: Complex64,
    // layer-major: index (k-1)*degree + (n-1)
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    sector_ok: bool,
}

impl PolyharmonicMap {
    /// All-zero map of order `p` and truncation degree `degree`.
    pub fn zero(p: usize, degree: usize) -> Result<Self> {
        if p == 0 || degree == 0 {
            return Err(Error::validation("p and N must both be positive"));
        }
        let zeros = vec![Complex64::new(0.0, 0.0); p * degree];
        Ok(PolyharmonicMap {
            p,
            degree,
            a0: Complex64::new(0.0, 0.0),
            a: zeros.clone(),
            b: zeros,
            sector_ok: false,
        })
    }

    /// `F(z) = z`.
    pub fn identity() -> Self {
        let mut m = Self::zero(1, 1).expect("positive sizes");
        m.a[0] = Complex64::new(1.0, 0.0);
        m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    pub fn sector_ok(&self) -> bool {
        self.sector_ok
    }

    fn index(&self, n: usize, k: usize) -> Result<usize> {
        if n == 0 || n > self.degree || k == 0 || k > self.p {
            return Err(Error::validation(format!(
                "coefficient index (n={n}, k={k}) outside 1..={} x 1..={}",
                self.degree, self.p
            )));
        }
        Ok((k - 1) * self.degree + (n - 1))
    }

    pub fn a(&self, n: usize, k: usize) -> Complex64 {
        self.index(n, k).map(|i| self.a[i]).unwrap_or_default()
    }

    pub fn b(&self, n: usize, k: usize) -> Complex64 {
        self.index(n, k).map(|i| self.b[i]).unwrap_or_default()
    }

    pub fn set_a0(&mut self, v: Complex64) -> Result<()> {
        check_finite(v)?;
        self.a0 = v;
        Ok(())
    }

    /// Setting a coefficient clears `sector_ok`.
    pub fn set_a(&mut self, n: usize, k: usize, v: Complex64) -> Result<()> {
        check_finite(v)?;
        let i = self.index(n, k)?;
        self.a[i] = v;
        self.sector_ok = false;
        Ok(())
    }

    pub fn set_b(&mut self, n: usize, k: usize, v: Complex64) -> Result<()> {
        check_finite(v)?;
        let i = self.index(n, k)?;
        self.b[i] = v;
        self.sector_ok = false;
        Ok(())
    }

    pub fn with_a(mut self, n: usize, k: usize, v: Complex64) -> Result<Self> {
        self.set_a(n, k, v)?;
        Ok(self)
    }

    pub fn with_b(mut self, n: usize, k: usize, v: Complex64) -> Result<Self> {
        self.set_b(n, k, v)?;
        Ok(self)
    }

    /// Checks the argument condition on the coefficient table and records the
    /// outcome in `sector_ok`.
    pub fn verify_sector(&mut self) -> bool {
        self.sector_ok = sector_condition_holds(self);
        self.sector_ok
    }

    pub(crate) fn mark_sector_ok(&mut self) {
        self.sector_ok = true;
    }

    fn layer_a(&self, k: usize) -> &[Complex64] {
        &self.a[(k - 1) * self.degree..k * self.degree]
    }

    fn layer_b(&self, k: usize) -> &[Complex64] {
        &self.b[(k - 1) * self.degree..k * self.degree]
    }

    /// `(h_k(z), g_k(z))`.
    pub fn layer_parts(&self, k: usize, z: Complex64) -> (Complex64, Complex64) {
        (series(self.layer_a(k), z), series(self.layer_b(k), z))
    }

    /// Iterates over `(n, k, a_{n,k}, b_{n,k})` in `(n, k)` order.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, usize, Complex64, Complex64)> + '_ {
        (1..=self.degree)
            .flat_map(move |n| (1..=self.p).map(move |k| (n, k)))
            .map(move |(n, k)| (n, k, self.a(n, k), self.b(n, k)))
    }

    // No domain check; callers have done it.
    fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let rho2 = z.norm_sqr();
        let mut weight = 1.0;
        let mut acc = self.a0;
        for k in 1..=self.p {
            let (h, g) = self.layer_parts(k, z);
            acc += (h + g.conj()) * weight;
            weight *= rho2;
        }
        acc
    }

    fn wirtinger_unchecked(&self, z: Complex64) -> (Complex64, Complex64) {
        let rho2 = z.norm_sqr();
        let zero = Complex64::new(0.0, 0.0);
        let (mut fz, mut fzbar) = (zero, zero);
        // weight = |z|^{2(k-1)}, prev = |z|^{2(k-2)}
        let mut weight = 1.0;
        let mut prev = 0.0;
        for k in 1..=self.p {
            let (a, b) = (self.layer_a(k), self.layer_b(k));
            fz += derivative(a, z) * weight;
            fzbar += derivative(b, z).conj() * weight;
            if k >= 2 {
                let layer = series(a, z) + series(b, z).conj();
                let s = (k - 1) as f64 * prev;
                fz += z.conj() * layer * s;
                fzbar += z * layer * s;
            }
            prev = weight;
            weight *= rho2;
        }
        (fz, fzbar)
    }
}

impl Mapping for PolyharmonicMap {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_point(z)?;
        Ok(self.eval_unchecked(z))
    }

    fn wirtinger(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        check_point(z)?;
        Ok(self.wirtinger_unchecked(z))
    }
}

fn check_finite(v: Complex64) -> Result<()> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(())
    } else {
        Err(Error::validation("coefficients must be finite"))
    }
}

/// `Σ_{n>=1} c_n z^n` by Horner's rule.
fn series(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c) * z
}

/// `Σ_{n>=1} n c_n z^{n-1}` by Horner's rule.
fn derivative(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .enumerate()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, (i, &c)| acc * z + c * (i + 1) as f64)
}

/// Argument condition on same-index coefficients: every pair of nonzero
/// `a_{n,k1}, a_{n,k2}` and every pair `b_{n,k3}, a_{n,k4}` is within `π/2`
/// in argument. Equivalent to `Re(x·conj(y)) >= 0` for each such pair.
pub fn sector_condition_holds(map: &PolyharmonicMap) -> bool {
    let within = |x: Complex64, y: Complex64| (x * y.conj()).re >= -1e-14 * x.norm() * y.norm();
    (1..=map.degree).all(|n| {
        let a: Vec<_> = (1..=map.p).map(|k| map.a(n, k)).filter(|c| c.norm() > 0.0).collect();
        let b: Vec<_> = (1..=map.p).map(|k| map.b(n, k)).filter(|c| c.norm() > 0.0).collect();
        a.iter().all(|&x| a.iter().all(|&y| within(x, y)))
            && b.iter().all(|&x| a.iter().all(|&y| within(x, y)))
    })
}

/// Interchange format:
/// `{p, N, a0:[re,im], a:[[n,k,re,im],...], b:[[n,k,re,im],...]}`;
/// absent entries are zero.
#[derive(Serialize, Deserialize)]
struct MapJson {
    p: usize,
    #[serde(rename = "N")]
    degree: usize,
    #[serde(default)]
    a0: [f64; 2],
    #[serde(default)]
    a: Vec<(usize, usize, f64, f64)>,
    #[serde(default)]
    b: Vec<(usize, usize, f64, f64)>,
}

impl TryFrom<MapJson> for PolyharmonicMap {
    type Error = Error;

    fn try_from(raw: MapJson) -> Result<Self> {
        let mut map = PolyharmonicMap::zero(raw.p, raw.degree)?;
        map.set_a0(Complex64::new(raw.a0[0], raw.a0[1]))?;
        let mut seen_a = vec![false; map.a.len()];
        let mut seen_b = vec![false; map.b.len()];
        for (entries, seen, is_a) in [(&raw.a, &mut seen_a, true), (&raw.b, &mut seen_b, false)] {
            for &(n, k, re, im) in entries {
                let i = map.index(n, k)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::validation(format!("duplicate coefficient entry (n={n}, k={k})")));
                }
                let v = Complex64::new(re, im);
                if is_a {
                    map.set_a(n, k, v)?;
                } else {
                    map.set_b(n, k, v)?;
                }
            }
        }
        map.verify_sector();
        Ok(map)
    }
}

impl From<PolyharmonicMap> for MapJson {
    fn from(m: PolyharmonicMap) -> Self {
        let nonzero = |c: Complex64| c != Complex64::new(0.0, 0.0);
        let a = m.coefficients().filter(|e| nonzero(e.2)).map(|(n, k, a, _)| (n, k, a.re, a.im)).collect();
        let b = m.coefficients().filter(|e| nonzero(e.3)).map(|(n, k, _, b)| (n, k, b.re, b.im)).collect();
        MapJson { p: m.p, degree: m.degree, a0: [m.a0.re, m.a0.im], a, b }
    }
}
