use std::f64::consts::{FRAC_PI_4, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{empirical_constants, PolyharmonicMap};
use crate::error::{Error, Result};

/// Normalisation of the leading pair `(a_{1,1}, b_{1,1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `λ_F(0) = |a_{1,1}| − |b_{1,1}| = 1`.
    Lambda0One,
    /// `J_F(0) = |a_{1,1}|² − |b_{1,1}|² = 1`.
    Jacobian0One,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub p: usize,
    #[serde(rename = "N")]
    pub degree: usize,
    /// Magnitudes of `a_{n,k}, b_{n,k}` scale like `n^(-decay_exponent)`.
    #[serde(default = "default_decay")]
    pub decay_exponent: f64,
    pub normalization: Normalization,
    /// Upper bound of the magnitude of every coefficient other than the
    /// leading pair, before the decay factor.
    #[serde(default = "default_scale")]
    pub scale: f64,
    /// Upper bound of `|b_{1,1}|`.
    #[serde(default = "default_leading_b")]
    pub leading_b: f64,
    /// Use one reference angle for every `n` instead of one per `n`.
    #[serde(default)]
    pub shared_angle: bool,
}

fn default_decay() -> f64 {
    2.0
}

fn default_scale() -> f64 {
    0.08
}

fn default_leading_b() -> f64 {
    0.4
}

impl RandomSpec {
    pub fn new(p: usize, degree: usize, normalization: Normalization) -> Self {
        RandomSpec {
            p,
            degree,
            decay_exponent: default_decay(),
            normalization,
            scale: default_scale(),
            leading_b: default_leading_b(),
            shared_angle: false,
        }
    }

    pub fn shared_angle(mut self, shared: bool) -> Self {
        self.shared_angle = shared;
        self
    }

    pub fn scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }
}

/// Random coefficient table satisfying the argument condition.
///
/// Every coefficient with index `n` has its argument within `±π/4` of a
/// reference angle `θ_n`, so any two such coefficients differ in argument by
/// at most `π/2`. `a0 = 0`, and the leading pair is rescaled so the requested
/// normalisation holds exactly. Deterministic in `seed`.
///
/// # Panics
///
/// If `spec.p` or `spec.degree` is zero.
pub fn random_admissible(spec: &RandomSpec, seed: u64) -> PolyharmonicMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut map = PolyharmonicMap::zero(spec.p, spec.degree).expect("p >= 1 and N >= 1");

    let shared = rng.gen_range(0.0..TAU);
    let angles: Vec<f64> = (0..spec.degree)
        .map(|_| if spec.shared_angle { shared } else { rng.gen_range(0.0..TAU) })
        .collect();
    let draw = |rng: &mut ChaCha8Rng, n: usize, modulus: f64| {
        Complex64::from_polar(modulus, angles[n - 1] + rng.gen_range(-FRAC_PI_4..=FRAC_PI_4))
    };

    for n in 1..=spec.degree {
        let envelope = spec.scale * (n as f64).powf(-spec.decay_exponent);
        for k in 1..=spec.p {
            if (n, k) == (1, 1) {
                continue;
            }
            let (ma, mb) = (envelope * rng.gen::<f64>(), envelope * rng.gen::<f64>());
            let a = draw(&mut rng, n, ma);
            let b = draw(&mut rng, n, mb);
            map.set_a(n, k, a).expect("finite");
            map.set_b(n, k, b).expect("finite");
        }
    }

    let b_mod = spec.leading_b * rng.gen::<f64>();
    let a_mod = match spec.normalization {
        Normalization::Lambda0One => 1.0 + b_mod,
        Normalization::Jacobian0One => (1.0 + b_mod * b_mod).sqrt(),
    };
    let a11 = draw(&mut rng, 1, a_mod);
    let b11 = draw(&mut rng, 1, b_mod);
    map.set_a(1, 1, a11).expect("finite");
    map.set_b(1, 1, b11).expect("finite");
    map.mark_sector_ok();
    map
}

const QUASIREGULAR_RETRIES: u64 = 16;

/// Like [`random_admissible`], but resamples until the map is sense-preserving
/// with nowhere-vanishing `λ_F` on the measurement grid.
///
/// Attempt 0 reproduces `random_admissible(spec, seed)` exactly.
pub fn random_quasiregular(spec: &RandomSpec, seed: u64, grid_n: usize) -> Result<PolyharmonicMap> {
    for attempt in 0..QUASIREGULAR_RETRIES {
        let map = random_admissible(spec, seed ^ (attempt << 40));
        let emp = empirical_constants(&map, grid_n)?;
        if emp.sense_preserving && emp.k_emp.is_some() {
            return Ok(map);
        }
    }
    Err(Error::Precondition(format!(
        "no sense-preserving sample after {QUASIREGULAR_RETRIES} attempts (seed {seed})"
    )))
}
