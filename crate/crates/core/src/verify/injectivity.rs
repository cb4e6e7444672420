use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::{polar_grid, Mapping};

/// Image points closer than this count as a collision.
pub const COLLISION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InjectivityReport {
    pub radius_tested: f64,
    pub points: usize,
    /// Smallest `|F(z1) − F(z2)|` over grid pairs with `|z1 − z2| > 10·tol`.
    pub min_pair_separation: f64,
    pub collision_witness: Option<(Complex64, Complex64)>,
    pub min_small_lambda: f64,
    pub passed: bool,
}

/// Searches a polar grid in `𝔻_r` for two well-separated points with
/// (numerically) equal images, and records `min λ_F` on the grid.
///
/// The grid has `grid_n` rings at radii `r·i/(grid_n+1)` and `grid_n` angles
/// per ring, plus the origin, so every sample lies strictly inside `𝔻_r`.
pub fn check_injectivity<M: Mapping + ?Sized>(map: &M, r: f64, grid_n: usize, tol: f64) -> Result<InjectivityReport> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("injectivity radius must lie in (0, 1), got {r}")));
    }
    if grid_n < 32 {
        return Err(Error::validation(format!("grid_n must be >= 32, got {grid_n}")));
    }
    let mut samples = Vec::with_capacity(grid_n * grid_n + 1);
    let mut min_small_lambda = f64::INFINITY;
    for z in polar_grid(r, grid_n, (grid_n + 1) as f64, grid_n) {
        samples.push((z, map.eval(z)?));
        min_small_lambda = min_small_lambda.min(map.distortions(z)?.small_lambda);
    }
    let closest = closest_image_pair(&samples, 10.0 * tol);
    let (min_pair_separation, collision_witness) = match closest {
        Some((d, i, j)) => (d, (d < tol).then(|| (samples[i].0, samples[j].0))),
        None => (f64::INFINITY, None),
    };
    Ok(InjectivityReport {
        radius_tested: r,
        points: samples.len(),
        min_pair_separation,
        passed: collision_witness.is_none() && min_small_lambda > 0.0,
        collision_witness,
        min_small_lambda,
    })
}

/// Closest pair of images among samples whose preimages are more than
/// `guard` apart, by a sweep over images sorted by real part.
fn closest_image_pair(samples: &[(Complex64, Complex64)], guard: f64) -> Option<(f64, usize, usize)> {
    let mut order: Vec<usize> = (0..samples.len()).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (samples[i].1, samples[j].1);
        a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)).then(i.cmp(&j))
    });
    let valid = |i: usize, j: usize| (samples[i].0 - samples[j].0).norm() > guard;
    let mut best: Option<(f64, usize, usize)> = None;
    let consider = |i: usize, j: usize, best: &mut Option<(f64, usize, usize)>| {
        let d = (samples[i].1 - samples[j].1).norm();
        if best.map_or(true, |(b, _, _)| d < b) {
            *best = Some((d, i.min(j), i.max(j)));
        }
    };
    // seed with neighbours in sort order so the sweep window starts finite
    for w in order.windows(2) {
        if valid(w[0], w[1]) {
            consider(w[0], w[1], &mut best);
        }
    }
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            let bound = best.map_or(f64::INFINITY, |b| b.0);
            if samples[j].1.re - samples[i].1.re >= bound {
                break;
            }
            if valid(i, j) {
                consider(i, j, &mut best);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::PolyharmonicMap;

    #[test]
    fn identity_passes() {
        let rep = check_injectivity(&PolyharmonicMap::identity(), 0.9, 32, COLLISION_TOL).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.min_small_lambda, 1.0);
        assert_eq!(rep.points, 32 * 32 + 1);
    }

    #[test]
    fn even_map_collides() {
        let sq = PolyharmonicMap::zero(1, 2).unwrap().with_a(2, 1, Complex64::new(1.0, 0.0)).unwrap();
        let rep = check_injectivity(&sq, 0.5, 32, COLLISION_TOL).unwrap();
        assert!(!rep.passed);
        let (z1, z2) = rep.collision_witness.unwrap();
        assert!((z1 + z2).norm() < 1e-12, "{z1} {z2}");
    }

    #[test]
    fn closest_pair_matches_brute_force() {
        let m = PolyharmonicMap::zero(2, 3)
            .unwrap()
            .with_a(1, 1, Complex64::new(1.0, 0.0))
            .unwrap()
            .with_a(3, 1, Complex64::new(0.2, 0.1))
            .unwrap()
            .with_b(2, 2, Complex64::new(0.3, 0.0))
            .unwrap();
        let samples: Vec<_> = polar_grid(0.8, 12, 13.0, 12).map(|z| (z, m.eval(z).unwrap())).collect();
        let mut brute = f64::INFINITY;
        for i in 0..samples.len() {
            for j in i + 1..samples.len() {
                brute = brute.min((samples[i].1 - samples[j].1).norm());
            }
        }
        let (d, _, _) = closest_image_pair(&samples, 1e-8).unwrap();
        assert_eq!(d, brute);
    }

    #[test]
    fn argument_checks() {
        let id = PolyharmonicMap::identity();
        assert!(check_injectivity(&id, 1.0, 32, COLLISION_TOL).is_err());
        assert!(check_injectivity(&id, 0.5, 16, COLLISION_TOL).is_err());
    }
}
