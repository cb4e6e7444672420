use num_complex::Complex64;
use polyharmonic_landau::mapping::{ExtremalMap, Mapping};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Adaptive Simpson on `[a, b]` for a complex integrand.
fn simpson(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Complex64 {
    fn rule(a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
        (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
    }
    fn go(
        f: &dyn Fn(f64) -> Complex64,
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = rule(a, m, fa, flm, fm);
        let right = rule(m, b, fm, frm, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.norm() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        go(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + go(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    go(f, a, b, fa, fm, fb, rule(a, b, fa, fm, fb), tol, 40)
}

/// `Λ ∫₀^z (1/Λ − ζ)/(1 − ζ/Λ) dζ − Σ_{k=2}^p |z|^{2(k−1)} z`, integrating along the segment.
fn f1_by_quadrature(lambda: f64, p: usize, z: Complex64) -> Complex64 {
    let integrand = |t: f64| {
        let zeta = z * t;
        (c(1.0 / lambda, 0.0) - zeta) / (c(1.0, 0.0) - zeta / lambda) * z
    };
    let layers: Complex64 = (2..=p).map(|k| z * z.norm_sqr().powi(k as i32 - 1)).sum();
    simpson(&integrand, 0.0, 1.0, 1e-14) * lambda - layers
}

#[test]
fn f1_matches_quadrature() {
    let pts = [c(0.25, 0.0), c(0.1, 0.3), c(-0.6, 0.2), c(0.0, -0.85), c(0.7, 0.6)];
    for (lambda, p) in [(2.0, 2), (1.0, 1), (1.5, 3), (4.0, 1)] {
        let f1 = ExtremalMap::f1(lambda, p).unwrap();
        for z in pts {
            let got = f1.eval(z).unwrap();
            let want = f1_by_quadrature(lambda, p, z);
            assert!((got - want).norm() <= 1e-10, "F1({lambda},{p}) at {z}: {got} vs {want}");
        }
    }
}

fn finite_difference(map: &dyn Mapping, z: Complex64, h: f64) -> (Complex64, Complex64) {
    let fx = (map.eval(z + h).unwrap() - map.eval(z - h).unwrap()) / (2.0 * h);
    let fy = (map.eval(z + c(0.0, h)).unwrap() - map.eval(z - c(0.0, h)).unwrap()) / (2.0 * h);
    let i = c(0.0, 1.0);
    ((fx - i * fy) * 0.5, (fx + i * fy) * 0.5)
}

#[test]
fn extremal_wirtinger_matches_finite_differences() {
    let maps = [
        ExtremalMap::f1(2.0, 2).unwrap(),
        ExtremalMap::f1(1.3, 4).unwrap(),
        ExtremalMap::f2(vec![1.0], 2).unwrap(),
        ExtremalMap::f2(vec![0.5, 2.0, 0.0], 4).unwrap(),
    ];
    for map in &maps {
        for j in 0..40 {
            let z = Complex64::from_polar(0.02 + 0.9 * j as f64 / 40.0, 0.7 * j as f64);
            let (fz, fzbar) = map.wirtinger(z).unwrap();
            let (gz, gzbar) = finite_difference(map, z, 1e-6);
            let scale = (fz.norm_sqr() + fzbar.norm_sqr()).sqrt().max(1e-300);
            let err = ((fz - gz).norm_sqr() + (fzbar - gzbar).norm_sqr()).sqrt() / scale;
            assert!(err <= 1e-6, "{map:?} at {z}: rel err {err}");
        }
    }
}

#[test]
fn f2_series_agrees_with_closed_form() {
    let f2 = ExtremalMap::f2(vec![0.3, 1.2], 3).unwrap();
    let table = f2.to_polyharmonic().unwrap();
    for z in [c(0.2, 0.1), c(-0.5, 0.4), c(0.0, 0.9)] {
        assert!((f2.eval(z).unwrap() - table.eval(z).unwrap()).norm() < 1e-15);
        let (a, b) = (f2.wirtinger(z).unwrap(), table.wirtinger(z).unwrap());
        assert!((a.0 - b.0).norm() < 1e-14 && (a.1 - b.1).norm() < 1e-14);
    }
}

#[test]
fn f2_lambda_profile() {
    // On the real axis F_z = 1 − 2r² and |F_zbar| = r² for Λ_list = [1], p = 2.
    let f2 = ExtremalMap::f2(vec![1.0], 2).unwrap();
    for i in 1..100 {
        let r = 0.0099 * i as f64;
        let d = f2.distortions(c(r, 0.0)).unwrap();
        assert!((d.small_lambda - ((1.0 - 2.0 * r * r).abs() - r * r).abs()).abs() < 1e-14);
    }
}

#[test]
fn outside_the_disk_is_an_error() {
    let f1 = ExtremalMap::f1(2.0, 2).unwrap();
    assert!(f1.eval(c(1.0, 0.0)).is_err());
    assert!(f1.wirtinger(c(0.8, 0.7)).is_err());
}
