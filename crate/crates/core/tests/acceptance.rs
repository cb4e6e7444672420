// Acceptance criteria. Runs without the libtest harness so that every
// criterion prints exactly one PASS/FAIL line; exits non-zero on any failure.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polyharmonic_landau::mapping::{
    empirical_constants, random_admissible, random_quasiregular, EllipticParams, ExtremalMap, Mapping, Normalization,
    PolyharmonicMap, RandomSpec,
};
use polyharmonic_landau::radii::{
    baseline_te, coeff_bound, lambda0, lambda1, m0, solve, solve_t22, solve_t27, CoeffTheorem, RadiusResult,
    TheoremParams,
};
use polyharmonic_landau::verify::suite::Manifest;
use polyharmonic_landau::verify::{
    check_coeff_bounds, check_injectivity, check_schlicht, parseval_check, COLLISION_TOL,
};

const GRID_P: [usize; 4] = [1, 2, 3, 5];
const GRID_K: [f64; 3] = [1.0, 2.0, 5.0];
const GRID_KP: [f64; 3] = [0.0, 1.0, 4.0];
const GRID_V: [f64; 3] = [1.0, 1.5, 2.0];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn solved(params: &TheoremParams) -> Result<RadiusResult, String> {
    solve(params).map_err(|e| format!("{params:?}: {e}"))
}

fn elliptic(k: f64, kp: f64) -> EllipticParams {
    EllipticParams::new(k, kp).expect("grid values are valid")
}

// 1 -------------------------------------------------------------------------

fn closed_form_constants() -> Outcome {
    let r = baseline_te(elliptic(1.0, 0.0), 1.0).map_err(|e| e.to_string())?;
    ensure(r.radius == 0.5, || format!("radius {} != 0.5", r.radius))?;
    let sigma = 1.0 - 2f64.ln();
    let err = (r.schlicht_radius - sigma).abs();
    ensure(err <= 1e-12, || format!("σ5 off by {err:e}"))?;
    Ok(format!("radius = {}, |σ5 − (1 − ln 2)| = {err:.1e}", r.radius))
}

// 2 -------------------------------------------------------------------------

fn crossover_constant() -> Outcome {
    let independent = PI / (2.0 * (2.0 * PI * PI - 16.0).powf(0.25));
    let m = m0();
    ensure((m - independent).abs() <= 1e-15, || format!("m0() = {m} vs {independent}"))?;
    ensure((m - 1.1296).abs() <= 5e-4, || format!("M0 = {m} not within 5e-4 of 1.1296"))?;
    let left = lambda1(m).map_err(|e| e.to_string())?;
    let right = PI / (4.0 * m);
    ensure((left - right).abs() <= 1e-9, || format!("branches differ by {:e}", (left - right).abs()))?;
    let l0 = lambda0(m).map_err(|e| e.to_string())?;
    ensure((l0 - left).abs() <= 1e-9, || "λ0(M0) disagrees with its branches".into())?;
    Ok(format!("M0 = {m:.9}, branch gap {:.1e}", (left - right).abs()))
}

// 3 -------------------------------------------------------------------------

fn pinned_grid() -> Vec<TheoremParams> {
    let mut out = Vec::new();
    for p in GRID_P {
        for k in GRID_K {
            for kp in GRID_KP {
                let e = elliptic(k, kp);
                for v in GRID_V {
                    for m in GRID_V {
                        out.push(TheoremParams::T21 { p, elliptic: e, lambda_p: v, m_list: vec![m; p - 1] });
                        out.push(TheoremParams::T22 { p, elliptic: e, lambda_list: vec![v; p - 1], m_p: m });
                    }
                    out.push(TheoremParams::T26 { p, elliptic: e, lambda: v });
                    out.push(TheoremParams::T27 { p, elliptic: e, lambda: v });
                }
            }
        }
        for m in [1.05, 1.1, 1.2, 1.5, 2.0, 3.0] {
            out.push(TheoremParams::BaselineC { p, m });
            out.push(TheoremParams::BaselineD { p, m });
        }
    }
    out
}

fn residuals() -> Outcome {
    let grid = pinned_grid();
    let (mut worst, mut slowest, mut interior) = (0.0f64, Duration::ZERO, 0);
    let mut families = std::collections::BTreeSet::new();
    for params in &grid {
        let start = Instant::now();
        let r = solved(params)?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(took < Duration::from_millis(10), || format!("{params:?} took {took:?}"))?;
        if r.boundary_case {
            continue;
        }
        interior += 1;
        families.insert(params.variant_name());
        let f = params.equation(r.radius).map_err(|e| e.to_string())?.expect("equation-based variant");
        worst = worst.max(f.abs());
        ensure(f.abs() <= 1e-10, || format!("{params:?}: |equation(radius)| = {:e}", f.abs()))?;
    }
    ensure(interior >= 100, || format!("only {interior} interior solves"))?;
    ensure(families.len() == 6, || format!("families covered: {families:?}"))?;
    Ok(format!("{interior} interior solves of {}, max residual {worst:.1e}, slowest {slowest:?}", grid.len()))
}

// 4 -------------------------------------------------------------------------

fn bisect(f: impl Fn(f64) -> f64) -> f64 {
    let (mut lo, mut hi) = (1e-12, 1.0 - 1e-12);
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) * flo > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `r/(1−r) + Σ_{k=2}^p r^{2(k−1)}[(1/√5 + (2r−r²)/(√10(1−r)²)) + 2(k−1)(1/√5 + r/(√10(1−r)))]`
fn corollary_series(r: f64, p: usize) -> f64 {
    let (s5, s10) = (5f64.sqrt(), 10f64.sqrt());
    let mut s = r / (1.0 - r);
    for k in 2..=p {
        let w = r.powi(2 * (k as i32 - 1));
        s += w * ((1.0 / s5 + (2.0 * r - r * r) / (s10 * (1.0 - r).powi(2))) + 2.0 * (k - 1) as f64 * (1.0 / s5 + r / (s10 * (1.0 - r))));
    }
    s
}

fn corollary_tail(r: f64, p: usize) -> f64 {
    let (s5, s10) = (5f64.sqrt(), 10f64.sqrt());
    (1.0 - r).ln() + r - (2..=p).map(|k| r.powi(2 * (k as i32 - 1)) * (r / s5 + r * r / (s10 * (1.0 - r)))).sum::<f64>()
}

fn reductions() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    let mut cmp = |what: &str, a: f64, b: f64| -> Result<(), String> {
        let d = (a - b).abs();
        worst = worst.max(d);
        count += 1;
        ensure(d <= 1e-12, || format!("{what}: {a} vs {b}"))
    };
    let unit = elliptic(1.0, 0.0);
    for p in GRID_P {
        for v in GRID_V {
            for m in GRID_V {
                let a = solved(&TheoremParams::T21 { p, elliptic: unit, lambda_p: v, m_list: vec![m; p - 1] })?;
                let b = solved(&TheoremParams::BaselineA { p, lambda_p: v, m_list: vec![m; p - 1] })?;
                cmp("T21 vs A radius", a.radius, b.radius)?;
                cmp("T21 vs A schlicht", a.schlicht_radius, b.schlicht_radius)?;
                let a = solved(&TheoremParams::T22 { p, elliptic: unit, lambda_list: vec![v; p - 1], m_p: m })?;
                let b = solved(&TheoremParams::BaselineB { p, lambda_list: vec![v; p - 1], m_p: m })?;
                cmp("T22 vs B radius", a.radius, b.radius)?;
                cmp("T22 vs B schlicht", a.schlicht_radius, b.schlicht_radius)?;
            }
        }
        for k in GRID_K {
            for l in GRID_V {
                let q = elliptic(k, 0.0);
                let c4 = ((k * k + 1.0) * l * l - 1.0).sqrt();
                let r4 = bisect(|r| 1.0 - c4 * corollary_series(r, p));
                let got = solved(&TheoremParams::T26 { p, elliptic: q, lambda: l })?;
                cmp("T26 vs r4", got.radius, r4)?;
                cmp("T26 vs R4", got.schlicht_radius, r4 + c4 * corollary_tail(r4, p))?;

                let c6 = ((k * k + 1.0) * l * l - 1.0 / k).sqrt();
                let r6 = bisect(|r| 1.0 / k.sqrt() - c6 * corollary_series(r, p));
                let got = solved(&TheoremParams::T27 { p, elliptic: q, lambda: l })?;
                cmp("T27 vs r6", got.radius, r6)?;
                cmp("T27 vs R6", got.schlicht_radius, r6 / k.sqrt() + c6 * corollary_tail(r6, p))?;
            }
        }
    }
    for k in GRID_K {
        for l in GRID_V {
            let numerators = [
                (CoeffTheorem::T23, l * (k * k + 1.0).sqrt()),
                (CoeffTheorem::T24, ((k * k + 1.0) * l * l - 1.0).sqrt()),
                (CoeffTheorem::T25, ((k * k + 1.0) * l * l - 1.0 / k).sqrt()),
            ];
            for (theorem, numerator) in numerators {
                for (n, kk) in [(2, 1), (5, 1), (1, 2), (1, 4), (2, 2), (7, 5)] {
                    let d = match (n, kk) {
                        (n, 1) => n as f64,
                        (1, _) => 5f64.sqrt(),
                        _ => 10f64.sqrt(),
                    };
                    let got = coeff_bound(theorem, elliptic(k, 0.0), l, n, kk).map_err(|e| e.to_string())?;
                    cmp("coefficient bound", got, numerator / d)?;
                }
            }
        }
    }
    Ok(format!("{count} comparisons, max |Δ| = {worst:.1e}"))
}

// 5 -------------------------------------------------------------------------

fn p1_closed_forms() -> Outcome {
    let mut worst = 0.0f64;
    for k in GRID_K {
        for l in GRID_V {
            for kp in GRID_KP {
                let c = ((k * k + 1.0) * l * l + 2.0 * k * kp.sqrt() * l + kp - 1.0).sqrt();
                let r = solved(&TheoremParams::T26 { p: 1, elliptic: elliptic(k, kp), lambda: l })?;
                let d = (r.radius - 1.0 / (1.0 + c)).abs();
                worst = worst.max(d);
                ensure(d <= 1e-12, || format!("T26 K={k} K'={kp} λ={l}: {} vs {}", r.radius, 1.0 / (1.0 + c)))?;
            }
            let a = 1.0 / k.sqrt();
            let expected = a / (a + ((k * k + 1.0) * l * l - 1.0 / k).sqrt());
            let r = solved(&TheoremParams::T27 { p: 1, elliptic: elliptic(k, 0.0), lambda: l })?;
            let d = (r.radius - expected).abs();
            worst = worst.max(d);
            ensure(d <= 1e-12, || format!("T27 K={k} λ={l}: {} vs {expected}", r.radius))?;
        }
    }
    Ok(format!("max |Δ| = {worst:.1e}"))
}

// 6 -------------------------------------------------------------------------

fn monotonicity() -> Outcome {
    let lam = [1.0, 1.25, 1.5, 1.75, 2.0];
    let ks = [1.0, 1.5, 2.0, 3.0, 5.0];
    let kps = [0.0, 0.5, 1.0, 2.0, 4.0];
    let ps = [1usize, 2, 3, 4, 5];
    let radius = |jac: bool, p: usize, k: f64, kp: f64, l: f64| -> Result<f64, String> {
        let e = elliptic(k, kp);
        let params = if jac { TheoremParams::T27 { p, elliptic: e, lambda: l } } else { TheoremParams::T26 { p, elliptic: e, lambda: l } };
        Ok(solved(&params)?.radius)
    };
    let mut comparisons = 0;
    for jac in [false, true] {
        for (ip, &p) in ps.iter().enumerate() {
            for (ik, &k) in ks.iter().enumerate() {
                for (ikp, &kp) in kps.iter().enumerate() {
                    for (il, &l) in lam.iter().enumerate() {
                        let here = radius(jac, p, k, kp, l)?;
                        let steps = [
                            (il + 1 < lam.len()).then(|| (p, k, kp, lam[(il + 1).min(lam.len() - 1)])),
                            (ik + 1 < ks.len()).then(|| (p, ks[(ik + 1).min(ks.len() - 1)], kp, l)),
                            (ikp + 1 < kps.len()).then(|| (p, k, kps[(ikp + 1).min(kps.len() - 1)], l)),
                            (ip + 1 < ps.len()).then(|| (ps[(ip + 1).min(ps.len() - 1)], k, kp, l)),
                        ];
                        for (q, kk, kkp, ll) in steps.into_iter().flatten() {
                            let next = radius(jac, q, kk, kkp, ll)?;
                            comparisons += 1;
                            ensure(next < here, || {
                                format!("jac={jac}: ({p},{k},{kp},{l}) -> ({q},{kk},{kkp},{ll}) radius {here} -> {next}")
                            })?;
                        }
                    }
                }
            }
        }
    }
    ensure(comparisons >= 500, || format!("only {comparisons} comparisons"))?;
    Ok(format!("{comparisons} ordered comparisons, 0 violations"))
}

// 7, 8 ----------------------------------------------------------------------

fn measured_k(map: &PolyharmonicMap) -> Result<(f64, f64), String> {
    let emp = empirical_constants(map, 128).map_err(|e| e.to_string())?;
    let k = emp.k_emp.ok_or("λ_F vanishes on the grid")?;
    ensure(emp.sense_preserving, || "map is not sense-preserving".into())?;
    Ok((emp.lambda_sup, k.max(1.0)))
}

fn pinned_map(i: usize, seed: u64, norm: Normalization) -> Result<(usize, PolyharmonicMap), String> {
    let m = Manifest::pinned();
    let p = m.coeff.p_cycle[i % m.coeff.p_cycle.len()];
    let map = random_quasiregular(&RandomSpec::new(p, m.coeff.degree, norm), seed, 128).map_err(|e| e.to_string())?;
    Ok((p, map))
}

fn coefficient_bounds() -> Outcome {
    let start = Instant::now();
    let seeds = Manifest::pinned().coeff.seeds;
    ensure(seeds.len() == 50, || format!("{} seeds", seeds.len()))?;
    let mut checks = 0;
    for (i, &seed) in seeds.iter().enumerate() {
        for (norm, theorems) in [
            (Normalization::Lambda0One, [CoeffTheorem::T23, CoeffTheorem::T24]),
            (Normalization::Jacobian0One, [CoeffTheorem::T23, CoeffTheorem::T25]),
        ] {
            let (_, map) = pinned_map(i, seed, norm)?;
            let (lambda, k) = measured_k(&map)?;
            for theorem in theorems {
                let rep = check_coeff_bounds(&map, theorem, elliptic(k, 0.0), lambda).map_err(|e| e.to_string())?;
                checks += 1;
                ensure(rep.passed, || format!("seed {seed} {theorem:?}: {:?}", rep.violations))?;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("50 seeds, {checks} theorem checks, 0 violations, {took:.2?}"))
}

fn univalence_falsifier() -> Outcome {
    let start = Instant::now();
    let seeds = Manifest::pinned().coeff.seeds;
    let mut min_lambda = f64::INFINITY;
    for (i, &seed) in seeds.iter().enumerate() {
        let (p, map) = pinned_map(i, seed, Normalization::Jacobian0One)?;
        let (lambda, k) = measured_k(&map)?;
        let r6 = solve_t27(&TheoremParams::T27 { p, elliptic: elliptic(k, 0.0), lambda }).map_err(|e| e.to_string())?;
        let rep = check_injectivity(&map, 0.999 * r6.radius, 128, COLLISION_TOL).map_err(|e| e.to_string())?;
        ensure(rep.collision_witness.is_none(), || format!("seed {seed}: collision {:?}", rep.collision_witness))?;
        ensure(rep.min_small_lambda > 0.0, || format!("seed {seed}: min λ_F = {}", rep.min_small_lambda))?;
        min_lambda = min_lambda.min(rep.min_small_lambda);
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(120), || format!("took {took:?}"))?;
    Ok(format!("50 maps, no collisions, min λ_F = {min_lambda:.4}, {took:.2?}"))
}

// 9 -------------------------------------------------------------------------

fn sharpness() -> Outcome {
    let crit = 1.0 / 3f64.sqrt();
    let params = TheoremParams::T22 { p: 2, elliptic: elliptic(1.0, 0.0), lambda_list: vec![1.0], m_p: 1.0 };
    let r = solve_t22(&params).map_err(|e| e.to_string())?;
    ensure((r.radius - crit).abs() <= 1e-12, || format!("radius {} vs 1/√3", r.radius))?;

    // 1D root of the signed minimum distortion |F_z| − |F_zbar| along (0, 1).
    let f2 = ExtremalMap::f2(vec![1.0], 2).map_err(|e| e.to_string())?;
    let signed = |t: f64| {
        let (a, b) = f2.wirtinger(Complex64::new(t, 0.0)).expect("inside the disk");
        a.norm() - b.norm()
    };
    let mut x = 1e-3;
    while signed(x + 1e-3) > 0.0 {
        x += 1e-3;
    }
    let (mut lo, mut hi) = (x, x + 1e-3);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if signed(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let zero = 0.5 * (lo + hi);
    ensure((zero - crit).abs() <= 1e-8, || format!("λ_F2 vanishes at {zero}"))?;

    let big_r = 2.0 / (3.0 * 3f64.sqrt());
    let rep = check_schlicht(&f2, crit, big_r, 4096).map_err(|e| e.to_string())?;
    let gap = (rep.boundary_min_modulus - big_r).abs();
    ensure(gap <= 1e-8, || format!("min |F2| = {} vs R2 = {big_r}", rep.boundary_min_modulus))?;
    Ok(format!("|r − 1/√3| = {:.1e}, λ zero off by {:.1e}, |min|F| − R2| = {gap:.1e}", (r.radius - crit).abs(), (zero - crit).abs()))
}

// 10 ------------------------------------------------------------------------

fn derivatives() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let h = 1e-6;
    let i = Complex64::new(0.0, 1.0);
    let (mut worst, mut failures) = (0.0f64, 0);
    for m in 0..50u64 {
        let p = 1 + (m as usize % 4);
        let n = 2 + (m as usize % 5);
        let norm = if m % 2 == 0 { Normalization::Lambda0One } else { Normalization::Jacobian0One };
        let map = random_admissible(&RandomSpec::new(p, n, norm).scale(0.3), 7000 + m);
        for _ in 0..100 {
            let z = Complex64::from_polar(0.95 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU));
            let e = |w: Complex64| map.eval(w).expect("inside the disk");
            let fx = (e(z + h) - e(z - h)) / (2.0 * h);
            let fy = (e(z + i * h) - e(z - i * h)) / (2.0 * h);
            let (gz, gzbar) = ((fx - i * fy) * 0.5, (fx + i * fy) * 0.5);
            let (fz, fzbar) = map.wirtinger(z).map_err(|e| e.to_string())?;
            let scale = (fz.norm_sqr() + fzbar.norm_sqr()).sqrt();
            let err = ((fz - gz).norm_sqr() + (fzbar - gzbar).norm_sqr()).sqrt() / scale;
            worst = worst.max(err);
            if err > 1e-6 {
                failures += 1;
            }
        }
    }
    ensure(failures == 0, || format!("{failures} of 5000 points above 1e-6 (worst {worst:e})"))?;
    Ok(format!("5000 points, max relative error {worst:.1e}"))
}

// 11 ------------------------------------------------------------------------

fn parseval() -> Outcome {
    let suite = Manifest::pinned().parseval;
    ensure(suite.seeds.len() == 20, || format!("{} instances", suite.seeds.len()))?;
    let mut worst = 0.0f64;
    for (idx, &seed) in suite.seeds.iter().enumerate() {
        let p = suite.p_cycle[idx % suite.p_cycle.len()];
        let spec = RandomSpec::new(p, suite.degree, Normalization::Lambda0One).shared_angle(true);
        let map = random_admissible(&spec, seed);
        for r in [0.3, 0.6, 0.9] {
            let rep = parseval_check(&map, r, suite.nodes).map_err(|e| e.to_string())?;
            worst = worst.max(rep.rel_error);
            ensure(rep.rel_error <= 1e-8, || format!("seed {seed} r={r}: rel error {:e}", rep.rel_error))?;
        }
    }
    Ok(format!("60 evaluations, max rel error {worst:.1e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("closed-form constants", closed_form_constants),
        ("crossover constant M0", crossover_constant),
        ("solve residuals and timing", residuals),
        ("reduction identities", reductions),
        ("p=1 closed forms", p1_closed_forms),
        ("monotonicity", monotonicity),
        ("coefficient bounds", coefficient_bounds),
        ("univalence falsifier", univalence_falsifier),
        ("sharpness of F2", sharpness),
        ("Wirtinger derivatives", derivatives),
        ("Parseval identity", parseval),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {:>2}  {name:<28} {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name:<28} {why}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
