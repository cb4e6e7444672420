//! Bracketing root finder.

use crate::error::{Error, Result};

/// Default bracket width at which refinement stops.
pub const ROOT_TOL: f64 = 1e-14;

const MAX_ITERATIONS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub root: f64,
    /// `|f(root)|`.
    pub residual: f64,
    pub iterations: usize,
    /// Final bracket; contains a sign change of `f`.
    pub bracket: (f64, f64),
}

fn eval<F: FnMut(f64) -> f64>(f: &mut F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { at: x })
    }
}

fn opposite(a: f64, b: f64) -> bool {
    (a < 0.0) != (b < 0.0)
}

/// Finds a root of `f` in `[lo, hi]`.
///
/// Returns `Ok(None)` when `f(lo)` and `f(hi)` have the same sign. Otherwise
/// the bracket is shrunk by secant steps that never leave it, falling back to
/// bisection whenever a step fails to halve the bracket, until its width is
/// below `tol`. The reported root is the bracket end with the smaller `|f|`.
pub fn find_root<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<Option<Root>> {
    if !(lo < hi) {
        return Err(Error::Domain(format!("empty bracket [{lo}, {hi}]")));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (eval(&mut f, a)?, eval(&mut f, b)?);
    let found = |x: f64, fx: f64, iterations: usize, bracket| Root { root: x, residual: fx.abs(), iterations, bracket };
    if fa == 0.0 {
        return Ok(Some(found(a, fa, 0, (a, a))));
    }
    if fb == 0.0 {
        return Ok(Some(found(b, fb, 0, (b, b))));
    }
    if !opposite(fa, fb) {
        return Ok(None);
    }

    let mut iterations = 0;
    let mut bisect_next = false;
    while b - a >= tol && iterations < MAX_ITERATIONS {
        iterations += 1;
        let width = b - a;
        let mid = a + 0.5 * width;
        let secant = a - fa * width / (fb - fa);
        let use_secant = !bisect_next && secant > a && secant < b;
        let x = if use_secant { secant } else { mid };
        let fx = eval(&mut f, x)?;
        if fx == 0.0 {
            return Ok(Some(found(x, fx, iterations, (x, x))));
        }
        let far = if opposite(fx, fa) {
            b = x;
            fb = fx;
            a
        } else {
            a = x;
            fa = fx;
            b
        };
        if use_secant && (far - x).abs() > tol {
            // step just past x toward the far end; one-sided secant convergence
            // otherwise leaves the far end fixed
            let y = x + 0.5 * tol * (far - x).signum();
            let fy = eval(&mut f, y)?;
            iterations += 1;
            if fy == 0.0 {
                return Ok(Some(found(y, fy, iterations, (y, y))));
            }
            if opposite(fy, fx) {
                (a, fa, b, fb) = if y > x { (x, fx, y, fy) } else { (y, fy, x, fx) };
            } else if y > x {
                a = y;
                fa = fy;
            } else {
                b = y;
                fb = fy;
            }
        }
        bisect_next = b - a > 0.5 * width;
    }
    let (root, fr) = if fa.abs() <= fb.abs() { (a, fa) } else { (b, fb) };
    Ok(Some(found(root, fr, iterations, (a, b))))
}

/// Plain bisection for a fixed number of halvings.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, halvings: usize) -> Result<Option<Root>> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (eval(&mut f, a)?, eval(&mut f, b)?);
    if fa == 0.0 || fb == 0.0 {
        let x = if fa == 0.0 { a } else { b };
        return Ok(Some(Root { root: x, residual: 0.0, iterations: 0, bracket: (x, x) }));
    }
    if !opposite(fa, fb) {
        return Ok(None);
    }
    let mut iterations = 0;
    for _ in 0..halvings {
        let mid = a + 0.5 * (b - a);
        if mid <= a || mid >= b {
            break;
        }
        iterations += 1;
        let fm = eval(&mut f, mid)?;
        if fm == 0.0 {
            return Ok(Some(Root { root: mid, residual: 0.0, iterations, bracket: (mid, mid) }));
        }
        if opposite(fm, fa) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    let x = a + 0.5 * (b - a);
    let fx = eval(&mut f, x)?;
    Ok(Some(Root { root: x, residual: fx.abs(), iterations, bracket: (a, b) }))
}

/// First subinterval `[x_i, x_{i+1}]` of a uniform scan of `[lo, hi]` with
/// spacing `step` on which `f` changes sign.
pub fn first_sign_change<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, step: f64) -> Result<Option<(f64, f64)>> {
    if !(lo < hi) || !(step > 0.0) {
        return Err(Error::Domain(format!("bad scan [{lo}, {hi}] with step {step}")));
    }
    let mut x0 = lo;
    let mut f0 = eval(&mut f, x0)?;
    if f0 == 0.0 {
        return Ok(Some((x0, x0)));
    }
    let mut i = 1usize;
    while x0 < hi {
        let x1 = (lo + i as f64 * step).min(hi);
        let f1 = eval(&mut f, x1)?;
        if f1 == 0.0 || opposite(f0, f1) {
            return Ok(Some((x0, x1)));
        }
        x0 = x1;
        f0 = f1;
        i += 1;
    }
    Ok(None)
}
