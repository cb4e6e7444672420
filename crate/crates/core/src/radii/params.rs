use serde::{Deserialize, Serialize};

use super::constants::{
    distortion_quadratic, inv_sqrt10, inv_sqrt5, k1_constant, lambda0, lambda1, lambda_prime, phi,
};
use crate::error::{Error, Result};
use crate::mapping::EllipticParams;

/// Inputs of one radius theorem.
///
/// List conventions: `m_list[k-2]` is `M_{p-k+1}` and `lambda_list[k-2]` is
/// `Λ_{p-k+1}` for `k = 2..=p`, so both have `p − 1` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum TheoremParams {
    /// Poly-elliptic harmonic, bounded layers and `λ_{G_p} ≤ Λ_p`.
    T21 {
        p: usize,
        elliptic: EllipticParams,
        #[serde(rename = "Lambda_p")]
        lambda_p: f64,
        #[serde(rename = "M_list")]
        m_list: Vec<f64>,
    },
    /// Poly-elliptic harmonic, `λ_{G_{p-k+1}} ≤ Λ_{p-k+1}` and `|G_p| ≤ M_p`.
    T22 {
        p: usize,
        elliptic: EllipticParams,
        #[serde(rename = "Lambda_list")]
        lambda_list: Vec<f64>,
        #[serde(rename = "M_p")]
        m_p: f64,
    },
    /// Elliptic polyharmonic with `λ_F(0) = 1`, `λ_F ≤ λ`.
    T26 { p: usize, elliptic: EllipticParams, lambda: f64 },
    /// Elliptic polyharmonic with `J_F(0) = 1`, `λ_F ≤ λ`.
    T27 { p: usize, elliptic: EllipticParams, lambda: f64 },
    /// Polyharmonic, `Λ_{G_p} ≤ Λ_p`.
    BaselineA {
        p: usize,
        #[serde(rename = "Lambda_p")]
        lambda_p: f64,
        #[serde(rename = "M_list")]
        m_list: Vec<f64>,
    },
    BaselineB {
        p: usize,
        #[serde(rename = "Lambda_list")]
        lambda_list: Vec<f64>,
        #[serde(rename = "M_p")]
        m_p: f64,
    },
    /// `|F| ≤ M`, `J_F(0) = 1`.
    BaselineC {
        p: usize,
        #[serde(rename = "M")]
        m: f64,
    },
    /// `Λ_F ≤ M`, `J_F(0) = 1`.
    BaselineD {
        p: usize,
        #[serde(rename = "M")]
        m: f64,
    },
    /// `(K, K')`-elliptic harmonic, `λ_f(0) = 1`, `λ_f ≤ λ`.
    BaselineE { elliptic: EllipticParams, lambda: f64 },
    /// Harmonic `K`-quasiregular, `J_f(0) = 1`, `λ_f ≤ λ`.
    BaselineF {
        #[serde(rename = "K")]
        k: f64,
        lambda: f64,
    },
}

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::validation("p must be >= 1"));
    }
    Ok(())
}

fn check_list(name: &str, list: &[f64], p: usize, min: f64) -> Result<()> {
    if list.len() + 1 != p {
        return Err(Error::validation(format!(
            "{name} must have p-1 = {} entries, got {}",
            p - 1,
            list.len()
        )));
    }
    if let Some(bad) = list.iter().find(|v| !(v.is_finite() && **v >= min)) {
        return Err(Error::validation(format!("{name} entries must be >= {min}, got {bad}")));
    }
    Ok(())
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::validation(format!("{name} must be > 0, got {v}")));
    }
    Ok(())
}

fn check_bound_m(name: &str, m: f64) -> Result<()> {
    if !(m.is_finite() && m >= 1.0) {
        return Err(Error::validation(format!("{name} must be >= 1, got {m}")));
    }
    Ok(())
}

/// `Σ_{k=2}^p [r^{2(k-1)}(1/√5 + (2r−r²)/(√10(1−r)²)) + 2(k−1)r^{2(k-1)}(1/√5 + r/(√10(1−r)))] + r/(1−r)`.
pub(crate) fn elliptic_bracket(r: f64, p: usize) -> f64 {
    let q = 1.0 - r;
    let layer = inv_sqrt5() + inv_sqrt10() * (2.0 * r - r * r) / (q * q);
    let cross = inv_sqrt5() + inv_sqrt10() * r / q;
    let tail: f64 = (2..=p)
        .map(|k| {
            let w = r.powi(2 * (k as i32 - 1));
            w * layer + 2.0 * (k - 1) as f64 * w * cross
        })
        .sum();
    r / q + tail
}

/// `ln(1−r) + r − Σ_{k=2}^p r^{2(k-1)}(r/√5 + r²/(√10(1−r)))`.
pub(crate) fn elliptic_coverage(r: f64, p: usize) -> f64 {
    let layer = r * inv_sqrt5() + r * r * inv_sqrt10() / (1.0 - r);
    let tail: f64 = (2..=p).map(|k| r.powi(2 * (k as i32 - 1)) * layer).sum();
    (-r).ln_1p() + r - tail
}

impl TheoremParams {
    pub fn variant_name(&self) -> &'static str {
        match self {
            TheoremParams::T21 { .. } => "T21",
            TheoremParams::T22 { .. } => "T22",
            TheoremParams::T26 { .. } => "T26",
            TheoremParams::T27 { .. } => "T27",
            TheoremParams::BaselineA { .. } => "BaselineA",
            TheoremParams::BaselineB { .. } => "BaselineB",
            TheoremParams::BaselineC { .. } => "BaselineC",
            TheoremParams::BaselineD { .. } => "BaselineD",
            TheoremParams::BaselineE { .. } => "BaselineE",
            TheoremParams::BaselineF { .. } => "BaselineF",
        }
    }

    pub fn p(&self) -> Option<usize> {
        match self {
            TheoremParams::T21 { p, .. }
            | TheoremParams::T22 { p, .. }
            | TheoremParams::T26 { p, .. }
            | TheoremParams::T27 { p, .. }
            | TheoremParams::BaselineA { p, .. }
            | TheoremParams::BaselineB { p, .. }
            | TheoremParams::BaselineC { p, .. }
            | TheoremParams::BaselineD { p, .. } => Some(*p),
            _ => None,
        }
    }

    pub fn elliptic(&self) -> EllipticParams {
        match self {
            TheoremParams::T21 { elliptic, .. }
            | TheoremParams::T22 { elliptic, .. }
            | TheoremParams::T26 { elliptic, .. }
            | TheoremParams::T27 { elliptic, .. }
            | TheoremParams::BaselineE { elliptic, .. } => *elliptic,
            TheoremParams::BaselineF { k, .. } => {
                EllipticParams::quasiregular(*k).unwrap_or_else(|_| EllipticParams::harmonic())
            }
            _ => EllipticParams::harmonic(),
        }
    }

    /// Whether the radius is the root of an equation (as opposed to a closed form).
    pub fn has_equation(&self) -> bool {
        !matches!(self, TheoremParams::BaselineE { .. } | TheoremParams::BaselineF { .. })
    }

    /// Checks the fields the variant uses and the variant's hypotheses.
    pub fn validate(&self) -> Result<()> {
        match self {
            TheoremParams::T21 { p, lambda_p, m_list, .. } | TheoremParams::BaselineA { p, lambda_p, m_list } => {
                check_p(*p)?;
                check_bound_m("Lambda_p", *lambda_p)?;
                check_list("M_list", m_list, *p, 1.0)
            }
            TheoremParams::T22 { p, lambda_list, m_p, .. } | TheoremParams::BaselineB { p, lambda_list, m_p } => {
                check_p(*p)?;
                check_bound_m("M_p", *m_p)?;
                check_list("Lambda_list", lambda_list, *p, 0.0)
            }
            TheoremParams::T26 { p, elliptic, lambda } => {
                check_p(*p)?;
                check_positive("lambda", *lambda)?;
                let q = distortion_quadratic(*elliptic, *lambda);
                if !(q > 1.0) {
                    return Err(Error::Hypothesis(format!("(K²+1)λ²+2K√K′λ+K′ > 1 does not hold (value {q})")));
                }
                Ok(())
            }
            TheoremParams::T27 { p, elliptic, lambda } => {
                check_p(*p)?;
                check_positive("lambda", *lambda)?;
                let q = distortion_quadratic(*elliptic, *lambda);
                let floor = 1.0 / (elliptic.k() + elliptic.k_prime());
                if !(q > floor) {
                    return Err(Error::Hypothesis(format!(
                        "(K²+1)λ²+2K√K′λ+K′ > 1/(K+K′) does not hold (value {q}, 1/(K+K′) = {floor})"
                    )));
                }
                Ok(())
            }
            TheoremParams::BaselineC { p, m } | TheoremParams::BaselineD { p, m } => {
                check_p(*p)?;
                if !(m.is_finite() && *m > 1.0) {
                    return Err(Error::Domain(format!("M must be > 1, got {m}")));
                }
                Ok(())
            }
            TheoremParams::BaselineE { lambda, .. } => check_positive("lambda", *lambda),
            TheoremParams::BaselineF { k, lambda } => {
                EllipticParams::quasiregular(*k)?;
                check_positive("lambda", *lambda)
            }
        }
    }

    /// Left-hand side of the radius equation at `r`; `None` for closed-form
    /// variants. Assumes validated parameters and `0 < r < 1`.
    pub fn equation(&self, r: f64) -> Result<Option<f64>> {
        let value = match self {
            TheoremParams::T21 { p, elliptic, lambda_p, m_list } => {
                t21_equation(lambda_prime(*elliptic, *lambda_p), *p, m_list, r)?
            }
            TheoremParams::BaselineA { p, lambda_p, m_list } => t21_equation(*lambda_p, *p, m_list, r)?,
            TheoremParams::T22 { elliptic, lambda_list, m_p, .. } => {
                let primes: Vec<f64> = lambda_list.iter().map(|&l| lambda_prime(*elliptic, l)).collect();
                t22_equation(&primes, *m_p, r)
            }
            TheoremParams::BaselineB { lambda_list, m_p, .. } => t22_equation(lambda_list, *m_p, r),
            TheoremParams::T26 { p, elliptic, lambda } => {
                let c = (distortion_quadratic(*elliptic, *lambda) - 1.0).sqrt();
                1.0 - c * elliptic_bracket(r, *p)
            }
            TheoremParams::T27 { p, elliptic, lambda } => {
                let kk = elliptic.k() + elliptic.k_prime();
                let c = (distortion_quadratic(*elliptic, *lambda) - 1.0 / kk).sqrt();
                1.0 / kk.sqrt() - c * elliptic_bracket(r, *p)
            }
            TheoremParams::BaselineC { p, m } => {
                let s = (m.powi(4) - 1.0).sqrt();
                let q = 1.0 - r;
                let (mut a, mut b) = (0.0, 0.0);
                for k in 1..*p {
                    let w = r.powi(2 * k as i32);
                    a += w;
                    b += k as f64 * w;
                }
                1.0 - s * ((2.0 * r - r * r) / (q * q) + a / (q * q) + 2.0 * b / q)
            }
            TheoremParams::BaselineD { p, m } => {
                let s = (m.powi(4) - 1.0).sqrt();
                let q = 1.0 - r;
                let layer = inv_sqrt5() + inv_sqrt10() * (2.0 * r - r * r) / (q * q);
                let cross = r * r * inv_sqrt5() + r.powi(3) * inv_sqrt10() / q;
                let (mut a, mut b) = (0.0, 0.0);
                for k in 1..*p {
                    a += r.powi(2 * k as i32) * layer;
                    b += k as f64 * r.powi(2 * (k as i32 - 1)) * cross;
                }
                1.0 - s * (r / q + a) - 2.0 * s * b
            }
            TheoremParams::BaselineE { .. } | TheoremParams::BaselineF { .. } => return Ok(None),
        };
        Ok(Some(value))
    }

    /// Schlicht-disk radius expression evaluated at the univalence radius `r`.
    pub fn schlicht(&self, r: f64) -> Result<f64> {
        Ok(match self {
            TheoremParams::T21 { p, elliptic, lambda_p, m_list } => {
                t21_schlicht(lambda_prime(*elliptic, *lambda_p), *p, m_list, r)?
            }
            TheoremParams::BaselineA { p, lambda_p, m_list } => t21_schlicht(*lambda_p, *p, m_list, r)?,
            TheoremParams::T22 { elliptic, lambda_list, m_p, .. } => {
                let primes: Vec<f64> = lambda_list.iter().map(|&l| lambda_prime(*elliptic, l)).collect();
                t22_schlicht(&primes, *m_p, r)
            }
            TheoremParams::BaselineB { lambda_list, m_p, .. } => t22_schlicht(lambda_list, *m_p, r),
            TheoremParams::T26 { p, elliptic, lambda } => {
                let c = (distortion_quadratic(*elliptic, *lambda) - 1.0).sqrt();
                r + c * elliptic_coverage(r, *p)
            }
            TheoremParams::T27 { p, elliptic, lambda } => {
                let kk = elliptic.k() + elliptic.k_prime();
                let c = (distortion_quadratic(*elliptic, *lambda) - 1.0 / kk).sqrt();
                r / kk.sqrt() + c * elliptic_coverage(r, *p)
            }
            TheoremParams::BaselineC { p, m } => {
                let s = (m.powi(4) - 1.0).sqrt();
                let layers: f64 = (1..*p).map(|k| 2.0 * r.powi(2 * k as i32) / (1.0 - r)).sum();
                lambda0(*m)? * r * (1.0 - s * r / (1.0 - r) - s * layers)
            }
            TheoremParams::BaselineD { p, m } => {
                let s = (m.powi(4) - 1.0).sqrt();
                let layers: f64 = (1..*p)
                    .map(|k| r.powi(2 * k as i32) * (inv_sqrt5() + r * inv_sqrt10() / (1.0 - r)))
                    .sum();
                lambda1(*m)? * r * (1.0 + s * ((r + (-r).ln_1p()) / r - layers))
            }
            TheoremParams::BaselineE { elliptic, lambda } => {
                let a = elliptic.k() * lambda + elliptic.k_prime().sqrt();
                r + a * (r + (a * r).ln())
            }
            TheoremParams::BaselineF { k, lambda } => {
                let a = lambda * k.powf(1.5);
                r / k.sqrt() + k * lambda * (r + (a * r).ln())
            }
        })
    }
}

fn t21_equation(lp: f64, p: usize, m_list: &[f64], r: f64) -> Result<f64> {
    Ok(lp * (1.0 - lp * r) / (lp - r) - phi(r, p, m_list)?)
}

fn t21_schlicht(lp: f64, p: usize, m_list: &[f64], r: f64) -> Result<f64> {
    let head = lp * lp * r + (lp.powi(3) - lp) * (-r / lp).ln_1p();
    let mut tail = 0.0;
    for (k, &m) in (2..=p).zip(m_list) {
        let growth = (2.0 * m * m - 2.0).max(0.0).sqrt() * r / (1.0 - r * r).sqrt();
        tail += r.powi(2 * k as i32 - 1) * (k1_constant(m)? + growth);
    }
    Ok(head - tail)
}

fn t22_equation(primes: &[f64], m_p: f64, r: f64) -> f64 {
    let s = (2.0 * m_p * m_p - 2.0).max(0.0).sqrt();
    let growth = s * r * (r.powi(4) - 3.0 * r * r + 4.0).sqrt() / (1.0 - r * r).powf(1.5);
    let layers: f64 = primes
        .iter()
        .enumerate()
        .map(|(j, &l)| {
            let k = j + 2;
            (2 * k - 1) as f64 * l * r.powi(2 * (k as i32 - 1))
        })
        .sum();
    1.0 - growth - layers
}

fn t22_schlicht(primes: &[f64], m_p: f64, r: f64) -> f64 {
    let s = (2.0 * m_p * m_p - 2.0).max(0.0).sqrt();
    let layers: f64 = primes.iter().enumerate().map(|(j, &l)| r.powi(2 * (j as i32 + 2) - 1) * l).sum();
    r - s * r * r / (1.0 - r * r).sqrt() - layers
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_per_variant() {
        let h = EllipticParams::harmonic();
        assert!(TheoremParams::T21 { p: 2, elliptic: h, lambda_p: 1.0, m_list: vec![] }.validate().is_err());
        assert!(TheoremParams::T21 { p: 2, elliptic: h, lambda_p: 0.5, m_list: vec![1.0] }.validate().is_err());
        assert!(TheoremParams::T22 { p: 2, elliptic: h, lambda_list: vec![0.0], m_p: 1.0 }.validate().is_ok());
        assert!(TheoremParams::T22 { p: 1, elliptic: h, lambda_list: vec![], m_p: 0.9 }.validate().is_err());
        assert!(matches!(
            TheoremParams::T26 { p: 1, elliptic: h, lambda: 0.5 }.validate(),
            Err(Error::Hypothesis(msg)) if msg.contains("(K²+1)λ²+2K√K′λ+K′ > 1")
        ));
        assert!(TheoremParams::T27 { p: 1, elliptic: h, lambda: 0.5 }.validate().is_err());
        assert!(TheoremParams::T27 { p: 1, elliptic: EllipticParams::new(2.0, 0.0).unwrap(), lambda: 0.5 }
            .validate()
            .is_ok());
        assert!(matches!(TheoremParams::BaselineC { p: 1, m: 1.0 }.validate(), Err(Error::Domain(_))));
        assert!(TheoremParams::BaselineF { k: 0.5, lambda: 1.0 }.validate().is_err());
        assert!(TheoremParams::BaselineE { elliptic: h, lambda: 0.0 }.validate().is_err());
    }

    #[test]
    fn json_tags() {
        let p = TheoremParams::T26 { p: 2, elliptic: EllipticParams::new(2.0, 1.0).unwrap(), lambda: 1.5 };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"variant":"T26","p":2,"elliptic":{"K":2.0,"Kp":1.0},"lambda":1.5}"#);
        let back: TheoremParams = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let a: TheoremParams = serde_json::from_str(r#"{"variant":"BaselineA","p":2,"Lambda_p":2.0,"M_list":[1.0]}"#).unwrap();
        assert_eq!(a.p(), Some(2));
    }

    #[test]
    fn t22_closed_form_equation() {
        let params = TheoremParams::BaselineB { p: 2, lambda_list: vec![1.0], m_p: 1.0 };
        for r in [0.1, 0.4, 0.8] {
            assert!((params.equation(r).unwrap().unwrap() - (1.0 - 3.0 * r * r)).abs() < 1e-15);
        }
    }
}
