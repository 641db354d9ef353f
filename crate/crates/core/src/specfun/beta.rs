//! Incomplete Beta function for a > 0 and arbitrary real b.
//!
//! B(z; a, b) = ∫₀ᶻ t^(a-1)(1-t)^(b-1) dt = z^a/a · ₂F₁(a, 1-b; a+1; z).
//! For z > 1/2 the evaluation switches to the complement (b > 0) or to
//! the Euler form z^a(1-z)^b/a · ₂F₁(1, a+b; a+1; z) (b <= 0), which
//! converges at z = 1 when b < 0.

use super::gamma::log_abs_gamma;
use super::hypergeometric::{gauss_2f1, hyp2f1_split, SeriesPolicy};
use crate::error::{Error, Result};

/// Complete Beta function Γ(a)Γ(b)/Γ(a+b).
pub fn beta_fn(a: f64, b: f64) -> Result<f64> {
    let (la, sa) = log_abs_gamma(a)?;
    let (lb, sb) = log_abs_gamma(b)?;
    let (lab, sab) = log_abs_gamma(a + b)?;
    Ok(sa * sb * sab * (la + lb - lab).exp())
}

/// B(z; a, b) for z in [0, 1).
pub fn incomplete_beta(z: f64, a: f64, b: f64) -> Result<f64> {
    incomplete_beta_split(z, 1.0 - z, a, b)
}

/// B(z; a, b) with `omz = 1 - z` supplied by the caller.
pub fn incomplete_beta_split(z: f64, omz: f64, a: f64, b: f64) -> Result<f64> {
    if a <= 0.0 {
        return Err(Error::DomainError(format!("incomplete beta requires a > 0, got {a}")));
    }
    if z < 0.0 {
        return Err(Error::DomainError(format!("incomplete beta requires z >= 0, got {z}")));
    }
    if omz <= 0.0 {
        if b > 0.0 && omz == 0.0 {
            return beta_fn(a, b);
        }
        return Err(Error::NonConvergent { z });
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    if z <= 0.5 {
        let f = gauss_2f1(a, 1.0 - b, a + 1.0, z, &SeriesPolicy::for_params(a, 1.0 - b))?;
        return Ok(z.powf(a) / a * f);
    }
    if b > 0.0 {
        return Ok(beta_fn(a, b)? - incomplete_beta_split(omz, z, b, a)?);
    }
    let f = hyp2f1_split(1.0, a + b, a + 1.0, z, omz)?;
    Ok(z.powf(a) * omz.powf(b) / a * f)
}

/// ∫ over [v1, v2] of v^(e-1)(1-v)^(p-1) dv for 0 < v1 <= v2 <= 1/2 and any
/// real `e` (including e <= 0, where the Beta form has no base point).
///
/// Expands (1-v)^(p-1) = Σⱼ (1-p)ⱼ/j! vʲ and integrates termwise; the
/// j with e + j = 0 contributes a logarithm.
pub fn beta_power_segment(v1: f64, v2: f64, e: f64, p: f64) -> Result<f64> {
    if !(v1 > 0.0 && v1 <= v2 && v2 <= 0.5 + 1e-15) {
        return Err(Error::DomainError(format!(
            "beta_power_segment needs 0 < v1 <= v2 <= 1/2, got [{v1}, {v2}]"
        )));
    }
    if v1 == v2 {
        return Ok(0.0);
    }
    let ln_ratio = (v2 / v1).ln();
    let policy = SeriesPolicy::default();
    let mut sum = 0.0;
    let mut coef = 1.0;
    for j in 0..policy.max_terms {
        let ee = e + j as f64;
        let y = ee * ln_ratio;
        let piece = if y.abs() < 1.0 {
            // v1^ee · (exp(y) - 1)/ee without cancellation
            let exprel = if y == 0.0 { 1.0 } else { y.exp_m1() / y };
            v1.powf(ee) * ln_ratio * exprel
        } else {
            (v2.powf(ee) - v1.powf(ee)) / ee
        };
        let term = coef * piece;
        sum += term;
        coef *= (1.0 - p + j as f64) / (j as f64 + 1.0);
        if coef == 0.0 {
            return Ok(sum);
        }
        if ee > 1.0 && term.abs() <= policy.rel_tol * sum.abs() * 1e-2 {
            return Ok(sum);
        }
    }
    Err(Error::MaxTermsExceeded {
        max_terms: policy.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate, QuadOptions};
    use proptest::prelude::*;

    #[test]
    fn trivial_cases() {
        for z in [0.0, 0.1, 0.5, 0.9] {
            assert!((incomplete_beta(z, 1.0, 1.0).unwrap() - z).abs() < 1e-15);
        }
        assert!((incomplete_beta(0.5, 2.0, 1.0).unwrap() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn negative_b_vs_quadrature() {
        let (z, a, b) = (0.3, 17.0, -5.0);
        let q = integrate(
            |t: f64| t.powf(a - 1.0) * (1.0 - t).powf(b - 1.0),
            0.0,
            z,
            &QuadOptions::precise(),
        )
        .unwrap();
        let v = incomplete_beta(z, a, b).unwrap();
        assert!(((v - q.value) / q.value).abs() < 1e-10, "{v} vs {}", q.value);
    }

    #[test]
    fn upper_half_branches_vs_quadrature() {
        let opts = QuadOptions::precise();
        for &(z, a, b) in &[(0.8, 2.5, 3.5), (0.97, 9.0, -5.0), (0.93, 1.57, 0.4), (0.7, 3.0, -0.5)] {
            let q = integrate(|t: f64| t.powf(a - 1.0) * (1.0 - t).powf(b - 1.0), 0.0, z, &opts).unwrap();
            let v = incomplete_beta(z, a, b).unwrap();
            assert!(((v - q.value) / q.value).abs() < 1e-10, "({z},{a},{b}): {v} vs {}", q.value);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(incomplete_beta(0.3, 0.0, 2.0), Err(Error::DomainError(_))));
        assert!(matches!(incomplete_beta(1.0, 2.0, -1.0), Err(Error::NonConvergent { .. })));
        assert!(incomplete_beta(0.2, -1.0, 2.0).is_err());
    }

    #[test]
    fn segment_matches_quadrature_including_log_term() {
        let opts = QuadOptions::precise();
        for &(v1, v2, e, p) in &[
            (1e-6, 0.5, -14.0, 16.0),
            (0.01, 0.3, 0.0, 16.0),
            (0.2, 0.5, -3.5, 2.7),
            (1e-3, 0.4, 2.0, 17.0),
        ] {
            let q = integrate(|v: f64| v.powf(e - 1.0) * (1.0 - v).powf(p - 1.0), v1, v2, &opts).unwrap();
            let s = beta_power_segment(v1, v2, e, p).unwrap();
            assert!(((s - q.value) / q.value).abs() < 1e-11, "({v1},{v2},{e},{p}): {s} vs {}", q.value);
        }
    }

    proptest! {
        #[test]
        fn increasing_in_z(z1 in 0.0f64..0.99, dz in 1e-4f64..0.5, a in 0.3f64..20.0, b in -6.0f64..6.0) {
            let z2 = (z1 + dz).min(0.995);
            prop_assume!(z2 > z1 + 1e-5);
            let b1 = incomplete_beta(z1, a, b).unwrap();
            let b2 = incomplete_beta(z2, a, b).unwrap();
            prop_assert!(b2 > b1, "B({z1})={b1} B({z2})={b2}");
        }
    }
}
