//! Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
//! with the reflection formula below 1/2.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Returns `Some(k)` when `x` is within `1e-12` of the integer `-k`, k >= 0.
pub fn nonpositive_integer(x: f64) -> Option<usize> {
    let r = x.round();
    if r <= 0.0 && (x - r).abs() <= 1e-12 * r.abs().max(1.0) {
        Some((-r) as usize)
    } else {
        None
    }
}

fn lanczos_sum(x: f64) -> f64 {
    // x >= 0.5, evaluates at x - 1
    let z = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

/// Γ(x). Fails with [`Error::GammaPole`] at nonpositive integers.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if nonpositive_integer(x).is_some() {
        return Err(Error::GammaPole { x });
    }
    if x < 0.5 {
        let s = (PI * x).sin();
        return Ok(PI / (s * gamma_fn(1.0 - x)?));
    }
    if x.fract() == 0.0 && x <= 23.0 {
        let mut f = 1.0;
        for k in 2..(x as u64) {
            f *= k as f64;
        }
        return Ok(f);
    }
    if x > 171.7 {
        return Ok(f64::INFINITY);
    }
    let t = x - 0.5 + LANCZOS_G;
    // split the power to delay overflow for x near the upper limit
    let half = t.powf(0.5 * (x - 0.5));
    Ok((2.0 * PI).sqrt() * half * (half * (-t).exp()) * lanczos_sum(x))
}

/// ln|Γ(x)| together with the sign of Γ(x).
pub fn log_abs_gamma(x: f64) -> Result<(f64, f64)> {
    if nonpositive_integer(x).is_some() {
        return Err(Error::GammaPole { x });
    }
    if x < 0.5 {
        let s = (PI * x).sin();
        let (lg, _) = log_abs_gamma(1.0 - x)?;
        return Ok((PI.ln() - s.abs().ln() - lg, s.signum()));
    }
    let t = x - 0.5 + LANCZOS_G;
    Ok((LN_SQRT_2PI + (x - 0.5) * t.ln() - t + lanczos_sum(x).ln(), 1.0))
}
