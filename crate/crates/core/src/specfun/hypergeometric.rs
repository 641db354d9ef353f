//! Gauss hypergeometric function ₂F₁ on the real line.
//!
//! [`gauss_2f1`] is the bare power series. [`hyp2f1_split`] is the evaluator
//! used by the seed and kernel code: it takes `z` together with `1 - z`
//! (computed stably by the caller) and picks a representation that keeps
//! the series well conditioned on the whole interval `[0, 1)`:
//!
//! * `z <= 1/2`: the power series in `z`;
//! * terminating series near `z = 1`: the terminating connection formula
//!   `F(-N,b;c;z) = (c-b)_N/(c)_N · F(-N,b;b-c-N+1;1-z)`;
//! * close to `z = 1` with non-integer `c - a - b`: the two-term
//!   connection formula in `1 - z`;
//! * otherwise the power series when `c - a - b > 0`, or Euler's
//!   transformation `F = (1-z)^(c-a-b) F(c-a,c-b;c;z)` when it is not.

use super::gamma::{gamma_fn, nonpositive_integer};
use super::pochhammer;
use crate::error::{Error, Result};

/// Controls how a hypergeometric series is summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Forces exactly `k + 1` terms when set.
    pub truncation_degree: Option<usize>,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_terms: 10_000,
            truncation_degree: None,
        }
    }
}

impl SeriesPolicy {
    /// Default tolerances, with the truncation degree detected from the
    /// numerator parameters.
    pub fn for_params(a: f64, b: f64) -> Self {
        Self {
            truncation_degree: truncation_degree(a, b),
            ..Self::default()
        }
    }
}

/// Degree of the polynomial ₂F₁(a, b; c; z) when `a` or `b` is a
/// nonpositive integer.
pub fn truncation_degree(a: f64, b: f64) -> Option<usize> {
    match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(i), Some(j)) => Some(i.min(j)),
        (Some(i), None) => Some(i),
        (None, Some(j)) => Some(j),
        (None, None) => None,
    }
}

/// Σₙ (a)ₙ(b)ₙ/(c)ₙ · zⁿ/n!.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, policy: &SeriesPolicy) -> Result<f64> {
    let degree = policy.truncation_degree.or_else(|| truncation_degree(a, b));
    if let Some(k) = degree {
        if let Some(j) = nonpositive_integer(c) {
            if j < k {
                return Err(Error::ParameterPole { c, n: j });
            }
        }
        // exact polynomial, Horner-free forward sum keeps the (k+1)-th factor exactly zero
        let mut sum = 1.0;
        let mut term = 1.0;
        for n in 0..k {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
        }
        return Ok(sum);
    }
    if z.abs() >= 1.0 {
        return Err(Error::NonConvergent { z });
    }
    if let Some(j) = nonpositive_integer(c) {
        return Err(Error::ParameterPole { c, n: j });
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    for n in 0..policy.max_terms {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        term *= ratio;
        sum += term;
        // stop only once the terms are also shrinking
        if term.abs() <= policy.rel_tol * sum.abs() && ratio.abs() < 1.0 {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::NonConvergent { z });
        }
    }
    Err(Error::MaxTermsExceeded {
        max_terms: policy.max_terms,
    })
}

/// ₂F₁(a, b; c; z) evaluated through Pfaff's transformation
/// `(1-z)^(-b) ₂F₁(b, c-a; c; z/(z-1))`.
pub fn transform_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if z >= 1.0 {
        return Err(Error::NonConvergent { z });
    }
    let omz = 1.0 - z;
    let zt = z / (z - 1.0);
    let inner = if zt >= 0.0 {
        // z <= 0 maps into [0, 1); 1 - zt = 1/(1-z) exactly
        hyp2f1_split(b, c - a, c, zt, 1.0 / omz)?
    } else {
        gauss_2f1(b, c - a, c, zt, &SeriesPolicy::for_params(b, c - a))?
    };
    Ok(omz.powf(-b) * inner)
}

/// ₂F₁(a, b; c; z) for z in `(-1, 1)` given `omz = 1 - z` computed by the
/// caller without cancellation.
pub fn hyp2f1_split(a: f64, b: f64, c: f64, z: f64, omz: f64) -> Result<f64> {
    hyp2f1_split_depth(a, b, c, z, omz, 0)
}

fn hyp2f1_split_depth(a: f64, b: f64, c: f64, z: f64, omz: f64, depth: u8) -> Result<f64> {
    let policy = SeriesPolicy::for_params(a, b);
    if z <= 0.5 {
        return gauss_2f1(a, b, c, z, &policy);
    }
    if let Some(n) = policy.truncation_degree {
        // make `a` the terminating parameter
        let (a, b) = if nonpositive_integer(a) == Some(n) {
            (a, b)
        } else {
            (b, a)
        };
        if let Some(v) = terminating_connection(n, b, c, omz)? {
            return Ok(v);
        }
        return gauss_2f1(a, b, c, z, &policy);
    }
    let s = c - a - b;
    if depth == 0 && omz < 0.25 && (s - s.round()).abs() > 0.05 {
        return connection_one_minus_z(a, b, c, s, omz);
    }
    if s > 0.0 || depth > 0 {
        return gauss_2f1(a, b, c, z, &policy);
    }
    Ok(omz.powf(s) * hyp2f1_split_depth(c - a, c - b, c, z, omz, depth + 1)?)
}

/// Two-term re-expansion about z = 1 for non-integer `s = c - a - b`.
fn connection_one_minus_z(a: f64, b: f64, c: f64, s: f64, omz: f64) -> Result<f64> {
    let g = |x: f64| gamma_fn(x);
    let first = g(c)? * g(s)? * recip_gamma(c - a)? * recip_gamma(c - b)?;
    let second = g(c)? * g(-s)? * recip_gamma(a)? * recip_gamma(b)?;
    let mut total = 0.0;
    if first != 0.0 {
        let p = SeriesPolicy::for_params(a, b);
        total += first * gauss_2f1(a, b, 1.0 - s, omz, &p)?;
    }
    if second != 0.0 {
        let p = SeriesPolicy::for_params(c - a, c - b);
        total += second * omz.powf(s) * gauss_2f1(c - a, c - b, 1.0 + s, omz, &p)?;
    }
    Ok(total)
}

/// 1/Γ(x), zero at the poles.
fn recip_gamma(x: f64) -> Result<f64> {
    if nonpositive_integer(x).is_some() {
        return Ok(0.0);
    }
    Ok(1.0 / gamma_fn(x)?)
}

/// `F(-N, b; c; z)` re-expanded in `1 - z`. Returns `None` when the new
/// lower parameter hits a pole before the polynomial ends.
fn terminating_connection(n: usize, b: f64, c: f64, omz: f64) -> Result<Option<f64>> {
    let cp = b - c - n as f64 + 1.0;
    if let Some(j) = nonpositive_integer(cp) {
        if j < n {
            return Ok(None);
        }
    }
    let cn = pochhammer(c, n);
    if cn == 0.0 {
        return Err(Error::ParameterPole {
            c,
            n: nonpositive_integer(c).unwrap_or(0),
        });
    }
    let scale = pochhammer(c - b, n) / cn;
    let a = -(n as f64);
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((cp + kf) * (kf + 1.0)) * omz;
        sum += term;
    }
    Ok(Some(scale * sum))
}

/// Value and z-derivative of ₂F₁ using `d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z)`.
pub fn hyp2f1_split_with_derivative(a: f64, b: f64, c: f64, z: f64, omz: f64) -> Result<(f64, f64)> {
    let f = hyp2f1_split(a, b, c, z, omz)?;
    let lead = a * b / c;
    let df = if lead == 0.0 {
        0.0
    } else {
        lead * hyp2f1_split(a + 1.0, b + 1.0, c + 1.0, z, omz)?
    };
    Ok((f, df))
}
