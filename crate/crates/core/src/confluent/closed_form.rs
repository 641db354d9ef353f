//! Closed forms for the integrals of u² that enter w(x).
//!
//! Every seed used here is, after a change of variable v(x) ∈ (0, 1),
//! a sum of terms v^(p−1)(1−v)^(q−1) against dv, so the integrals reduce
//! to incomplete Beta functions. Each evaluator works from whichever end
//! of (0, 1) is nearer, so no sum is ever evaluated where its terms
//! cancel.

use crate::error::{Error, Result};
use crate::potentials::{tanh_split, PotentialSpec};
use crate::seeds::FactorizationEnergy;
use crate::specfun::{beta_fn, beta_power_segment, binomial_real, incomplete_beta_split, nonpositive_integer, pochhammer, truncation_degree};

/// Cauchy product of a coefficient list with itself.
fn self_convolve(c: &[f64]) -> Vec<f64> {
    if c.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; 2 * c.len() - 1];
    for (i, a) in c.iter().enumerate() {
        for (j, b) in c.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Σₖ coefₖ ∫ t^(pₖ−1)(1−t)^(qₖ−1) dt with all pₖ, qₖ > 0.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct BetaMixture {
    terms: Vec<(f64, f64, f64)>,
    total: f64,
}

impl BetaMixture {
    fn new(terms: Vec<(f64, f64, f64)>) -> Result<Self> {
        let mut total = 0.0;
        for &(c, p, q) in &terms {
            total += c * beta_fn(p, q)?;
        }
        Ok(Self { terms, total })
    }

    /// (∫₀ᵛ, ∫ᵥ¹) as fractions of the total.
    fn fractions(&self, v: f64, omv: f64) -> Result<(f64, f64)> {
        if v <= 0.0 {
            return Ok((0.0, 1.0));
        }
        if omv <= 0.0 {
            return Ok((1.0, 0.0));
        }
        if v <= 0.5 {
            let mut left = 0.0;
            for &(c, p, q) in &self.terms {
                left += c * incomplete_beta_split(v, omv, p, q)?;
            }
            let left = left / self.total;
            Ok((left, 1.0 - left))
        } else {
            let mut right = 0.0;
            for &(c, p, q) in &self.terms {
                right += c * incomplete_beta_split(omv, v, q, p)?;
            }
            let right = right / self.total;
            Ok((1.0 - right, right))
        }
    }
}

/// Cumulative probability ∫ ψₙ² from the left end of the domain, for the
/// bound states of either model.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCumulative {
    spec: PotentialSpec,
    mixture: BetaMixture,
}

impl BoundCumulative {
    pub fn new(spec: &PotentialSpec, n: usize) -> Result<Self> {
        let (alpha, beta) = spec.level_params(n)?;
        let nf = n as f64;
        let e: Vec<f64> = (0..=n)
            .map(|m| binomial_real(nf + alpha, m) * binomial_real(nf + beta, n - m))
            .collect();
        let conv = self_convolve(&e);
        let terms = conv
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let kf = k as f64;
                match spec {
                    // v = (1 + tanh x)/2; the ((x−1)/2) powers carry the sign
                    PotentialSpec::RosenMorseII { .. } => {
                        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                        (sign * c, beta + kf, alpha + 2.0 * nf - kf)
                    }
                    // v = 1 − e^(−2x)
                    PotentialSpec::Eckart { a, .. } => (c, 1.0 + 2.0 * a, alpha + 2.0 * nf - kf),
                }
            })
            .collect();
        Ok(Self {
            spec: *spec,
            mixture: BetaMixture::new(terms)?,
        })
    }

    /// (∫ from the left end to x, ∫ from x to +∞) of ψₙ², each in [0, 1].
    pub fn split(&self, x: f64) -> Result<(f64, f64)> {
        match self.spec {
            PotentialSpec::RosenMorseII { .. } => {
                let (_, omt, opt) = tanh_split(x);
                self.mixture.fractions(0.5 * opt, 0.5 * omt)
            }
            PotentialSpec::Eckart { .. } => {
                if !(x > 0.0) {
                    return Err(Error::DomainError(format!("Eckart closed form needs x > 0, got {x}")));
                }
                self.mixture.fractions(-(-2.0 * x).exp_m1(), (-2.0 * x).exp())
            }
        }
    }
}

/// ∫ₓ^∞ u₁² for the right-decaying seed.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedTail {
    spec: PotentialSpec,
    prefactor: f64,
    p: f64,
    q: f64,
    /// Squared coefficients of the ₂F₁ factor in powers of v.
    lower: Vec<f64>,
    /// Polynomial case only: K² and the squared coefficients in powers of 1 − v.
    upper: Option<(f64, Vec<f64>)>,
    half_value: f64,
    degree: Option<usize>,
}

fn series_coefficients(a: f64, b: f64, c: f64) -> Result<Vec<f64>> {
    if let Some(n) = truncation_degree(a, b) {
        if let Some(j) = nonpositive_integer(c) {
            if j < n {
                return Err(Error::ParameterPole { c, n: j });
            }
        }
        let mut out = Vec::with_capacity(n + 1);
        let mut t = 1.0;
        out.push(t);
        for k in 0..n {
            let kf = k as f64;
            t *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
            out.push(t);
        }
        return Ok(out);
    }
    if let Some(j) = nonpositive_integer(c) {
        return Err(Error::ParameterPole { c, n: j });
    }
    // enough terms for v <= 1/2
    let max_terms = 10_000;
    let mut out = vec![1.0];
    let mut t = 1.0f64;
    let mut peak = 1.0f64;
    for k in 0..max_terms {
        let kf = k as f64;
        t *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        out.push(t);
        let scaled = t.abs() * 0.5f64.powi(k as i32 + 1);
        peak = peak.max(scaled);
        if scaled < 1e-18 * peak && ((a + kf) * (b + kf) / ((c + kf) * (kf + 1.0))).abs() < 1.0 {
            return Ok(out);
        }
    }
    Err(Error::MaxTermsExceeded { max_terms })
}

impl SeedTail {
    pub fn new(fe: &FactorizationEnergy) -> Result<Self> {
        let (alpha, beta) = (fe.alpha, fe.beta);
        let (prefactor, p, q, (a, b, c)) = match fe.spec {
            PotentialSpec::RosenMorseII { s, .. } => {
                let m = 0.5 * (alpha + beta);
                (2f64.powf(alpha + beta - 1.0), alpha, beta, (-s + m, s + 1.0 + m, 1.0 + alpha))
            }
            PotentialSpec::Eckart { a, .. } => (
                0.5,
                alpha,
                3.0 - 2.0 * a,
                (1.0 - a + 0.5 * (alpha + beta), 1.0 - a + 0.5 * (alpha - beta), 1.0 + alpha),
            ),
        };
        let coeffs = series_coefficients(a, b, c)?;
        let degree = truncation_degree(a, b);
        let upper = match degree {
            Some(n) => {
                // make `a` the terminating parameter
                let (_, b) = if nonpositive_integer(a) == Some(n) { (a, b) } else { (b, a) };
                let cp = b - c - n as f64 + 1.0;
                let blocked = matches!(nonpositive_integer(cp), Some(j) if j < n);
                if blocked {
                    None
                } else {
                    let k = pochhammer(c - b, n) / pochhammer(c, n);
                    let d: Vec<f64> = (0..=n)
                        .map(|j| pochhammer(-(n as f64), j) * pochhammer(b, j) / (pochhammer(cp, j) * pochhammer(1.0, j)))
                        .collect();
                    Some((k * k, self_convolve(&d)))
                }
            }
            None => None,
        };
        let mut tail = Self {
            spec: fe.spec,
            prefactor,
            p,
            q,
            lower: self_convolve(&coeffs),
            upper,
            half_value: 0.0,
            degree,
        };
        tail.half_value = tail.lower_integral(0.5, 0.5)?;
        Ok(tail)
    }

    /// Degree of the polynomial ₂F₁ factor of u₁, if it terminates.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    fn lower_integral(&self, v: f64, omv: f64) -> Result<f64> {
        let mut sum = 0.0;
        for (k, &c) in self.lower.iter().enumerate() {
            if c != 0.0 {
                sum += c * incomplete_beta_split(v, omv, self.p + k as f64, self.q)?;
            }
        }
        Ok(sum)
    }

    /// ∫₀ᵛ t^(p−1)(1−t)^(q−1) F(t)² dt.
    fn integral(&self, v: f64, omv: f64) -> Result<f64> {
        if v <= 0.5 {
            return self.lower_integral(v, omv);
        }
        let Some((k2, d2)) = &self.upper else {
            return Err(Error::NonConvergent { z: v });
        };
        let mut sum = 0.0;
        for (j, &d) in d2.iter().enumerate() {
            if d != 0.0 {
                sum += d * beta_power_segment(omv, 0.5, self.q + j as f64, self.p)?;
            }
        }
        Ok(self.half_value + k2 * sum)
    }

    /// ∫ₓ^∞ u₁².
    pub fn tail(&self, x: f64) -> Result<f64> {
        let (v, omv) = match self.spec {
            PotentialSpec::RosenMorseII { .. } => {
                let (_, omt, opt) = tanh_split(x);
                (0.5 * omt, 0.5 * opt)
            }
            PotentialSpec::Eckart { .. } => {
                if !(x > 0.0) {
                    return Err(Error::DomainError(format!("Eckart closed form needs x > 0, got {x}")));
                }
                ((-2.0 * x).exp(), -(-2.0 * x).exp_m1())
            }
        };
        if v == 0.0 {
            return Ok(0.0);
        }
        Ok(self.prefactor * self.integral(v, omv)?)
    }
}

/// w(x) = w0 − ∫₋∞ˣ ψₙ² for Rosen–Morse II.
pub fn analytic_w_rm_bound(spec: &PotentialSpec, n: usize, w0: f64, x: f64) -> Result<f64> {
    require_model(spec, true)?;
    Ok(w0 - BoundCumulative::new(spec, n)?.split(x)?.0)
}

/// w(x) = w0 − ∫₀ˣ ψₙ² for Eckart.
pub fn analytic_w_eckart_bound(spec: &PotentialSpec, n: usize, w0: f64, x: f64) -> Result<f64> {
    require_model(spec, false)?;
    Ok(w0 - BoundCumulative::new(spec, n)?.split(x)?.0)
}

/// w(x) = w0 + ∫ₓ^∞ u₁² for Rosen–Morse II.
pub fn analytic_w_rm_scatter(fe: &FactorizationEnergy, w0: f64, x: f64) -> Result<f64> {
    require_model(&fe.spec, true)?;
    Ok(w0 + SeedTail::new(fe)?.tail(x)?)
}

/// w(x) = w0 + ∫ₓ^∞ u₁² for Eckart.
pub fn analytic_w_eckart_scatter(fe: &FactorizationEnergy, w0: f64, x: f64) -> Result<f64> {
    require_model(&fe.spec, false)?;
    Ok(w0 + SeedTail::new(fe)?.tail(x)?)
}

fn require_model(spec: &PotentialSpec, rosen_morse: bool) -> Result<()> {
    let ok = matches!(spec, PotentialSpec::RosenMorseII { .. }) == rosen_morse;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidRequest(format!("closed form does not apply to the {} model", spec.name())))
    }
}
