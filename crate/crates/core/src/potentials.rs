//! The two shape-invariant models: hyperbolic Rosen–Morse II on the full
//! line and Eckart on the half line, in units ħ = 2m = 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{Eval, RealFunction};
use crate::quadrature::{integrate, tail_cutoff, QuadOptions};
use crate::specfun::jacobi_p_split_with_derivative;

/// Clip of the Eckart half line used for numerical integration.
pub const ECKART_X_EPS: f64 = 1e-4;
pub const ECKART_X_MAX: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum PotentialSpec {
    /// −s(s+1) sech²x + 2Λ tanh x on (−∞, ∞).
    #[serde(rename = "rosen-morse")]
    RosenMorseII { s: f64, lambda: f64 },
    /// A(A−1) cosech²x − 2B coth x on (0, ∞).
    Eckart { a: f64, b: f64 },
}

/// 1 − tanh x and 1 + tanh x without cancellation.
pub(crate) fn tanh_split(x: f64) -> (f64, f64, f64) {
    let t = x.tanh();
    let omt = 2.0 / (1.0 + (2.0 * x).exp());
    let opt = 2.0 / (1.0 + (-2.0 * x).exp());
    (t, omt, opt)
}

/// coth x − 1 and coth x + 1 for x > 0.
pub(crate) fn coth_split(x: f64) -> (f64, f64) {
    let cm1 = 2.0 / (2.0 * x).exp_m1();
    (cm1, cm1 + 2.0)
}

impl PotentialSpec {
    pub fn rosen_morse(s: f64, lambda: f64) -> Result<Self> {
        if !(s > 0.0 && lambda > 0.0 && lambda < s * s) {
            return Err(Error::InvalidSpec(format!(
                "Rosen-Morse II needs s > 0 and 0 < lambda < s^2 (got s = {s}, lambda = {lambda})"
            )));
        }
        Ok(Self::RosenMorseII { s, lambda })
    }

    pub fn eckart(a: f64, b: f64) -> Result<Self> {
        let mut problems = Vec::new();
        if !(a > 1.0) {
            problems.push(format!("A>1 (got A = {a})"));
        }
        if !(b > a * a) {
            problems.push(format!("B>A² (got B = {b}, A² = {})", a * a));
        }
        if !problems.is_empty() {
            return Err(Error::InvalidSpec(format!("Eckart needs {}", problems.join(", "))));
        }
        Ok(Self::Eckart { a, b })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::RosenMorseII { .. } => "rosen-morse",
            Self::Eckart { .. } => "eckart",
        }
    }

    /// Left end of the natural domain: −∞ or 0.
    pub fn left_end(&self) -> f64 {
        match self {
            Self::RosenMorseII { .. } => f64::NEG_INFINITY,
            Self::Eckart { .. } => 0.0,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        match self {
            Self::RosenMorseII { .. } => x.is_finite(),
            Self::Eckart { .. } => x > 0.0 && x.is_finite(),
        }
    }

    /// (V(left end), V(+∞)).
    pub fn asymptotic_limits(&self) -> (f64, f64) {
        match *self {
            Self::RosenMorseII { lambda, .. } => (-2.0 * lambda, 2.0 * lambda),
            Self::Eckart { b, .. } => (f64::INFINITY, -2.0 * b),
        }
    }

    /// The lower of the two asymptotic values.
    pub fn continuum_threshold(&self) -> f64 {
        let (l, r) = self.asymptotic_limits();
        l.min(r)
    }

    /// Default evaluation window, with guard bands at the domain edges.
    pub fn default_window(&self) -> (f64, f64) {
        match self {
            Self::RosenMorseII { .. } => (-15.0, 15.0),
            Self::Eckart { .. } => (1e-3, 15.0),
        }
    }

    pub fn potential_value(&self, x: f64) -> Result<f64> {
        match *self {
            Self::RosenMorseII { s, lambda } => {
                let (t, omt, opt) = tanh_split(x);
                Ok(-s * (s + 1.0) * omt * opt + 2.0 * lambda * t)
            }
            Self::Eckart { a, b } => {
                if !(x > 0.0) {
                    return Err(Error::DomainError(format!("Eckart potential needs x > 0, got {x}")));
                }
                let (cm1, cp1) = coth_split(x);
                Ok(a * (a - 1.0) * cm1 * cp1 - 2.0 * b * (cm1 + 1.0))
            }
        }
    }

    /// V′(x).
    pub fn potential_derivative(&self, x: f64) -> Result<f64> {
        match *self {
            Self::RosenMorseII { s, lambda } => {
                let (t, omt, opt) = tanh_split(x);
                let sech2 = omt * opt;
                Ok(2.0 * s * (s + 1.0) * sech2 * t + 2.0 * lambda * sech2)
            }
            Self::Eckart { a, b } => {
                if !(x > 0.0) {
                    return Err(Error::DomainError(format!("Eckart potential needs x > 0, got {x}")));
                }
                let (cm1, cp1) = coth_split(x);
                let csch2 = cm1 * cp1;
                Ok(csch2 * (2.0 * b - 2.0 * a * (a - 1.0) * (cm1 + 1.0)))
            }
        }
    }

    fn raw_params(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        match *self {
            Self::RosenMorseII { s, lambda } => {
                let k = s - nf;
                (k + lambda / k, k - lambda / k)
            }
            Self::Eckart { a, b } => {
                let k = a + nf;
                (-k + b / k, -k - b / k)
            }
        }
    }

    /// Levels {0, …, n_max} with decaying tails at both ends.
    pub fn valid_levels(&self) -> Vec<usize> {
        let mut levels = Vec::new();
        for n in 0.. {
            let ok = match *self {
                Self::RosenMorseII { s, .. } => {
                    let (al, be) = self.raw_params(n);
                    s - n as f64 > 0.0 && al > 0.0 && be > 0.0
                }
                Self::Eckart { .. } => self.raw_params(n).0 > 0.0,
            };
            if !ok {
                break;
            }
            levels.push(n);
        }
        levels
    }

    pub fn check_level(&self, n: usize) -> Result<()> {
        if self.valid_levels().contains(&n) {
            Ok(())
        } else {
            Err(Error::InvalidLevel { n })
        }
    }

    /// Jacobi exponents (αₙ, βₙ) of level n.
    pub fn level_params(&self, n: usize) -> Result<(f64, f64)> {
        self.check_level(n)?;
        Ok(self.raw_params(n))
    }

    pub fn level_energy(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        Ok(match *self {
            Self::RosenMorseII { s, lambda } => {
                let k = s - nf;
                -k * k - lambda * lambda / (k * k)
            }
            Self::Eckart { a, b } => {
                let k = a + nf;
                -k * k - b * b / (k * k)
            }
        })
    }

    /// Normalized eigenfunction of level n.
    pub fn bound_state(&self, n: usize) -> Result<BoundState> {
        let (alpha, beta) = self.level_params(n)?;
        let energy = self.level_energy(n)?;
        let mut state = BoundState {
            spec: *self,
            n,
            energy,
            alpha,
            beta,
            norm_constant: 1.0,
        };
        let norm2 = state.norm_squared()?;
        state.norm_constant = 1.0 / norm2.sqrt();
        Ok(state)
    }

    /// A finite interval carrying all but a negligible part of ∫ f.
    pub fn integration_range<F: Fn(f64) -> f64 + Copy>(&self, f: F) -> (f64, f64) {
        match self {
            Self::RosenMorseII { .. } => (
                tail_cutoff(f, 0.0, -1.0, -700.0, 1e-17),
                tail_cutoff(f, 0.0, 1.0, 700.0, 1e-17),
            ),
            Self::Eckart { .. } => (ECKART_X_EPS, tail_cutoff(f, 1.0, 1.0, 350.0, 1e-17).max(ECKART_X_MAX)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub spec: PotentialSpec,
    pub n: usize,
    pub energy: f64,
    pub alpha: f64,
    pub beta: f64,
    pub norm_constant: f64,
}

impl BoundState {
    fn eval_unit(&self, x: f64) -> Result<Eval> {
        let (al, be, n) = (self.alpha, self.beta, self.n);
        match self.spec {
            PotentialSpec::RosenMorseII { .. } => {
                let (_, omt, opt) = tanh_split(x);
                let pref = omt.powf(0.5 * al) * opt.powf(0.5 * be);
                let (p, dp) = jacobi_p_split_with_derivative(n, al, be, omt, opt);
                let value = pref * p;
                let deriv = pref * (p * (-0.5 * al * opt + 0.5 * be * omt) + dp * omt * opt);
                Ok(Eval::new(value, deriv))
            }
            PotentialSpec::Eckart { .. } => {
                if !(x > 0.0) {
                    return Err(Error::DomainError(format!("Eckart state needs x > 0, got {x}")));
                }
                let (cm1, cp1) = coth_split(x);
                let pref = cm1.powf(0.5 * al) * cp1.powf(0.5 * be);
                let (p, dp) = jacobi_p_split_with_derivative(n, al, be, -cm1, cp1);
                let value = pref * p;
                let deriv = pref * (p * (-0.5 * al * cp1 - 0.5 * be * cm1) - dp * cm1 * cp1);
                Ok(Eval::new(value, deriv))
            }
        }
    }

    fn norm_squared(&self) -> Result<f64> {
        let f = |x: f64| self.eval_unit(x).map(|e| e.value * e.value).unwrap_or(f64::NAN);
        let (lo, hi) = self.spec.integration_range(f);
        let opts = QuadOptions {
            abs_tol: 0.0,
            rel_tol: 1e-13,
            max_intervals: 20_000,
        };
        Ok(integrate(f, lo, hi, &opts)?.value)
    }
}

impl RealFunction for BoundState {
    fn eval(&self, x: f64) -> Result<Eval> {
        let e = self.eval_unit(x)?;
        Ok(Eval::new(self.norm_constant * e.value, self.norm_constant * e.deriv))
    }
}
