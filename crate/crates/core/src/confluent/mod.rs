//! Confluent second-order SUSY transformation built on a single seed u:
//! the kernel w(x) = w₀ − ∫ₓ₀ˣ u², its nodeless classification, the
//! partner potential Ṽ = V − 2(ln w)″ and the transformed states.

mod closed_form;
mod partner;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{Eval, RealFunction};
use crate::potentials::{BoundState, PotentialSpec};
use crate::quadrature::{integrate, tail_cutoff, QuadOptions};
use crate::seeds::{factorization_params, seed_u1, seed_u2, BetaSign, FactorizationEnergy, Seed};

pub use closed_form::{
    analytic_w_eckart_bound, analytic_w_eckart_scatter, analytic_w_rm_bound, analytic_w_rm_scatter, BoundCumulative,
    SeedTail,
};
pub use partner::{
    apply_intertwiner, partner_potential, transformed_state, transformed_state_raw, windowed_norm, IntertwinerData,
    PartnerPotential, StateTarget, TransformedState,
};

/// μ values within this distance of a border are treated as on it.
pub const BORDER_TOL: f64 = 1e-9;

/// Base point x₀ of the kernel integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Anchor {
    MinusInfinity,
    Finite(f64),
    PlusInfinity,
}

impl Anchor {
    fn as_f64(self) -> f64 {
        match self {
            Self::MinusInfinity => f64::NEG_INFINITY,
            Self::Finite(x) => x,
            Self::PlusInfinity => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MuCase {
    /// ε = Eₙ with u = ψₙ normalized.
    BoundSeed,
    /// u decays at +∞ only.
    RightDecaying,
    /// u decays at the left end only.
    LeftDecaying,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Nonsingular,
    BorderDelete,
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Isospectral,
    Delete,
    Create,
}

/// Which seed solution drives the transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeedChoice {
    Bound { n: usize },
    RightDecaying { epsilon: f64, beta_sign: BetaSign },
    LeftDecaying { epsilon: f64, beta_sign: BetaSign },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeedFunction {
    Bound(BoundState),
    Scatter(Seed),
}

impl RealFunction for SeedFunction {
    fn eval(&self, x: f64) -> Result<Eval> {
        match self {
            Self::Bound(b) => b.eval(x),
            Self::Scatter(s) => s.eval(x),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum ClosedForm {
    Bound(BoundCumulative),
    Tail(SeedTail),
}

/// The kernel w(x) = w₀ − ∫ₓ₀ˣ u²(y) dy with w′ = −u².
#[derive(Debug, Clone, PartialEq)]
pub struct WFunction {
    pub spec: PotentialSpec,
    pub seed: SeedFunction,
    pub epsilon: f64,
    pub anchor: Anchor,
    pub w0: f64,
    pub mu: f64,
    pub mu_case: MuCase,
    closed: Option<ClosedForm>,
    left_cut: f64,
    right_cut: f64,
}

fn quad_opts() -> QuadOptions {
    QuadOptions {
        abs_tol: 1e-14,
        rel_tol: 1e-12,
        max_intervals: 20_000,
    }
}

impl WFunction {
    pub fn new(spec: &PotentialSpec, choice: SeedChoice, anchor: Option<Anchor>, w0: f64) -> Result<Self> {
        let left_anchor = match spec {
            PotentialSpec::RosenMorseII { .. } => Anchor::MinusInfinity,
            PotentialSpec::Eckart { .. } => Anchor::Finite(0.0),
        };
        let (seed, epsilon, mu_case, closed, default_anchor) = match choice {
            SeedChoice::Bound { n } => {
                let psi = spec.bound_state(n)?;
                let closed = ClosedForm::Bound(BoundCumulative::new(spec, n)?);
                (SeedFunction::Bound(psi), psi.energy, MuCase::BoundSeed, Some(closed), left_anchor)
            }
            SeedChoice::RightDecaying { epsilon, beta_sign } => {
                let fe = factorization_params(spec, epsilon, beta_sign)?;
                let u = seed_u1(&fe)?;
                let closed = tail_closed_form(&fe);
                (SeedFunction::Scatter(u), epsilon, MuCase::RightDecaying, closed, Anchor::PlusInfinity)
            }
            SeedChoice::LeftDecaying { epsilon, beta_sign } => {
                let fe = factorization_params(spec, epsilon, beta_sign)?;
                let u = seed_u2(&fe)?;
                (SeedFunction::Scatter(u), epsilon, MuCase::LeftDecaying, None, left_anchor)
            }
        };
        let anchor = anchor.unwrap_or(default_anchor);
        validate_anchor(spec, mu_case, anchor)?;
        if !w0.is_finite() {
            return Err(Error::InvalidRequest(format!("w0 must be finite, got {w0}")));
        }
        let u2 = |x: f64| seed.value(x).map(|v| v * v).unwrap_or(f64::NAN);
        let (start, left_limit, right_limit) = match spec {
            PotentialSpec::RosenMorseII { .. } => (0.0, -700.0, 700.0),
            PotentialSpec::Eckart { .. } => (1.0, 0.0, 350.0),
        };
        let right_cut = tail_cutoff(u2, start, 1.0, right_limit, 1e-17);
        let left_cut = match spec {
            PotentialSpec::RosenMorseII { .. } => tail_cutoff(u2, start, -1.0, left_limit, 1e-17),
            PotentialSpec::Eckart { .. } => 0.0,
        };
        let mut wf = Self {
            spec: *spec,
            seed,
            epsilon,
            anchor,
            w0,
            mu: f64::NAN,
            mu_case,
            closed,
            left_cut,
            right_cut,
        };
        wf.mu = wf.compute_mu()?;
        Ok(wf)
    }

    /// Drops the closed form so every evaluation goes through quadrature.
    pub fn quadrature_only(mut self) -> Self {
        self.closed = None;
        self
    }

    pub fn has_closed_form(&self) -> bool {
        self.closed.is_some()
    }

    /// Degree of the terminating hypergeometric factor of a u₁ seed.
    pub fn truncation_degree(&self) -> Option<usize> {
        match &self.closed {
            Some(ClosedForm::Tail(t)) => t.degree(),
            _ => None,
        }
    }

    /// ∫ₐᵇ u² over the numerically relevant part of [a, b].
    fn integral_u2(&self, a: f64, b: f64) -> Result<f64> {
        let lo = a.max(self.left_cut);
        let hi = b.min(self.right_cut);
        if hi <= lo {
            return Ok(0.0);
        }
        let seed = &self.seed;
        let f = |x: f64| seed.value(x).map(|v| v * v).unwrap_or(f64::NAN);
        Ok(integrate(f, lo, hi, &quad_opts())?.value)
    }

    fn w_closed(&self, closed: &ClosedForm, x: f64) -> Result<f64> {
        match closed {
            ClosedForm::Bound(c) => match self.anchor {
                Anchor::PlusInfinity => Ok(self.w0 + c.split(x)?.1),
                Anchor::Finite(x0) if !self.spec.contains(x0) => Ok(self.w0 - c.split(x)?.0),
                Anchor::MinusInfinity => Ok(self.w0 - c.split(x)?.0),
                Anchor::Finite(x0) => Ok(self.w0 - (c.split(x)?.0 - c.split(x0)?.0)),
            },
            ClosedForm::Tail(t) => match self.anchor {
                Anchor::PlusInfinity => Ok(self.w0 + t.tail(x)?),
                Anchor::Finite(x0) => Ok(self.w0 + t.tail(x)? - t.tail(x0)?),
                Anchor::MinusInfinity => unreachable!("rejected by validate_anchor"),
            },
        }
    }

    /// w(x) by quadrature, whatever closed form is available.
    pub fn w_quadrature(&self, x: f64) -> Result<f64> {
        match self.anchor {
            Anchor::PlusInfinity => Ok(self.w0 + self.integral_u2(x, f64::INFINITY)?),
            Anchor::MinusInfinity => Ok(self.w0 - self.integral_u2(f64::NEG_INFINITY, x)?),
            Anchor::Finite(x0) => {
                if x >= x0 {
                    Ok(self.w0 - self.integral_u2(x0, x)?)
                } else {
                    Ok(self.w0 + self.integral_u2(x, x0)?)
                }
            }
        }
    }

    pub fn w_eval(&self, x: f64) -> Result<f64> {
        if !self.spec.contains(x) {
            return Err(Error::DomainError(format!("w evaluated outside the domain at x = {x}")));
        }
        if let Some(closed) = &self.closed {
            if let Ok(v) = self.w_closed(closed, x) {
                if v.is_finite() {
                    return Ok(v);
                }
                // the Beta sums only overflow once |w| is past the largest double
                return Ok(self.overflow_value());
            }
        }
        let u = self.seed.value(x)?;
        if !(u * u).is_finite() {
            return Ok(self.overflow_value());
        }
        self.w_quadrature(x)
    }

    /// Sign of w where a growing scattering seed makes it overflow.
    fn overflow_value(&self) -> f64 {
        match self.mu_case {
            MuCase::LeftDecaying => f64::NEG_INFINITY,
            _ => f64::INFINITY,
        }
    }

    fn compute_mu(&self) -> Result<f64> {
        let x0 = self.anchor.as_f64();
        match self.mu_case {
            MuCase::BoundSeed | MuCase::RightDecaying => {
                // μ = w(+∞)
                if self.anchor == Anchor::PlusInfinity {
                    return Ok(self.w0);
                }
                let tail = match (&self.closed, self.anchor) {
                    (Some(ClosedForm::Bound(_)), a) if self.is_left_end(a) => 1.0,
                    (Some(ClosedForm::Bound(c)), Anchor::Finite(x0)) => c.split(x0)?.1,
                    (Some(ClosedForm::Tail(t)), Anchor::Finite(x0)) => t.tail(x0)?,
                    _ => self.integral_u2(x0.max(self.left_cut), f64::INFINITY)?,
                };
                Ok(self.w0 - tail)
            }
            MuCase::LeftDecaying => {
                // μ = −w(left end)
                let head = if self.is_left_end(self.anchor) {
                    0.0
                } else {
                    self.integral_u2(f64::NEG_INFINITY, x0)?
                };
                Ok(-(self.w0 + head))
            }
        }
    }

    fn is_left_end(&self, a: Anchor) -> bool {
        match a {
            Anchor::MinusInfinity => true,
            Anchor::Finite(x) => !self.spec.contains(x),
            Anchor::PlusInfinity => false,
        }
    }

    /// w(left end) and w(+∞).
    pub fn limits(&self) -> (f64, f64) {
        match self.mu_case {
            MuCase::BoundSeed => (self.mu + 1.0, self.mu),
            MuCase::RightDecaying => (f64::INFINITY, self.mu),
            MuCase::LeftDecaying => (-self.mu, f64::NEG_INFINITY),
        }
    }
}

impl RealFunction for WFunction {
    fn eval(&self, x: f64) -> Result<Eval> {
        let u = self.seed.value(x)?;
        Ok(Eval::new(self.w_eval(x)?, -u * u))
    }
}

fn tail_closed_form(fe: &FactorizationEnergy) -> Option<ClosedForm> {
    SeedTail::new(fe).ok().map(ClosedForm::Tail)
}

fn validate_anchor(spec: &PotentialSpec, case: MuCase, anchor: Anchor) -> Result<()> {
    let eckart = matches!(spec, PotentialSpec::Eckart { .. });
    match anchor {
        Anchor::MinusInfinity if eckart => {
            return Err(Error::InvalidRequest("the Eckart domain has no x0 = -inf".into()));
        }
        Anchor::Finite(x0) if !(spec.contains(x0) || (eckart && x0 == 0.0)) => {
            return Err(Error::InvalidRequest(format!("anchor x0 = {x0} lies outside the domain")));
        }
        _ => {}
    }
    let at_left = match anchor {
        Anchor::MinusInfinity => true,
        Anchor::Finite(x0) => eckart && x0 == 0.0,
        Anchor::PlusInfinity => false,
    };
    match case {
        MuCase::RightDecaying if at_left => Err(Error::InvalidRequest(
            "a seed growing toward the left end cannot be anchored there".into(),
        )),
        MuCase::LeftDecaying if anchor == Anchor::PlusInfinity => Err(Error::InvalidRequest(
            "a seed growing toward +inf cannot be anchored there".into(),
        )),
        _ => Ok(()),
    }
}

/// μ and the nodeless verdict.
pub fn classify_mu(wf: &WFunction) -> (f64, Verdict) {
    let mu = wf.mu;
    let verdict = match wf.mu_case {
        MuCase::BoundSeed => {
            if mu.abs() <= BORDER_TOL || (mu + 1.0).abs() <= BORDER_TOL {
                Verdict::BorderDelete
            } else if mu > -1.0 && mu < 0.0 {
                Verdict::Singular
            } else {
                Verdict::Nonsingular
            }
        }
        MuCase::RightDecaying | MuCase::LeftDecaying => {
            if mu.abs() <= BORDER_TOL {
                Verdict::BorderDelete
            } else if mu < 0.0 {
                Verdict::Singular
            } else {
                Verdict::Nonsingular
            }
        }
    };
    (mu, verdict)
}

/// A complete confluent transformation.
#[derive(Debug, Clone)]
pub struct TransformResult {
    pub spec: PotentialSpec,
    pub wf: WFunction,
    pub partner: PartnerPotential,
    pub scenario: Scenario,
    /// Eₙ for bound seeds, ε otherwise.
    pub affected_level: f64,
}

/// Builds the kernel, classifies it and assembles the partner potential.
pub fn transform(spec: &PotentialSpec, choice: SeedChoice, anchor: Option<Anchor>, w0: f64) -> Result<TransformResult> {
    let wf = WFunction::new(spec, choice, anchor, w0)?;
    let (mu, verdict) = classify_mu(&wf);
    let scenario = match (wf.mu_case, verdict) {
        (_, Verdict::Singular) => return Err(Error::SingularTransform { mu }),
        (MuCase::BoundSeed, Verdict::Nonsingular) => Scenario::Isospectral,
        (MuCase::BoundSeed, Verdict::BorderDelete) => Scenario::Delete,
        // at μ = 0 the would-be created state is not normalizable
        (_, Verdict::BorderDelete) => return Err(Error::SingularTransform { mu }),
        (_, Verdict::Nonsingular) => Scenario::Create,
    };
    let partner = partner_potential(spec, &wf)?;
    Ok(TransformResult {
        spec: *spec,
        affected_level: wf.epsilon,
        wf,
        partner,
        scenario,
    })
}

#[cfg(test)]
mod tests;
