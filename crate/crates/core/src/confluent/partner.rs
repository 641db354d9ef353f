//! Partner potential, intertwining operator B⁺ = d²/dx² + η d/dx + γ and
//! the eigenfunctions of the new Hamiltonian.

use super::{MuCase, TransformResult, WFunction};
use crate::error::{Error, Result};
use crate::function::{linspace, Eval, FnPair, RealFunction};
use crate::potentials::{BoundState, PotentialSpec, ECKART_X_MAX};

/// Lower end of the Eckart normalization range. States regular at the
/// origin vanish there at least like x², so the omitted piece is negligible.
const STATE_X_MIN: f64 = 1e-6;
use crate::quadrature::{integrate, tail_cutoff, QuadOptions};

/// Kernel quantities at one point. `q` is uu′/w and `eta` is u²/w.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct KernelPoint {
    pub u: f64,
    pub du: f64,
    pub w: f64,
    pub eta: f64,
    pub q: f64,
    pub v: f64,
}

pub(crate) fn kernel_point(wf: &WFunction, x: f64) -> Result<KernelPoint> {
    let e = wf.seed.eval(x)?;
    let w = wf.w_eval(x)?;
    if w == 0.0 || !w.is_finite() {
        return Err(Error::SingularTransform { mu: wf.mu });
    }
    Ok(KernelPoint {
        u: e.value,
        du: e.deriv,
        w,
        eta: e.value * e.value / w,
        q: e.value * e.deriv / w,
        v: wf.spec.potential_value(x)?,
    })
}

/// Ṽ(x) = V(x) − 2(ln w)″ = V + 4uu′/w + 2(u²/w)².
#[derive(Debug, Clone)]
pub struct PartnerPotential {
    wf: WFunction,
}

impl PartnerPotential {
    pub fn value(&self, x: f64) -> Result<f64> {
        let k = kernel_point(&self.wf, x)?;
        Ok(k.v + 4.0 * k.q + 2.0 * k.eta * k.eta)
    }

    /// Ṽ on a grid, refusing grids on which w changes sign.
    pub fn sample(&self, grid: &[f64]) -> Result<Vec<f64>> {
        let mut last_sign = 0.0;
        let mut out = Vec::with_capacity(grid.len());
        for &x in grid {
            let k = kernel_point(&self.wf, x)?;
            let sign = k.w.signum();
            if last_sign != 0.0 && sign != last_sign {
                return Err(Error::SingularTransform { mu: self.wf.mu });
            }
            last_sign = sign;
            out.push(k.v + 4.0 * k.q + 2.0 * k.eta * k.eta);
        }
        Ok(out)
    }

    pub fn kernel(&self) -> &WFunction {
        &self.wf
    }
}

pub fn partner_potential(spec: &PotentialSpec, wf: &WFunction) -> Result<PartnerPotential> {
    if wf.spec != *spec {
        return Err(Error::InvalidRequest("kernel built for a different potential".into()));
    }
    let (_, verdict) = super::classify_mu(wf);
    if verdict == super::Verdict::Singular {
        return Err(Error::SingularTransform { mu: wf.mu });
    }
    Ok(PartnerPotential { wf: wf.clone() })
}

/// η, γ and their derivatives for B⁺ in the confluent case (c = 0, ξ = 0, d = ε).
#[derive(Debug, Clone)]
pub struct IntertwinerData {
    pub wf: WFunction,
    pub epsilon: f64,
}

impl IntertwinerData {
    pub fn new(wf: &WFunction) -> Self {
        Self {
            wf: wf.clone(),
            epsilon: wf.epsilon,
        }
    }

    /// (η, η′, η″).
    pub fn eta_derivs(&self, x: f64) -> Result<(f64, f64, f64)> {
        let k = kernel_point(&self.wf, x)?;
        let d1 = 2.0 * k.q + k.eta * k.eta;
        let d2 = 2.0 * (k.du * k.du + (k.v - self.epsilon) * k.u * k.u) / k.w
            + 6.0 * k.q * k.eta
            + 2.0 * k.eta.powi(3);
        Ok((k.eta, d1, d2))
    }

    pub fn eta_eval(&self, x: f64) -> Result<Eval> {
        let (e, d1, _) = self.eta_derivs(x)?;
        Ok(Eval::new(e, d1))
    }

    /// γ = ε − V + η²/2 − η′/2 and γ′.
    pub fn gamma_eval(&self, x: f64) -> Result<Eval> {
        let (e, d1, d2) = self.eta_derivs(x)?;
        let v = self.wf.spec.potential_value(x)?;
        let dv = self.wf.spec.potential_derivative(x)?;
        Ok(Eval::new(self.epsilon - v + 0.5 * e * e - 0.5 * d1, -dv + e * d1 - 0.5 * d2))
    }

    pub fn eta(&self) -> impl RealFunction + '_ {
        FnPair(move |x| self.eta_eval(x))
    }

    pub fn gamma(&self) -> impl RealFunction + '_ {
        FnPair(move |x| self.gamma_eval(x))
    }
}

/// (B⁺f)(x) = f″ + ηf′ + γf at each grid point, f″ by Richardson-extrapolated
/// central differences of the analytic f′.
pub fn apply_intertwiner(data: &IntertwinerData, f: &dyn RealFunction, grid: &[f64]) -> Result<Vec<f64>> {
    let h = 1e-3;
    grid.iter()
        .map(|&x| {
            let e = f.eval(x)?;
            let d2 = (4.0 * f.second_deriv(x, 0.5 * h)? - f.second_deriv(x, h)?) / 3.0;
            let eta = data.eta_eval(x)?.value;
            let gamma = data.gamma_eval(x)?.value;
            Ok(d2 + eta * e.deriv + gamma * e.value)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateTarget {
    /// ψₙ/w for the seed level of a bound-seed transformation.
    SeedLevel,
    /// B⁺ψₘ for a level m other than the seed level.
    OtherLevel(usize),
    /// u/w for a state created at ε.
    Created,
}

#[derive(Debug, Clone)]
enum StateKind {
    OverW,
    Intertwined(BoundState),
}

/// An eigenfunction of the partner Hamiltonian.
#[derive(Debug, Clone)]
pub struct TransformedState {
    pub energy: f64,
    pub norm_constant: f64,
    data: IntertwinerData,
    kind: StateKind,
}

impl TransformedState {
    fn eval_raw(&self, x: f64) -> Result<Eval> {
        match &self.kind {
            StateKind::OverW => {
                // A growing scattering seed overflows u² long before u/w
                // leaves the range of doubles; by then u/w ~ 2κ/u is negligible.
                if !self.data.wf.w_eval(x)?.is_finite() {
                    return Ok(Eval::new(0.0, 0.0));
                }
                let k = kernel_point(&self.data.wf, x)?;
                Ok(Eval::new(k.u / k.w, (k.du + k.u * k.eta) / k.w))
            }
            StateKind::Intertwined(psi) => {
                let p = psi.eval(x)?;
                let (e, d1, d2) = self.data.eta_derivs(x)?;
                let v = self.data.wf.spec.potential_value(x)?;
                let k = self.data.epsilon - psi.energy + 0.5 * e * e - 0.5 * d1;
                let value = k * p.value + e * p.deriv;
                let deriv = (e * d1 - 0.5 * d2) * p.value + (k + d1) * p.deriv + e * (v - psi.energy) * p.value;
                Ok(Eval::new(value, deriv))
            }
        }
    }
}

impl RealFunction for TransformedState {
    fn eval(&self, x: f64) -> Result<Eval> {
        let e = self.eval_raw(x)?;
        Ok(Eval::new(self.norm_constant * e.value, self.norm_constant * e.deriv))
    }
}

/// ∫ f² over [−L, L] (Rosen–Morse) or [1/L, L] (Eckart half line).
pub fn windowed_norm(spec: &PotentialSpec, f: &dyn RealFunction, l: f64) -> Result<f64> {
    let (lo, hi) = match spec {
        PotentialSpec::RosenMorseII { .. } => (-l, l),
        PotentialSpec::Eckart { .. } => (1.0 / l, l),
    };
    let g = |x: f64| f.value(x).map(|v| v * v).unwrap_or(f64::NAN);
    let opts = QuadOptions {
        abs_tol: 0.0,
        rel_tol: 1e-11,
        max_intervals: 20_000,
    };
    Ok(integrate(g, lo, hi, &opts)?.value)
}

/// The unnormalized state for `target`.
pub fn transformed_state_raw(result: &TransformResult, target: StateTarget) -> Result<TransformedState> {
    let wf = &result.wf;
    let data = IntertwinerData::new(wf);
    let (kind, energy) = match target {
        StateTarget::SeedLevel => {
            if wf.mu_case != MuCase::BoundSeed {
                return Err(Error::InvalidRequest("seed level requires a bound-state seed".into()));
            }
            (StateKind::OverW, wf.epsilon)
        }
        StateTarget::Created => {
            if wf.mu_case == MuCase::BoundSeed {
                return Err(Error::InvalidRequest("created state requires a scattering seed".into()));
            }
            (StateKind::OverW, wf.epsilon)
        }
        StateTarget::OtherLevel(m) => {
            let psi = result.spec.bound_state(m)?;
            if wf.mu_case == MuCase::BoundSeed && (psi.energy - wf.epsilon).abs() < 1e-12 * psi.energy.abs() {
                return Err(Error::InvalidRequest(format!("level {m} is the seed level")));
            }
            (StateKind::Intertwined(psi), psi.energy)
        }
    };
    Ok(TransformedState {
        energy,
        norm_constant: 1.0,
        data,
        kind,
    })
}

/// The normalized state for `target`; fails with [`Error::NonNormalizable`]
/// when its square does not decay at both ends of the domain.
pub fn transformed_state(result: &TransformResult, target: StateTarget) -> Result<TransformedState> {
    let mut state = transformed_state_raw(result, target)?;
    let spec = result.spec;
    let g = |x: f64| state.eval_raw(x).map(|e| e.value * e.value).unwrap_or(f64::NAN);
    let (lo, hi) = match spec {
        PotentialSpec::RosenMorseII { .. } => (tail_cutoff(g, 0.0, -1.0, -200.0, 1e-17), tail_cutoff(g, 0.0, 1.0, 200.0, 1e-17)),
        PotentialSpec::Eckart { .. } => (STATE_X_MIN, tail_cutoff(g, 1.0, 1.0, 200.0, 1e-17).max(ECKART_X_MAX)),
    };
    let peak = linspace(lo, hi, 4001).into_iter().map(g).fold(0.0f64, |m, v| if v.is_finite() { m.max(v) } else { f64::INFINITY });
    let (glo, ghi) = (g(lo), g(hi));
    let decays = |v: f64| v.is_finite() && v <= 1e-8 * peak;
    if !(peak.is_finite() && peak > 0.0 && decays(glo) && decays(ghi)) {
        return Err(Error::NonNormalizable);
    }
    let opts = QuadOptions {
        abs_tol: 0.0,
        rel_tol: 1e-12,
        max_intervals: 20_000,
    };
    let norm2 = integrate(g, lo, hi, &opts)?.value;
    if !(norm2.is_finite() && norm2 > 0.0) {
        return Err(Error::NonNormalizable);
    }
    state.norm_constant = 1.0 / norm2.sqrt();
    Ok(state)
}
