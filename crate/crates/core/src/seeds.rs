//! Seed solutions of Hu = εu at a real factorization energy ε below the
//! continuum: u₁ decays at +∞, u₂ decays at the left end of the domain
//! (−∞ for Rosen–Morse II, the origin for Eckart).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{Eval, RealFunction};
use crate::potentials::{tanh_split, PotentialSpec};
use crate::specfun::{hyp2f1_split_with_derivative, log_abs_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BetaSign {
    Plus,
    #[default]
    Minus,
}

impl BetaSign {
    pub fn from_value(v: f64) -> Option<Self> {
        if v == 1.0 {
            Some(Self::Plus)
        } else if v == -1.0 {
            Some(Self::Minus)
        } else {
            None
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Self::Plus => 1.0,
            Self::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorizationEnergy {
    pub spec: PotentialSpec,
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub beta_sign: BetaSign,
}

/// Energy below which both exponents α and β are real.
pub fn exponent_threshold(spec: &PotentialSpec) -> f64 {
    match *spec {
        PotentialSpec::RosenMorseII { lambda, .. } => -2.0 * lambda,
        PotentialSpec::Eckart { b, .. } => -2.0 * b,
    }
}

pub fn factorization_params(spec: &PotentialSpec, epsilon: f64, beta_sign: BetaSign) -> Result<FactorizationEnergy> {
    let threshold = exponent_threshold(spec);
    if !(epsilon < threshold) {
        return Err(Error::ComplexExponent { epsilon, threshold });
    }
    let (alpha2, beta2) = match *spec {
        PotentialSpec::RosenMorseII { lambda, .. } => (2.0 * lambda - epsilon, -(epsilon + 2.0 * lambda)),
        PotentialSpec::Eckart { b, .. } => (-(epsilon + 2.0 * b), 2.0 * b - epsilon),
    };
    Ok(FactorizationEnergy {
        spec: *spec,
        epsilon,
        alpha: alpha2.sqrt(),
        beta: beta_sign.value() * beta2.sqrt(),
        beta_sign,
    })
}

fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    let mut log = 0.0;
    let mut sign = 1.0;
    for &x in num {
        let (l, s) = log_abs_gamma(x)?;
        log += l;
        sign *= s;
    }
    for &x in den {
        let (l, s) = log_abs_gamma(x)?;
        log -= l;
        sign *= s;
    }
    Ok(sign * log.exp())
}

/// Coefficient of ψ⁻ in u₂ = ψ⁺ − D⁻ψ⁻, from the exponents directly.
///
/// For Rosen–Morse the Gamma quotient is evaluated with |β|: the closed
/// form cancels the growing branch at −∞ only for β > 0, and
/// ψ±(β) = 2^β ψ±(−β) lets u₂ be rescaled afterwards.
pub fn dminus_from_exponents(spec: &PotentialSpec, alpha: f64, beta: f64) -> Result<f64> {
    match *spec {
        PotentialSpec::RosenMorseII { s, .. } => {
            let b = beta.abs();
            let num = [1.0 + alpha, -s + 0.5 * (b - alpha), s + 1.0 + 0.5 * (b - alpha)];
            let den = [1.0 - alpha, -s + 0.5 * (b + alpha), s + 1.0 + 0.5 * (b + alpha)];
            Ok(2f64.powf(alpha) * gamma_ratio(&num, &den)?)
        }
        PotentialSpec::Eckart { a, .. } => {
            let num = [1.0 + alpha, a - 0.5 * (alpha - beta), a - 0.5 * (alpha + beta)];
            let den = [1.0 - alpha, a + 0.5 * (alpha + beta), a + 0.5 * (alpha - beta)];
            gamma_ratio(&num, &den)
        }
    }
}

pub fn dminus_coefficient(fe: &FactorizationEnergy) -> Result<f64> {
    dminus_from_exponents(&fe.spec, fe.alpha, fe.beta)
}

/// Prefactor exp(ln_pref) times a ₂F₁ in a variable `z` with dz/dx = `dz`.
fn hyp_term(ln_pref: f64, dln_pref: f64, abc: (f64, f64, f64), z: f64, omz: f64, dz: f64) -> Result<Eval> {
    let pref = ln_pref.exp();
    if pref == 0.0 {
        return Ok(Eval::new(0.0, 0.0));
    }
    let (f, df) = hyp2f1_split_with_derivative(abc.0, abc.1, abc.2, z, omz)?;
    Ok(Eval::new(pref * f, pref * (dln_pref * f + df * dz)))
}

/// ψ⁺ (the decaying member at +∞) of the general solution.
fn rm_psi_plus(s: f64, alpha: f64, beta: f64, x: f64) -> Result<Eval> {
    let (_, omt, opt) = tanh_split(x);
    let ln_pref = 0.5 * alpha * omt.ln() + 0.5 * beta * opt.ln();
    let dln = -0.5 * alpha * opt + 0.5 * beta * omt;
    let m = 0.5 * (alpha + beta);
    hyp_term(ln_pref, dln, (-s + m, s + 1.0 + m, 1.0 + alpha), 0.5 * omt, 0.5 * opt, -0.5 * omt * opt)
}

fn rm_psi_minus(s: f64, alpha: f64, beta: f64, x: f64) -> Result<Eval> {
    let (_, omt, opt) = tanh_split(x);
    let ln_pref = -0.5 * alpha * omt.ln() + 0.5 * beta * opt.ln();
    let dln = 0.5 * alpha * opt + 0.5 * beta * omt;
    let m = 0.5 * (beta - alpha);
    hyp_term(ln_pref, dln, (-s + m, s + 1.0 + m, 1.0 - alpha), 0.5 * omt, 0.5 * opt, -0.5 * omt * opt)
}

/// Solution decaying at −∞, expanded in (1 + tanh x)/2; `b` = |β|.
fn rm_left(s: f64, alpha: f64, b: f64, x: f64) -> Result<Eval> {
    let (_, omt, opt) = tanh_split(x);
    let ln_pref = 0.5 * alpha * omt.ln() + 0.5 * b * opt.ln();
    let dln = -0.5 * alpha * opt + 0.5 * b * omt;
    let m = 0.5 * (alpha + b);
    hyp_term(ln_pref, dln, (-s + m, s + 1.0 + m, 1.0 + b), 0.5 * opt, 0.5 * omt, 0.5 * omt * opt)
}

/// (e^(−2x), 1 − e^(−2x), 2/(e^(2x) − 1)).
fn exp_split(x: f64) -> (f64, f64, f64) {
    (((-2.0 * x).exp()), -(-2.0 * x).exp_m1(), 2.0 / (2.0 * x).exp_m1())
}

fn eckart_psi(a: f64, alpha: f64, beta: f64, sign: f64, x: f64) -> Result<Eval> {
    let (y, omy, q) = exp_split(x);
    let al = sign * alpha;
    let ln_pref = -al * x + (1.0 - a) * omy.ln();
    let dln = -al + (1.0 - a) * q;
    let abc = (1.0 - a + 0.5 * (al + beta), 1.0 - a + 0.5 * (al - beta), 1.0 + al);
    hyp_term(ln_pref, dln, abc, y, omy, -2.0 * y)
}

/// Solution vanishing at the origin, expanded in 1 − e^(−2x).
fn eckart_origin(a: f64, alpha: f64, beta: f64, x: f64) -> Result<Eval> {
    let (y, omy, q) = exp_split(x);
    let ln_pref = -alpha * x + a * omy.ln();
    let dln = -alpha + a * q;
    let abc = (a + 0.5 * (alpha - beta), a + 0.5 * (alpha + beta), 2.0 * a);
    hyp_term(ln_pref, dln, abc, omy, y, 2.0 * y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum SeedKind {
    U1,
    U2 {
        dminus: f64,
        /// Multiplies the two-term form (2^β for Rosen–Morse with β < 0).
        scale: f64,
        /// Multiplies the near-end form so it joins the two-term form.
        match_k: f64,
        junction: f64,
    },
}

/// A seed solution with analytic value and first derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Seed {
    pub fe: FactorizationEnergy,
    kind: SeedKind,
}

impl Seed {
    pub fn epsilon(&self) -> f64 {
        self.fe.epsilon
    }

    pub fn is_u1(&self) -> bool {
        matches!(self.kind, SeedKind::U1)
    }

    fn two_term(&self, x: f64, dminus: f64, scale: f64) -> Result<Eval> {
        let FactorizationEnergy { alpha, beta, .. } = self.fe;
        let (p, m) = match self.fe.spec {
            PotentialSpec::RosenMorseII { s, .. } => {
                let b = beta.abs();
                (rm_psi_plus(s, alpha, b, x)?, rm_psi_minus(s, alpha, b, x)?)
            }
            PotentialSpec::Eckart { a, .. } => (eckart_psi(a, alpha, beta, 1.0, x)?, eckart_psi(a, alpha, beta, -1.0, x)?),
        };
        Ok(Eval::new(
            scale * (p.value - dminus * m.value),
            scale * (p.deriv - dminus * m.deriv),
        ))
    }

    fn near_end(&self, x: f64) -> Result<Eval> {
        let FactorizationEnergy { alpha, beta, .. } = self.fe;
        match self.fe.spec {
            PotentialSpec::RosenMorseII { s, .. } => rm_left(s, alpha, beta.abs(), x),
            PotentialSpec::Eckart { a, .. } => eckart_origin(a, alpha, beta, x),
        }
    }
}

impl RealFunction for Seed {
    fn eval(&self, x: f64) -> Result<Eval> {
        if !self.fe.spec.contains(x) {
            return Err(Error::DomainError(format!("seed evaluated outside the domain at x = {x}")));
        }
        let FactorizationEnergy { alpha, beta, .. } = self.fe;
        match self.kind {
            SeedKind::U1 => match self.fe.spec {
                PotentialSpec::RosenMorseII { s, .. } => rm_psi_plus(s, alpha, beta, x),
                PotentialSpec::Eckart { a, .. } => eckart_psi(a, alpha, beta, 1.0, x),
            },
            SeedKind::U2 {
                dminus,
                scale,
                match_k,
                junction,
            } => {
                if x < junction {
                    let e = self.near_end(x)?;
                    Ok(Eval::new(match_k * e.value, match_k * e.deriv))
                } else {
                    self.two_term(x, dminus, scale)
                }
            }
        }
    }
}

/// u₁ with D⁺ = 1; decays like e^(−αx) at +∞.
pub fn seed_u1(fe: &FactorizationEnergy) -> Result<Seed> {
    let seed = Seed { fe: *fe, kind: SeedKind::U1 };
    // surface parameter poles at construction time
    let probe = match fe.spec {
        PotentialSpec::RosenMorseII { .. } => 0.0,
        PotentialSpec::Eckart { .. } => 1.0,
    };
    seed.eval(probe)?;
    Ok(seed)
}

/// u₂ = ψ⁺ − D⁻ψ⁻, decaying at −∞ (Rosen–Morse) or at the origin (Eckart).
///
/// The two-term form cancels catastrophically toward the decaying end, so
/// beyond a junction point the solution is evaluated from its expansion
/// about that end, scaled to join the two-term form with matching value
/// and slope.
pub fn seed_u2(fe: &FactorizationEnergy) -> Result<Seed> {
    let dminus = dminus_coefficient(fe)?;
    let (scale, junction) = match fe.spec {
        PotentialSpec::RosenMorseII { .. } => (if fe.beta < 0.0 { 2f64.powf(fe.beta) } else { 1.0 }, 0.0),
        PotentialSpec::Eckart { .. } => (1.0, 0.5 * std::f64::consts::LN_2),
    };
    let mut seed = Seed {
        fe: *fe,
        kind: SeedKind::U1,
    };
    let right = seed.two_term(junction, dminus, scale)?;
    let left = seed.near_end(junction)?;
    let norm = left.value * left.value + left.deriv * left.deriv;
    let match_k = (right.value * left.value + right.deriv * left.deriv) / norm;
    let wr = (right.value * left.deriv - right.deriv * left.value).abs();
    let wscale = (right.value * left.deriv).abs() + (right.deriv * left.value).abs();
    if !(match_k.is_finite() && wr <= 1e-8 * wscale) {
        return Err(Error::ConvergenceFailure(format!(
            "two-term u2 does not join its near-end expansion (relative Wronskian {:e})",
            wr / wscale
        )));
    }
    seed.kind = SeedKind::U2 {
        dminus,
        scale,
        match_k,
        junction,
    };
    Ok(seed)
}

/// sup over the grid of |−f″ + (V − ε) f| / max(1, sup |f|), with f″ from
/// Richardson-extrapolated central differences of the analytic f′.
pub fn schrodinger_residual(spec: &PotentialSpec, f: &dyn RealFunction, epsilon: f64, grid: &[f64]) -> Result<f64> {
    let h = 1e-3;
    let mut worst = 0.0f64;
    let mut scale = 1.0f64;
    for &x in grid {
        let v = f.value(x)?;
        let d2 = (4.0 * f.second_deriv(x, 0.5 * h)? - f.second_deriv(x, h)?) / 3.0;
        let r = -d2 + (spec.potential_value(x)? - epsilon) * v;
        worst = worst.max(r.abs());
        scale = scale.max(v.abs());
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{linspace, FnPair};
    use crate::specfun::gamma_fn;

    fn rm() -> PotentialSpec {
        PotentialSpec::rosen_morse(10.0, 15.0).unwrap()
    }
    fn eck() -> PotentialSpec {
        PotentialSpec::eckart(4.0, 60.0).unwrap()
    }

    /// Sup of the residual relative to the local scale |f| + |f″|/|V−ε|,
    /// for seeds with exponential growth across the window.
    fn local_residual(spec: &PotentialSpec, f: &dyn RealFunction, eps: f64, grid: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for &x in grid {
            let v = f.value(x).unwrap();
            let h = 1e-3;
            let d2 = (4.0 * f.second_deriv(x, 0.5 * h).unwrap() - f.second_deriv(x, h).unwrap()) / 3.0;
            let pot = spec.potential_value(x).unwrap() - eps;
            let r = (-d2 + pot * v).abs() / (d2.abs() + (pot * v).abs());
            worst = worst.max(r);
        }
        worst
    }

    #[test]
    fn figure_exponents() {
        let fe = factorization_params(&rm(), -226.0, BetaSign::Minus).unwrap();
        assert_eq!((fe.alpha, fe.beta), (16.0, -14.0));
        let fe = factorization_params(&eck(), -409.0, BetaSign::Minus).unwrap();
        assert_eq!((fe.alpha, fe.beta), (17.0, -23.0));
        let fe = factorization_params(&rm(), -226.0, BetaSign::Plus).unwrap();
        assert_eq!(fe.beta, 14.0);
    }

    #[test]
    fn threshold_is_enforced() {
        assert!(matches!(
            factorization_params(&rm(), -30.0, BetaSign::Minus),
            Err(Error::ComplexExponent { threshold, .. }) if threshold == -30.0
        ));
        assert!(factorization_params(&eck(), -100.0, BetaSign::Minus).is_err());
    }

    #[test]
    fn epsilon_round_trip() {
        let mut eps = -31.0;
        for _ in 0..20 {
            for spec in [rm(), eck()] {
                let th = exponent_threshold(&spec);
                let e = th - 1.0 + eps + 31.0;
                let fe = factorization_params(&spec, e, BetaSign::Minus).unwrap();
                let back = -((fe.alpha + fe.beta) / 2.0).powi(2) - ((fe.beta - fe.alpha) / 2.0).powi(2);
                assert!((back - e).abs() < 1e-12 * e.abs());
            }
            eps -= 17.3;
        }
    }

    #[test]
    fn dminus_matches_direct_gamma_products() {
        let fe = factorization_params(&rm(), -200.5, BetaSign::Plus).unwrap();
        let (a, b) = (fe.alpha, fe.beta);
        let s = 10.0;
        let g = |x: f64| gamma_fn(x).unwrap();
        let oracle = 2f64.powf(a) * g(1.0 + a) * g(-s + (b - a) / 2.0) * g(s + 1.0 + (b - a) / 2.0)
            / (g(1.0 - a) * g(-s + (b + a) / 2.0) * g(s + 1.0 + (b + a) / 2.0));
        let v = dminus_coefficient(&fe).unwrap();
        assert!(((v - oracle) / oracle).abs() < 1e-10);
        let neg = factorization_params(&rm(), -200.5, BetaSign::Minus).unwrap();
        assert_eq!(dminus_coefficient(&neg).unwrap(), v);

        let fe = factorization_params(&eck(), -400.3, BetaSign::Minus).unwrap();
        let (al, be, a) = (fe.alpha, fe.beta, 4.0);
        let oracle = g(1.0 + al) * g(a - (al - be) / 2.0) * g(a - (al + be) / 2.0)
            / (g(1.0 - al) * g(a + (al + be) / 2.0) * g(a + (al - be) / 2.0));
        let v = dminus_coefficient(&fe).unwrap();
        assert!(((v - oracle) / oracle).abs() < 1e-10);
    }

    #[test]
    fn dminus_pole_at_integer_exponents() {
        let fe = factorization_params(&rm(), -226.0, BetaSign::Minus).unwrap();
        assert!(matches!(dminus_coefficient(&fe), Err(Error::GammaPole { .. })));
        assert!(matches!(seed_u2(&fe), Err(Error::GammaPole { .. })));
    }

    #[test]
    fn dminus_tends_to_one_as_alpha_vanishes() {
        for spec in [rm(), eck()] {
            let mut last = f64::INFINITY;
            for k in 1..8 {
                let alpha = 10f64.powi(-k);
                let d = dminus_from_exponents(&spec, alpha, -3.7).unwrap();
                let dev = (d - 1.0).abs();
                assert!(dev < last);
                last = dev;
            }
            assert!(last < 1e-5);
        }
    }

    #[test]
    fn u1_truncates_at_figure_parameters() {
        let fe = factorization_params(&rm(), -226.0, BetaSign::Minus).unwrap();
        let m = 0.5 * (fe.alpha + fe.beta);
        assert_eq!(-10.0 + m, -9.0);
        let fe = factorization_params(&eck(), -409.0, BetaSign::Minus).unwrap();
        assert_eq!(1.0 - 4.0 + 0.5 * (fe.alpha + fe.beta), -6.0);
    }

    #[test]
    fn u1_asymptotics_rosen_morse() {
        let fe = factorization_params(&rm(), -226.0, BetaSign::Minus).unwrap();
        let u = seed_u1(&fe).unwrap();
        let x = 18.0;
        let r = u.value(x).unwrap() * (fe.alpha * x).exp();
        let limit = 2f64.powf(0.5 * (fe.alpha + fe.beta));
        assert!(((r - limit) / limit).abs() < 1e-9);
    }

    #[test]
    fn seeds_solve_the_equation() {
        let cases = [
            (rm(), -226.0, BetaSign::Minus),
            (rm(), -140.7, BetaSign::Minus),
            (rm(), -140.7, BetaSign::Plus),
            (eck(), -409.0, BetaSign::Minus),
            (eck(), -250.3, BetaSign::Minus),
        ];
        for (spec, eps, sign) in cases {
            let fe = factorization_params(&spec, eps, sign).unwrap();
            let (a, b) = spec.default_window();
            let grid = linspace(a.max(0.2), b, 301);
            let u1 = seed_u1(&fe).unwrap();
            let r = local_residual(&spec, &u1, eps, &grid);
            assert!(r < 1e-6, "u1 {} eps={eps}: {r}", spec.name());
            if let Ok(u2) = seed_u2(&fe) {
                let r = local_residual(&spec, &u2, eps, &grid);
                assert!(r < 1e-6, "u2 {} eps={eps}: {r}", spec.name());
            }
        }
    }

    #[test]
    fn u2_decays_toward_left_end_and_wronskian_is_constant() {
        for (spec, eps) in [(rm(), -140.7), (rm(), -300.2), (eck(), -320.3), (eck(), -500.9)] {
            let fe = factorization_params(&spec, eps, BetaSign::Minus).unwrap();
            let u1 = seed_u1(&fe).unwrap();
            let u2 = seed_u2(&fe).unwrap();
            let (a, b) = match spec {
                PotentialSpec::RosenMorseII { .. } => (-15.0, 15.0),
                PotentialSpec::Eckart { .. } => (1e-3, 15.0),
            };
            // last decade toward the decaying end
            let tail = match spec {
                PotentialSpec::RosenMorseII { .. } => linspace(-15.0, -13.5, 30),
                PotentialSpec::Eckart { .. } => linspace(1e-3, 1e-2, 30),
            };
            let vals: Vec<f64> = tail.iter().map(|&x| u2.value(x).unwrap().abs()).collect();
            assert!(vals.windows(2).all(|w| w[0] < w[1]), "{} eps={eps}", spec.name());
            let ws: Vec<f64> = linspace(a, b, 200)
                .iter()
                .map(|&x| {
                    let p = u1.eval(x).unwrap();
                    let q = u2.eval(x).unwrap();
                    p.value * q.deriv - p.deriv * q.value
                })
                .collect();
            let w0 = ws[100];
            assert!(w0.abs() > 0.0);
            for (i, w) in ws.iter().enumerate() {
                assert!(((w - w0) / w0).abs() < 1e-8, "{} eps={eps} i={i}: {w} vs {w0}", spec.name());
            }
        }
    }

    #[test]
    fn u1_is_proportional_to_bound_state_at_level_energy() {
        for spec in [rm(), eck()] {
            let n = 1;
            let e = spec.level_energy(n).unwrap();
            for sign in [BetaSign::Plus, BetaSign::Minus] {
                let fe = factorization_params(&spec, e, sign).unwrap();
                let u = seed_u1(&fe).unwrap();
                let psi = spec.bound_state(n).unwrap();
                let xs = match spec {
                    PotentialSpec::RosenMorseII { .. } => linspace(-4.0, 6.0, 51),
                    PotentialSpec::Eckart { .. } => linspace(0.05, 6.0, 51),
                };
                let ratios: Vec<f64> = xs
                    .iter()
                    .map(|&x| u.value(x).unwrap() / psi.value(x).unwrap())
                    .filter(|r| r.is_finite())
                    .collect();
                let r0 = ratios[ratios.len() / 2];
                for r in &ratios {
                    assert!(((r - r0) / r0).abs() < 1e-6, "{}: {r} vs {r0}", spec.name());
                }
            }
        }
    }

    #[test]
    fn riccati_relation_for_log_derivative() {
        for (spec, eps) in [(rm(), -226.0), (eck(), -409.0), (eck(), -250.3)] {
            let fe = factorization_params(&spec, eps, BetaSign::Minus).unwrap();
            let u = seed_u1(&fe).unwrap();
            let g = FnPair(|x: f64| {
                let e = u.eval(x)?;
                Ok(Eval::new(e.deriv / e.value, 0.0))
            });
            let (a, b) = spec.default_window();
            for x in linspace(a.max(0.2), b, 97) {
                let e = u.eval(x).unwrap();
                if e.value.abs() < 1e-10 {
                    continue;
                }
                let h = 1e-4;
                let gp = (g.value(x + h).unwrap() - g.value(x - h).unwrap()) / (2.0 * h);
                let gv = e.deriv / e.value;
                let rhs = spec.potential_value(x).unwrap() - eps;
                assert!((gp + gv * gv - rhs).abs() < 1e-6 * rhs.abs().max(1.0), "x={x}");
            }
        }
    }

    #[test]
    fn residual_examples() {
        let spec = rm();
        let grid = linspace(-12.0, 12.0, 241);
        let psi = spec.bound_state(2).unwrap();
        assert!(schrodinger_residual(&spec, &psi, psi.energy, &grid).unwrap() < 1e-6);
        let fe = factorization_params(&spec, -226.0, BetaSign::Minus).unwrap();
        let u = seed_u1(&fe).unwrap();
        assert!(schrodinger_residual(&spec, &u, -226.0, &linspace(-3.0, 12.0, 151)).unwrap() < 1e-6);
        let gauss = FnPair(|x: f64| Ok(Eval::new((-x * x).exp(), -2.0 * x * (-x * x).exp())));
        assert!(schrodinger_residual(&spec, &gauss, 0.0, &grid).unwrap() > 1e-2);
    }
}
