use super::*;
use crate::function::{count_sign_changes, linspace};
use crate::quadrature::QuadOptions;

fn rm() -> PotentialSpec {
    PotentialSpec::rosen_morse(10.0, 15.0).unwrap()
}
fn eck() -> PotentialSpec {
    PotentialSpec::eckart(4.0, 60.0).unwrap()
}
fn minus() -> BetaSign {
    BetaSign::Minus
}

fn fig(k: usize) -> TransformResult {
    match k {
        1 => transform(&rm(), SeedChoice::Bound { n: 2 }, None, -0.1),
        2 => transform(&rm(), SeedChoice::Bound { n: 2 }, None, 0.0),
        3 => transform(&rm(), SeedChoice::RightDecaying { epsilon: -226.0, beta_sign: minus() }, None, 0.1),
        4 => transform(&eck(), SeedChoice::Bound { n: 0 }, None, -0.1),
        5 => transform(&eck(), SeedChoice::Bound { n: 0 }, None, 0.0),
        6 => transform(&eck(), SeedChoice::RightDecaying { epsilon: -409.0, beta_sign: minus() }, None, 0.01),
        _ => unreachable!(),
    }
    .unwrap()
}

fn window(spec: &PotentialSpec) -> (f64, f64) {
    spec.default_window()
}

/// Independent ∫ₐᵇ f² split into unit pieces.
fn quad_sq(f: &dyn RealFunction, a: f64, b: f64) -> f64 {
    let g = |x: f64| f.value(x).unwrap().powi(2);
    let opts = QuadOptions::precise();
    let n = ((b - a).abs().ceil() as usize).max(1);
    let h = (b - a) / n as f64;
    (0..n).map(|i| integrate(g, a + i as f64 * h, a + (i + 1) as f64 * h, &opts).unwrap().value).sum()
}

#[test]
fn finite_anchor_reproduces_w0() {
    for (spec, choice, x0) in [
        (rm(), SeedChoice::Bound { n: 1 }, 0.7),
        (eck(), SeedChoice::Bound { n: 1 }, 1.3),
        (rm(), SeedChoice::RightDecaying { epsilon: -226.0, beta_sign: minus() }, -0.4),
        (rm(), SeedChoice::RightDecaying { epsilon: -150.5, beta_sign: minus() }, 0.4),
    ] {
        let wf = WFunction::new(&spec, choice, Some(Anchor::Finite(x0)), 0.37).unwrap();
        assert_eq!(wf.w_eval(x0).unwrap(), 0.37);
        assert_eq!(wf.clone().quadrature_only().w_eval(x0).unwrap(), 0.37);
    }
}

#[test]
fn case_i_limits() {
    let wf = WFunction::new(&rm(), SeedChoice::Bound { n: 2 }, None, -0.1).unwrap();
    assert!((wf.w_eval(40.0).unwrap() + 1.1).abs() < 1e-12);
    assert!((wf.w_eval(-40.0).unwrap() + 0.1).abs() < 1e-12);
    assert!((wf.mu + 1.1).abs() < 1e-14);
    assert!((wf.clone().quadrature_only().w_eval(40.0).unwrap() + 1.1).abs() < 1e-9);
}

#[test]
fn closed_forms_match_quadrature_on_every_scenario_grid() {
    for k in 1..=6 {
        let r = fig(k);
        assert!(r.wf.has_closed_form(), "fig{k}");
        let quad = r.wf.clone().quadrature_only();
        let (a, b) = window(&r.spec);
        let mut worst = 0.0f64;
        for x in linspace(a, b, 200) {
            let c = r.wf.w_eval(x).unwrap();
            let q = quad.w_eval(x).unwrap();
            worst = worst.max((c - q).abs() / q.abs().max(1.0));
        }
        assert!(worst <= 1e-8, "fig{k}: {worst:e}");
    }
}

#[test]
fn rm_bound_closed_form_vs_independent_quadrature() {
    let spec = rm();
    let psi = spec.bound_state(2).unwrap();
    for x in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        let w = analytic_w_rm_bound(&spec, 2, 0.0, x).unwrap();
        let q = quad_sq(&psi, -60.0, x);
        assert!((-w - q).abs() < 1e-8, "x={x}: {} vs {q}", -w);
    }
    assert!((analytic_w_rm_bound(&spec, 2, 0.3, -45.0).unwrap() - 0.3).abs() < 1e-15);
    assert!((analytic_w_rm_bound(&spec, 2, 0.3, 45.0).unwrap() + 0.7).abs() < 1e-13);
    assert!(analytic_w_rm_bound(&eck(), 0, 0.0, 1.0).is_err());
}

#[test]
fn rm_scatter_closed_form() {
    let spec = rm();
    let fe = crate::seeds::factorization_params(&spec, -226.0, minus()).unwrap();
    let tail = SeedTail::new(&fe).unwrap();
    assert_eq!(tail.degree(), Some(9));
    let u = crate::seeds::seed_u1(&fe).unwrap();
    for x in [-1.0, 0.0, 1.0] {
        let w = analytic_w_rm_scatter(&fe, 0.0, x).unwrap();
        let q = quad_sq(&u, x, 30.0);
        assert!(((w - q) / q).abs() < 1e-8, "x={x}: {w} vs {q}");
    }
    assert!((analytic_w_rm_scatter(&fe, 0.1, 40.0).unwrap() - 0.1).abs() < 1e-15);
    // non-terminating: the series works on the right half, falls back elsewhere
    let fe = crate::seeds::factorization_params(&spec, -150.5, minus()).unwrap();
    let u = crate::seeds::seed_u1(&fe).unwrap();
    let w = analytic_w_rm_scatter(&fe, 0.0, 1.0).unwrap();
    let q = quad_sq(&u, 1.0, 30.0);
    assert!(((w - q) / q).abs() < 1e-8);
    assert!(analytic_w_rm_scatter(&fe, 0.0, -1.0).is_err());
}

#[test]
fn eckart_bound_closed_form() {
    let spec = eck();
    let psi = spec.bound_state(0).unwrap();
    for x in [0.2, 0.5, 1.0] {
        let w = analytic_w_eckart_bound(&spec, 0, 0.0, x).unwrap();
        let q = quad_sq(&psi, 0.0, x);
        assert!((-w - q).abs() < 1e-8, "x={x}: {} vs {q}", -w);
    }
    assert!((analytic_w_eckart_bound(&spec, 0, 0.2, 1e-6).unwrap() - 0.2).abs() < 1e-15);
    assert!((analytic_w_eckart_bound(&spec, 0, 0.2, 40.0).unwrap() + 0.8).abs() < 1e-12);
    for n in 1..4 {
        let psi = spec.bound_state(n).unwrap();
        let w = analytic_w_eckart_bound(&spec, n, 0.0, 0.8).unwrap();
        let q = quad_sq(&psi, 0.0, 0.8);
        assert!((-w - q).abs() < 1e-8, "n={n}");
    }
}

#[test]
fn eckart_scatter_closed_form() {
    let spec = eck();
    let fe = crate::seeds::factorization_params(&spec, -409.0, minus()).unwrap();
    assert_eq!(SeedTail::new(&fe).unwrap().degree(), Some(6));
    let u = crate::seeds::seed_u1(&fe).unwrap();
    for x in [0.3, 0.7, 1.5] {
        let w = analytic_w_eckart_scatter(&fe, 0.0, x).unwrap();
        let q = quad_sq(&u, x, 30.0);
        assert!(((w - q) / q).abs() < 1e-8, "x={x}: {w} vs {q}");
    }
    assert!((analytic_w_eckart_scatter(&fe, 0.01, 40.0).unwrap() - 0.01).abs() < 1e-15);
}

#[test]
fn mu_classification_examples() {
    let spec = rm();
    let verdict = |w0: f64| classify_mu(&WFunction::new(&spec, SeedChoice::Bound { n: 2 }, None, w0).unwrap());
    let (mu, v) = verdict(-0.1);
    assert!((mu + 1.1).abs() < 1e-14);
    assert_eq!(v, Verdict::Nonsingular);
    let (mu, v) = verdict(0.0);
    assert_eq!(mu, -1.0);
    assert_eq!(v, Verdict::BorderDelete);
    assert_eq!(verdict(1.0).1, Verdict::BorderDelete);
    assert_eq!(verdict(1.5).1, Verdict::Nonsingular);
    let (mu, v) = verdict(0.5);
    assert!((mu + 0.5).abs() < 1e-14);
    assert_eq!(v, Verdict::Singular);
    let wf = WFunction::new(&spec, SeedChoice::Bound { n: 2 }, None, 0.5).unwrap();
    let ws: Vec<f64> = linspace(-15.0, 15.0, 1001).iter().map(|&x| wf.w_eval(x).unwrap()).collect();
    assert_eq!(count_sign_changes(&ws), 1);
    assert!(matches!(
        transform(&spec, SeedChoice::Bound { n: 2 }, None, 0.5),
        Err(Error::SingularTransform { .. })
    ));

    let create = |w0: f64| {
        WFunction::new(&spec, SeedChoice::RightDecaying { epsilon: -226.0, beta_sign: minus() }, None, w0).unwrap()
    };
    assert_eq!(classify_mu(&create(0.1)), (0.1, Verdict::Nonsingular));
    assert_eq!(classify_mu(&create(0.0)).1, Verdict::BorderDelete);
    assert_eq!(classify_mu(&create(-0.1)).1, Verdict::Singular);
    assert!(transform(&spec, SeedChoice::RightDecaying { epsilon: -226.0, beta_sign: minus() }, None, 0.0).is_err());
}

#[test]
fn scenarios_of_the_figure_configurations() {
    let expected = [
        Scenario::Isospectral,
        Scenario::Delete,
        Scenario::Create,
        Scenario::Isospectral,
        Scenario::Delete,
        Scenario::Create,
    ];
    for (k, s) in (1..=6).zip(expected) {
        assert_eq!(fig(k).scenario, s, "fig{k}");
    }
}

#[test]
fn left_decaying_seed_creates_when_w_is_negative_at_the_left_end() {
    let spec = rm();
    let choice = SeedChoice::LeftDecaying { epsilon: -150.5, beta_sign: minus() };
    let r = transform(&spec, choice, None, -0.05).unwrap();
    assert_eq!(r.scenario, Scenario::Create);
    assert!((r.wf.mu - 0.05).abs() < 1e-15);
    let ws: Vec<f64> = linspace(-15.0, 15.0, 1000).iter().map(|&x| r.wf.w_eval(x).unwrap()).collect();
    assert!(ws.windows(2).all(|p| p[1] <= p[0]));
    assert!(ws.iter().all(|&w| w < 0.0));
    let state = transformed_state(&r, StateTarget::Created).unwrap();
    assert!((windowed_norm(&spec, &state, 40.0).unwrap() - 1.0).abs() < 1e-8);
    assert!(transform(&spec, choice, None, 0.05).is_err());
}

#[test]
fn partner_is_asymptotically_flat_in_isospectral_case() {
    let r = fig(1);
    for x in [-15.0, 15.0] {
        let d = r.partner.value(x).unwrap() - r.spec.potential_value(x).unwrap();
        assert!(d.abs() < 1e-6, "x={x}: {d}");
    }
}

#[test]
fn partner_matches_log_derivative_oracle() {
    for k in [1, 3, 4, 6] {
        let r = fig(k);
        let quad = r.wf.clone().quadrature_only();
        let lnw = |x: f64| quad.w_eval(x).unwrap().abs().ln();
        let d = |x: f64, h: f64| (lnw(x + h) - 2.0 * lnw(x) + lnw(x - h)) / (h * h);
        let (a, b) = window(&r.spec);
        let mut worst = 0.0f64;
        for x in linspace(a + 0.1, b - 0.1, 150) {
            let d2 = (4.0 * d(x, 5e-4) - d(x, 1e-3)) / 3.0;
            let oracle = r.spec.potential_value(x).unwrap() - 2.0 * d2;
            let v = r.partner.value(x).unwrap();
            worst = worst.max((v - oracle).abs());
        }
        assert!(worst <= 1e-4, "fig{k}: {worst:e}");
    }
}

#[test]
fn eckart_deletion_changes_the_origin_singularity() {
    let r = fig(5);
    let coeff: Vec<f64> = [1e-3, 5e-4, 2.5e-4].iter().map(|&x| x * x * r.partner.value(x).unwrap()).collect();
    // Richardson step for the linear correction in x
    let extrapolated = 2.0 * coeff[2] - coeff[1];
    assert!((extrapolated - 30.0).abs() < 1e-2, "{coeff:?}");
    assert!((extrapolated - 12.0).abs() > 1.0);
    let iso = fig(4);
    let c: Vec<f64> = [5e-4, 2.5e-4].iter().map(|&x| x * x * iso.partner.value(x).unwrap()).collect();
    assert!((2.0 * c[1] - c[0] - 12.0).abs() < 1e-2, "{c:?}");
}

#[test]
fn transformed_states_of_the_figures() {
    let r = fig(1);
    let s = transformed_state(&r, StateTarget::SeedLevel).unwrap();
    assert!((quad_sq(&s, -40.0, 40.0) - 1.0).abs() < 1e-8);

    let r = fig(2);
    assert!(matches!(transformed_state(&r, StateTarget::SeedLevel), Err(Error::NonNormalizable)));
    let raw = transformed_state_raw(&r, StateTarget::SeedLevel).unwrap();
    let n10 = windowed_norm(&r.spec, &raw, 10.0).unwrap();
    let n20 = windowed_norm(&r.spec, &raw, 20.0).unwrap();
    assert!(n20 > 2.0 * n10, "{n10} {n20}");

    let r = fig(3);
    let s = transformed_state(&r, StateTarget::Created).unwrap();
    assert!((quad_sq(&s, -40.0, 40.0) - 1.0).abs() < 1e-8);
    let vals: Vec<f64> = linspace(-15.0, 15.0, 3001).iter().map(|&x| s.value(x).unwrap()).collect();
    assert_eq!(count_sign_changes(&vals), 0);
    assert!(s.energy < r.spec.level_energy(0).unwrap());

    let r = fig(5);
    assert!(matches!(transformed_state(&r, StateTarget::SeedLevel), Err(Error::NonNormalizable)));
    let r = fig(6);
    let s = transformed_state(&r, StateTarget::Created).unwrap();
    assert!((quad_sq(&s, 1e-6, 40.0) - 1.0).abs() < 1e-7);
}

#[test]
fn intertwined_states_solve_the_partner_equation() {
    let r = fig(1);
    let grid = linspace(-8.0, 8.0, 161);
    for m in [0, 1, 3] {
        let g = transformed_state(&r, StateTarget::OtherLevel(m)).unwrap();
        let h = 1e-3;
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for &x in &grid {
            let v = g.value(x).unwrap();
            let d2 = (4.0 * g.second_deriv(x, 0.5 * h).unwrap() - g.second_deriv(x, h).unwrap()) / 3.0;
            let res = -d2 + (r.partner.value(x).unwrap() - g.energy) * v;
            worst = worst.max(res.abs());
            scale = scale.max(v.abs());
        }
        assert!(worst / scale < 1e-3, "m={m}: {}", worst / scale);
        // analytic derivative of B⁺ψ against a difference quotient
        let x = 0.37;
        let fd = (g.value(x + 1e-6).unwrap() - g.value(x - 1e-6).unwrap()) / 2e-6;
        assert!((fd - g.deriv(x).unwrap()).abs() < 1e-6 * scale.max(1.0));
    }
    assert!(transformed_state(&r, StateTarget::OtherLevel(2)).is_err());
}

#[test]
fn intertwiner_identities() {
    let r = fig(1);
    let data = IntertwinerData::new(&r.wf);
    let eta = data.eta();
    for x in linspace(-10.0, 10.0, 41) {
        let u = r.wf.seed.value(x).unwrap();
        let w = r.wf.w_eval(x).unwrap();
        let e = eta.value(x).unwrap();
        assert!((e - u * u / w).abs() <= 1e-10 * e.abs().max(1e-300));
        // η′ = η² + 2gη
        let g = r.wf.seed.deriv(x).unwrap() / u;
        let d = eta.deriv(x).unwrap();
        assert!((d - e * e - 2.0 * g * e).abs() < 1e-6 * d.abs().max(1.0));
        let fd = (eta.value(x + 1e-5).unwrap() - eta.value(x - 1e-5).unwrap()) / 2e-5;
        assert!((fd - d).abs() < 1e-5 * d.abs().max(1.0));
        let gm = data.gamma();
        let fd = (gm.value(x + 1e-5).unwrap() - gm.value(x - 1e-5).unwrap()) / 2e-5;
        let gd = gm.deriv(x).unwrap();
        assert!((fd - gd).abs() < 1e-5 * gd.abs().max(1.0));
    }
}

/// Gaussian bump with analytic first derivative.
struct Bump {
    c: f64,
    s: f64,
}

impl RealFunction for Bump {
    fn eval(&self, x: f64) -> Result<Eval> {
        let y = (x - self.c) / self.s;
        let v = (-y * y).exp();
        Ok(Eval::new(v, -2.0 * y / self.s * v))
    }
}

#[test]
fn intertwining_relation_on_smooth_bumps() {
    let r = fig(1);
    let data = IntertwinerData::new(&r.wf);
    let spec = r.spec;
    let h = 1e-3;
    let d2 = |f: &dyn Fn(f64) -> f64, x: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    let d1 = |f: &dyn Fn(f64) -> f64, x: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    for (c, s) in [(-3.0, 0.9), (-1.2, 0.7), (0.0, 1.1), (1.7, 0.8), (3.5, 1.0)] {
        let bump = Bump { c, s };
        let f = |x: f64| bump.value(x).unwrap();
        let eta = |x: f64| data.eta_eval(x).unwrap().value;
        let gamma = |x: f64| data.gamma_eval(x).unwrap().value;
        let bf = |x: f64| d2(&f, x) + eta(x) * d1(&f, x) + gamma(x) * f(x);
        let hf = |x: f64| -d2(&f, x) + spec.potential_value(x).unwrap() * f(x);
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for x in linspace(c - 4.0 * s, c + 4.0 * s, 81) {
            let lhs = -d2(&bf, x) + r.partner.value(x).unwrap() * bf(x);
            let rhs = d2(&hf, x) + eta(x) * d1(&hf, x) + gamma(x) * hf(x);
            worst = worst.max((lhs - rhs).abs());
            scale = scale.max(lhs.abs()).max(rhs.abs());
        }
        assert!(worst <= 1e-3 * scale, "bump at {c}: {worst:e} vs scale {scale:e}");
    }
}

#[test]
fn w_is_monotone_with_derivative_minus_u_squared() {
    for k in 1..=6 {
        let r = fig(k);
        let (a, b) = window(&r.spec);
        let grid = linspace(a, b, 1000);
        let ws: Vec<f64> = grid.iter().map(|&x| r.wf.w_eval(x).unwrap()).collect();
        assert!(ws.windows(2).all(|p| p[1] <= p[0]), "fig{k}");
        let h = 1e-3;
        let mut worst = 0.0f64;
        for &x in grid.iter().skip(1).step_by(10) {
            // difference quotients of the x⁻⁶ growth at the origin are unreliable
            if x < 0.1 && matches!(r.spec, PotentialSpec::Eckart { .. }) {
                continue;
            }
            let d = |h: f64| (r.wf.w_eval(x + h).unwrap() - r.wf.w_eval(x - h).unwrap()) / (2.0 * h);
            let fd = (4.0 * d(0.5 * h) - d(h)) / 3.0;
            let u = r.wf.seed.value(x).unwrap();
            let scale = 1.0f64.max(u * u);
            worst = worst.max((fd + u * u).abs() / scale);
        }
        assert!(worst <= 1e-6, "fig{k}: {worst:e}");
    }
}

#[test]
fn bernoulli_equation_for_eta() {
    for k in 1..=6 {
        let r = fig(k);
        let data = IntertwinerData::new(&r.wf);
        let (a, b) = window(&r.spec);
        for x in linspace(a.max(0.05 * (a > 0.0) as i32 as f64 + a), b, 200) {
            let e = r.wf.seed.eval(x).unwrap();
            if e.value.abs() <= 1e-8 {
                continue;
            }
            let h = 1e-5;
            let eta = |y: f64| data.eta_eval(y).unwrap().value;
            let fd = (eta(x + h) - eta(x - h)) / (2.0 * h);
            let et = eta(x);
            let g = e.deriv / e.value;
            let res = fd - et * et - 2.0 * g * et;
            assert!(res.abs() <= 1e-5 * (et * et).abs().max(1.0), "fig{k} x={x}: {res:e}");
        }
    }
}

#[test]
fn created_norm_diverges_as_w0_vanishes() {
    let spec = rm();
    let choice = SeedChoice::RightDecaying { epsilon: -226.0, beta_sign: minus() };
    let mut last = 0.0;
    for w0 in [1e-1, 1e-3, 1e-5] {
        let r = transform(&spec, choice, None, w0).unwrap();
        assert!((r.wf.mu - w0).abs() < 1e-15);
        let raw = transformed_state_raw(&r, StateTarget::Created).unwrap();
        let n = windowed_norm(&spec, &raw, 30.0).unwrap();
        // ∫ u²/w² = [1/w] from −∞ to ∞ = 1/w0
        assert!((n * w0 - 1.0).abs() < 1e-8, "w0={w0}: {n}");
        assert!(n > 2.0 * last);
        last = n;
    }
}
