//! Independent eigenvalue oracle: Dirichlet finite differences on a
//! truncated window, refined by Numerov shooting.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{count_sign_changes, linspace, RealFunction};

/// Uniform grid including both Dirichlet end points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(Error::InvalidRequest(format!("grid needs x_min < x_max, got [{x_min}, {x_max}]")));
        }
        if n_points < 3 {
            return Err(Error::InvalidRequest(format!("grid needs at least 3 points, got {n_points}")));
        }
        Ok(Self { x_min, x_max, n_points })
    }

    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn points(&self) -> Vec<f64> {
        linspace(self.x_min, self.x_max, self.n_points)
    }

    /// Same window with the spacing halved.
    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FdMatrix,
    NumerovShooting,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub method: Method,
    pub grid: Grid,
    /// Richardson error estimate |E(h/2) − E(h)|/3 (finite differences) or
    /// final bisection bracket width (Numerov).
    pub residuals: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    pub method: Method,
    /// Fail with [`Error::WindowTooSmall`] when an eigenvector leaks into
    /// the outer 5% of the window.
    pub check_window: bool,
    /// The left end is the natural boundary of the domain, so the
    /// eigenfunctions genuinely live next to it and no leak check applies.
    pub natural_left: bool,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            method: Method::NumerovShooting,
            check_window: true,
            natural_left: false,
        }
    }
}

const WINDOW_MASS_TOL: f64 = 1e-4;
const NUMEROV_TOL: f64 = 1e-9;

/// −d²/dx² + v on the interior points, as a symmetric tridiagonal matrix
/// with constant off-diagonal −1/h².
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn new(v: &[f64], h: f64) -> Self {
        let inv = 1.0 / (h * h);
        Self {
            diag: v.iter().map(|&vi| 2.0 * inv + vi).collect(),
            off: -inv,
        }
    }

    /// Number of eigenvalues below λ (negative pivots of T − λ).
    fn count_below(&self, lambda: f64) -> usize {
        let off2 = self.off * self.off;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - lambda } else { d - lambda - off2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * off2.sqrt();
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn bounds(&self) -> (f64, f64) {
        let lo = self.diag.iter().fold(f64::INFINITY, |m, &d| m.min(d)) - 2.0 * self.off.abs();
        let hi = self.diag.iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d)) + 2.0 * self.off.abs();
        (lo, hi)
    }

    /// The k-th (0-based) eigenvalue by bisection on the Sturm count.
    fn eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.bounds();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solves (T − σ)x = b by forward elimination.
    fn solve_shifted(&self, sigma: f64, b: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let mut c = vec![0.0; n];
        let mut y = vec![0.0; n];
        let tiny = f64::EPSILON * self.off.abs();
        let mut piv = self.diag[0] - sigma;
        if piv.abs() < tiny {
            piv = tiny;
        }
        c[0] = self.off / piv;
        y[0] = b[0] / piv;
        for i in 1..n {
            piv = self.diag[i] - sigma - self.off * c[i - 1];
            if piv.abs() < tiny {
                piv = tiny;
            }
            c[i] = self.off / piv;
            y[i] = (b[i] - self.off * y[i - 1]) / piv;
        }
        for i in (0..n - 1).rev() {
            y[i] -= c[i] * y[i + 1];
        }
        y
    }

    /// Eigenvector for an accurate eigenvalue by inverse iteration.
    fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let sigma = lambda + 1e-10 * lambda.abs().max(1.0);
        let mut x = vec![1.0; self.diag.len()];
        for _ in 0..3 {
            x = self.solve_shifted(sigma, &x);
            let norm = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }
}

fn sample(v: &dyn Fn(f64) -> Result<f64>, grid: &Grid) -> Result<Vec<f64>> {
    let pts = grid.points();
    let vals = pts[1..pts.len() - 1].iter().map(|&x| v(x)).collect::<Result<Vec<_>>>()?;
    if let Some(i) = vals.iter().position(|x| !x.is_finite()) {
        return Err(Error::DomainError(format!("potential is not finite at x = {}", pts[i + 1])));
    }
    Ok(vals)
}

/// Relative mass of the vector in the outer 5% at each end.
fn outer_mass(x: &[f64], natural_left: bool) -> f64 {
    let n = x.len();
    let edge = (n / 20).max(1);
    let total: f64 = x.iter().map(|v| v * v).sum();
    let right: f64 = x[n - edge..].iter().map(|v| v * v).sum();
    let left: f64 = if natural_left { 0.0 } else { x[..edge].iter().map(|v| v * v).sum() };
    left.max(right) / total
}

/// Number of Numerov sign changes on (x_min, x_max] at energy e, which
/// equals the number of discrete Dirichlet eigenvalues below e.
fn numerov_count(v: &[f64], h: f64, e: f64) -> Result<usize> {
    let c = h * h / 12.0;
    let g = |i: usize| 1.0 - c * (v[i] - e);
    let n = v.len();
    // ψ at the interior points followed by the right end point
    let mut prev = 0.0;
    let mut cur = 1e-30;
    let mut g_prev = 1.0;
    let mut g_cur = g(0);
    let mut count = 0;
    let mut last_sign = 1.0;
    for i in 0..n {
        let g_next = if i + 1 < n { g(i + 1) } else { 1.0 };
        if g_next <= 0.0 {
            return Err(Error::ConvergenceFailure(format!(
                "Numerov step unstable at interior point {}; refine the grid",
                i + 1
            )));
        }
        let next = (2.0 * (1.0 + 5.0 * c * (v[i] - e)) * cur - g_prev * prev) / g_next;
        if next != 0.0 {
            if next.signum() != last_sign {
                count += 1;
            }
            last_sign = next.signum();
        }
        prev = cur;
        cur = next;
        if cur.abs() > 1e200 {
            prev *= 1e-200;
            cur *= 1e-200;
        }
        g_prev = g_cur;
        g_cur = g_next;
    }
    Ok(count)
}

/// Refines the k-th eigenvalue near `guess` by bisection on the Numerov count.
fn numerov_refine(v: &[f64], h: f64, k: usize, guess: f64) -> Result<(f64, f64)> {
    let mut delta = 1e-3 * guess.abs().max(1.0);
    let (mut lo, mut hi) = (guess - delta, guess + delta);
    let mut tries = 0;
    while numerov_count(v, h, lo)? > k || numerov_count(v, h, hi)? <= k {
        tries += 1;
        if tries > 60 {
            return Err(Error::ConvergenceFailure(format!("no Numerov bracket for level {k} near {guess}")));
        }
        delta *= 2.0;
        lo = guess - delta;
        hi = guess + delta;
    }
    let mut iters = 0;
    while hi - lo > NUMEROV_TOL {
        iters += 1;
        if iters > 200 {
            return Err(Error::ConvergenceFailure(format!("Numerov bisection stalled for level {k}")));
        }
        let mid = 0.5 * (lo + hi);
        if numerov_count(v, h, mid)? > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((0.5 * (lo + hi), hi - lo))
}

/// The k lowest Dirichlet eigenvalues of −d²/dx² + v on the grid, with
/// Numerov refinement.
pub fn solve_spectrum(v: &dyn Fn(f64) -> Result<f64>, grid: &Grid, k: usize) -> Result<SpectrumReport> {
    solve_spectrum_with(v, grid, k, &SpectrumOptions::default())
}

pub fn solve_spectrum_with(
    v: &dyn Fn(f64) -> Result<f64>,
    grid: &Grid,
    k: usize,
    opts: &SpectrumOptions,
) -> Result<SpectrumReport> {
    let vals = sample(v, grid)?;
    let fine = match opts.method {
        Method::FdMatrix => Some(sample(v, &grid.refined())?),
        Method::NumerovShooting => None,
    };
    solve_sampled(&vals, fine.as_deref(), grid, k, opts)
}

/// `fine` holds the samples on [`Grid::refined`] for the finite-difference
/// method, whose eigenvalues are Richardson-extrapolated from h and h/2.
fn solve_sampled(vals: &[f64], fine: Option<&[f64]>, grid: &Grid, k: usize, opts: &SpectrumOptions) -> Result<SpectrumReport> {
    if k > vals.len() {
        return Err(Error::InvalidRequest(format!("{k} levels requested from {} unknowns", vals.len())));
    }
    let h = grid.h();
    let t = Tridiagonal::new(vals, h);
    let t_fine = fine.map(|f| Tridiagonal::new(f, 0.5 * h));
    let mut eigenvalues = Vec::with_capacity(k);
    let mut residuals = Vec::with_capacity(k);
    for i in 0..k {
        let lambda = t.eigenvalue(i);
        let x = t.eigenvector(lambda);
        if opts.check_window {
            let mass = outer_mass(&x, opts.natural_left);
            if mass > WINDOW_MASS_TOL {
                return Err(Error::WindowTooSmall { eigenvalue: lambda, mass });
            }
        }
        match opts.method {
            Method::FdMatrix => {
                let Some(tf) = &t_fine else {
                    return Err(Error::InvalidRequest("finite differences need the refined samples".into()));
                };
                let half = tf.eigenvalue(i);
                eigenvalues.push((4.0 * half - lambda) / 3.0);
                residuals.push((half - lambda).abs() / 3.0);
            }
            Method::NumerovShooting => {
                let (e, width) = numerov_refine(vals, h, i, lambda)?;
                eigenvalues.push(e);
                residuals.push(width);
            }
        }
    }
    if eigenvalues.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::ConvergenceFailure("eigenvalues not strictly ascending".into()));
    }
    Ok(SpectrumReport {
        eigenvalues,
        method: opts.method,
        grid: *grid,
        residuals,
    })
}

/// All eigenvalues below `cutoff`.
pub fn bound_spectrum(
    v: &dyn Fn(f64) -> Result<f64>,
    grid: &Grid,
    cutoff: f64,
    opts: &SpectrumOptions,
) -> Result<SpectrumReport> {
    let vals = sample(v, grid)?;
    let fine = match opts.method {
        Method::FdMatrix => Some(sample(v, &grid.refined())?),
        Method::NumerovShooting => None,
    };
    let k = Tridiagonal::new(&vals, grid.h()).count_below(cutoff);
    let mut report = solve_sampled(&vals, fine.as_deref(), grid, k, opts)?;
    // the plain count may include a level the extrapolation puts above the cutoff
    while report.eigenvalues.last().is_some_and(|&e| e >= cutoff) {
        report.eigenvalues.pop();
        report.residuals.pop();
    }
    Ok(report)
}

/// Outcome of matching a partner spectrum against the base spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum Comparison {
    Isospectral,
    Deleted(f64),
    Created(f64),
    Mismatch(String),
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Isospectral => write!(f, "isospectral"),
            Self::Deleted(e) => write!(f, "deleted({e:.2})"),
            Self::Created(e) => write!(f, "created({e:.2})"),
            Self::Mismatch(d) => write!(f, "mismatch({d})"),
        }
    }
}

/// Greedy nearest matching within `tol`; returns matched index pairs and
/// the unmatched indices of each list.
pub fn match_levels(base: &[f64], partner: &[f64], tol: f64) -> (Vec<(usize, usize)>, Vec<usize>, Vec<usize>) {
    let mut candidates: Vec<(f64, usize, usize)> = Vec::new();
    for (i, &a) in base.iter().enumerate() {
        for (j, &b) in partner.iter().enumerate() {
            let d = (a - b).abs();
            if d <= tol {
                candidates.push((d, i, j));
            }
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut used_a = vec![false; base.len()];
    let mut used_b = vec![false; partner.len()];
    let mut pairs = Vec::new();
    for (_, i, j) in candidates {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            pairs.push((i, j));
        }
    }
    pairs.sort();
    let free = |used: &[bool]| used.iter().enumerate().filter(|(_, u)| !**u).map(|(i, _)| i).collect();
    (pairs, free(&used_a), free(&used_b))
}

pub fn compare_spectra(base: &SpectrumReport, partner: &SpectrumReport, tol: f64) -> Comparison {
    let (a, b) = (&base.eigenvalues, &partner.eigenvalues);
    let (_, lost, gained) = match_levels(a, b, tol);
    match (lost.as_slice(), gained.as_slice()) {
        ([], []) => Comparison::Isospectral,
        ([i], []) => Comparison::Deleted(a[*i]),
        ([], [j]) => Comparison::Created(b[*j]),
        _ => Comparison::Mismatch(format!(
            "unmatched base levels {:?}, unmatched partner levels {:?}",
            lost.iter().map(|&i| a[i]).collect::<Vec<_>>(),
            gained.iter().map(|&j| b[j]).collect::<Vec<_>>()
        )),
    }
}

/// Largest |Δ| between matched levels.
pub fn max_matched_deviation(base: &[f64], partner: &[f64], tol: f64) -> f64 {
    let (pairs, _, _) = match_levels(base, partner, tol);
    pairs.iter().map(|&(i, j)| (base[i] - partner[j]).abs()).fold(0.0, f64::max)
}

/// sup |(−d²/dx² + v − e)ψ| / sup |ψ| over the interior grid points, with
/// ψ″ from Richardson-extrapolated differences of ψ′ at h = 1e−3.
pub fn eigen_residual(v: &dyn Fn(f64) -> Result<f64>, psi: &dyn RealFunction, e: f64, grid: &Grid) -> Result<f64> {
    eigen_residual_with_step(v, psi, e, grid, &|_| 1e-3)
}

/// [`eigen_residual`] with a point-dependent difference step, for
/// functions whose length scale shrinks toward a singular end point.
pub fn eigen_residual_with_step(
    v: &dyn Fn(f64) -> Result<f64>,
    psi: &dyn RealFunction,
    e: f64,
    grid: &Grid,
    step: &dyn Fn(f64) -> f64,
) -> Result<f64> {
    let pts = grid.points();
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &x in &pts[1..pts.len() - 1] {
        let h = step(x);
        let p = psi.value(x)?;
        let d2 = (4.0 * psi.second_deriv(x, 0.5 * h)? - psi.second_deriv(x, h)?) / 3.0;
        worst = worst.max((-d2 + (v(x)? - e) * p).abs());
        scale = scale.max(p.abs());
    }
    if !(scale > 0.0) {
        return Err(Error::InvalidRequest("eigenfunction vanishes on the grid".into()));
    }
    Ok(worst / scale)
}

/// Sign changes of a sampled eigenfunction.
pub fn node_count(psi: &dyn RealFunction, grid: &Grid) -> Result<usize> {
    let pts = grid.points();
    let vals = pts[1..pts.len() - 1].iter().map(|&x| psi.value(x)).collect::<Result<Vec<_>>>()?;
    Ok(count_sign_changes(&vals))
}
