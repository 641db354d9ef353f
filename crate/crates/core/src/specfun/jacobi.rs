//! Jacobi polynomials from the explicit binomial sum
//!
//! P_n^(α,β)(x) = Σₘ C(n+α, m) C(n+β, n-m) ((x-1)/2)^(n-m) ((x+1)/2)^m,
//!
//! the same coefficient convention the kernel's S_n sums are built on.

use super::binomial_real;

/// P_n^(α,β)(x).
pub fn jacobi_p(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    jacobi_p_split(n, alpha, beta, 1.0 - x, 1.0 + x)
}

/// P_n^(α,β)(x) from `1 - x` and `1 + x` supplied separately, so callers
/// near x = ±1 keep full relative precision.
pub fn jacobi_p_split(n: usize, alpha: f64, beta: f64, one_minus_x: f64, one_plus_x: f64) -> f64 {
    let lo = -0.5 * one_minus_x; // (x-1)/2
    let hi = 0.5 * one_plus_x; // (x+1)/2
    let nf = n as f64;
    (0..=n)
        .map(|m| {
            binomial_real(nf + alpha, m)
                * binomial_real(nf + beta, n - m)
                * lo.powi((n - m) as i32)
                * hi.powi(m as i32)
        })
        .sum()
}

/// Value and x-derivative, using d/dx P_n^(α,β) = (n+α+β+1)/2 · P_{n-1}^(α+1,β+1).
pub fn jacobi_p_split_with_derivative(
    n: usize,
    alpha: f64,
    beta: f64,
    one_minus_x: f64,
    one_plus_x: f64,
) -> (f64, f64) {
    let p = jacobi_p_split(n, alpha, beta, one_minus_x, one_plus_x);
    if n == 0 {
        return (p, 0.0);
    }
    let lead = 0.5 * (n as f64 + alpha + beta + 1.0);
    let dp = lead * jacobi_p_split(n - 1, alpha + 1.0, beta + 1.0, one_minus_x, one_plus_x);
    (p, dp)
}
