//! Special functions needed by the closed forms: Pochhammer symbols,
//! generalized binomials, Gamma, ₂F₁, incomplete Beta and Jacobi polynomials.

mod beta;
mod gamma;
mod hypergeometric;
mod jacobi;

pub use beta::{beta_fn, beta_power_segment, incomplete_beta, incomplete_beta_split};
pub use gamma::{gamma_fn, log_abs_gamma, nonpositive_integer};
pub use hypergeometric::{
    gauss_2f1, hyp2f1_split, hyp2f1_split_with_derivative, transform_2f1, truncation_degree,
    SeriesPolicy,
};
pub use jacobi::{jacobi_p, jacobi_p_split, jacobi_p_split_with_derivative};

/// Rising factorial a(a+1)…(a+n-1).
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + k as f64))
}

/// Generalized binomial coefficient with real upper index,
/// p(p-1)…(p-q+1)/q!.
pub fn binomial_real(p: f64, q: usize) -> f64 {
    (0..q).fold(1.0, |acc, k| acc * (p - k as f64) / (k as f64 + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert_eq!(pochhammer(-9.0, 10), 0.0);
        assert_ne!(pochhammer(-9.0, 9), 0.0);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_real(3.7, 0), 1.0);
        assert_eq!(binomial_real(5.0, 2), 10.0);
        let p = 9.875;
        let via_gamma =
            gamma_fn(p + 1.0).unwrap() / (gamma_fn(4.0).unwrap() * gamma_fn(p - 2.0).unwrap());
        assert!(((binomial_real(p, 3) - via_gamma) / via_gamma).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn pochhammer_step(a in -30.0f64..30.0, n in 0usize..40) {
            let lhs = pochhammer(a, n + 1);
            let rhs = pochhammer(a, n) * (a + n as f64);
            prop_assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(rhs.abs()));
        }
    }
}
