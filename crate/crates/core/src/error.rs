use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("hypergeometric series does not converge at z = {z}")]
    NonConvergent { z: f64 },

    #[error("hypergeometric denominator (c)_n vanishes at n = {n} (c = {c}) before the series truncates")]
    ParameterPole { c: f64, n: usize },

    #[error("series did not reach rel_tol within {max_terms} terms")]
    MaxTermsExceeded { max_terms: usize },

    #[error("Gamma function pole at x = {x}")]
    GammaPole { x: f64 },

    #[error("argument outside domain: {0}")]
    DomainError(String),

    #[error("invalid potential parameters: {0}")]
    InvalidSpec(String),

    #[error("level n = {n} is not a bound state of this potential")]
    InvalidLevel { n: usize },

    #[error("factorization energy {epsilon} gives a complex exponent (requires epsilon < {threshold})")]
    ComplexExponent { epsilon: f64, threshold: f64 },

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    #[error("singular transformation: mu = {mu} puts a zero in w(x)")]
    SingularTransform { mu: f64 },

    #[error("transformed state is not square integrable")]
    NonNormalizable,

    #[error("failed to converge: {0}")]
    ConvergenceFailure(String),

    #[error("window too small: eigenvalue {eigenvalue} has relative mass {mass:e} in the outer 5% of the window")]
    WindowTooSmall { eigenvalue: f64, mass: f64 },

    #[error("invalid request: {0}")]
    InvalidRequest(String),
}

pub type Result<T> = std::result::Result<T, Error>;
