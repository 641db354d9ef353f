//! Real functions of one variable with a first derivative.

use std::sync::Arc;

use crate::error::Result;

/// Value and first derivative at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eval {
    pub value: f64,
    pub deriv: f64,
}

impl Eval {
    pub fn new(value: f64, deriv: f64) -> Self {
        Self { value, deriv }
    }
}

/// Evaluator bundle exposing value and first derivative.
pub trait RealFunction: Send + Sync {
    fn eval(&self, x: f64) -> Result<Eval>;

    fn value(&self, x: f64) -> Result<f64> {
        Ok(self.eval(x)?.value)
    }

    fn deriv(&self, x: f64) -> Result<f64> {
        Ok(self.eval(x)?.deriv)
    }

    /// Second derivative by central differences of the first derivative.
    fn second_deriv(&self, x: f64, h: f64) -> Result<f64> {
        Ok((self.deriv(x + h)? - self.deriv(x - h)?) / (2.0 * h))
    }
}

pub type SharedFunction = Arc<dyn RealFunction>;

impl<T: RealFunction + ?Sized> RealFunction for Arc<T> {
    fn eval(&self, x: f64) -> Result<Eval> {
        (**self).eval(x)
    }
}

impl<T: RealFunction + ?Sized> RealFunction for &T {
    fn eval(&self, x: f64) -> Result<Eval> {
        (**self).eval(x)
    }
}

/// Adapter for a closure returning value and derivative.
pub struct FnPair<F>(pub F);

impl<F> RealFunction for FnPair<F>
where
    F: Fn(f64) -> Result<Eval> + Send + Sync,
{
    fn eval(&self, x: f64) -> Result<Eval> {
        (self.0)(x)
    }
}

/// Multiplies a function by a constant.
pub struct Scaled<F> {
    pub inner: F,
    pub factor: f64,
}

impl<F: RealFunction> RealFunction for Scaled<F> {
    fn eval(&self, x: f64) -> Result<Eval> {
        let e = self.inner.eval(x)?;
        Ok(Eval::new(self.factor * e.value, self.factor * e.deriv))
    }
}

/// Uniformly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let h = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { hi } else { lo + h * i as f64 }).collect()
        }
    }
}

/// Counts sign changes of the sampled values, ignoring exact zeros.
pub fn count_sign_changes(values: &[f64]) -> usize {
    let mut last = 0.0f64;
    let mut changes = 0;
    for &v in values {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}
