//! Globally adaptive Gauss–Kronrod (7/15) quadrature on finite intervals,
//! plus a tail-cutoff search for integrands with exponential tails.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_intervals: 4000,
        }
    }
}

impl QuadOptions {
    pub fn precise() -> Self {
        Self {
            abs_tol: 0.0,
            rel_tol: 1e-13,
            max_intervals: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut gauss = fc * WG[3];
    let mut kron = fc * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(center - dx) + f(center + dx);
        kron += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    let value = kron * half;
    if !value.is_finite() {
        return Err(Error::QuadratureFailure(format!(
            "non-finite integrand on [{a}, {b}]"
        )));
    }
    let error = ((kron - gauss) * half).abs();
    Ok(Segment { a, b, value, error })
}

/// ∫ₐᵇ f. Fails with [`Error::QuadratureFailure`] when the integrand is
/// not finite or the tolerance is not met within `max_intervals`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0 });
    }
    if b < a {
        let r = integrate(f, b, a, opts)?;
        return Ok(QuadResult { value: -r.value, error: r.error });
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::QuadratureFailure("infinite limits need a tail cutoff".into()));
    }
    let first = kronrod(&f, a, b)?;
    let mut total = first.value;
    let mut err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    while err > opts.abs_tol.max(opts.rel_tol * total.abs()) {
        if heap.len() >= opts.max_intervals {
            return Err(Error::QuadratureFailure(format!(
                "tolerance not met on [{a}, {b}] (estimate {total:e}, error {err:e})"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval cannot be split further in floating point
            return Ok(QuadResult { value: total, error: err });
        }
        let left = kronrod(&f, worst.a, mid)?;
        let right = kronrod(&f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to shed accumulated rounding from the running updates
    let value = heap.iter().map(|s| s.value).sum();
    let error = heap.iter().map(|s| s.error).sum();
    Ok(QuadResult { value, error })
}

/// Walks from `start` in direction `dir` (+1 or -1) until |f| falls below
/// `rel` times the largest |f| seen on the way. Returns the cutoff point.
pub fn tail_cutoff<F: Fn(f64) -> f64>(f: F, start: f64, dir: f64, limit: f64, rel: f64) -> f64 {
    let mut peak = f(start).abs();
    let mut step = 0.25;
    let mut x = start;
    loop {
        let next = x + dir * step;
        if (dir > 0.0 && next >= limit) || (dir < 0.0 && next <= limit) {
            return limit;
        }
        x = next;
        let v = f(x).abs();
        if !v.is_finite() {
            return x;
        }
        peak = peak.max(v);
        if v <= rel * peak && x != start {
            return x;
        }
        step = (step * 1.25).min(2.0);
    }
}
