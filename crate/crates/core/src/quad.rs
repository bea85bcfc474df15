//! Quadrature: recursive adaptive Simpson and a cumulative Simpson rule on
//! uniform grids (used for the WKB phase integrals).

use alloc::vec::Vec;

/// Adaptive Simpson quadrature with Richardson acceleration.
///
/// Subdivides until the local Simpson halving error is below the local
/// tolerance share; `max_depth` bounds the recursion on pathological input.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Composite Simpson on a uniform grid of an odd number of samples.
pub fn simpson_uniform(values: &[f64], h: f64) -> f64 {
    assert!(values.len() >= 3 && values.len() % 2 == 1);
    let mut acc = values[0] + values[values.len() - 1];
    for (i, v) in values.iter().enumerate().skip(1).take(values.len() - 2) {
        acc += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    acc * h / 3.0
}

/// Cumulative integral on a uniform grid, zero at the left edge.
///
/// Even nodes accumulate Simpson panels; odd nodes use the 3-point
/// Newton–Cotes half-panel, keeping the result O(h⁴) throughout.
pub fn cumulative_simpson(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(0.0);
    if n == 1 {
        return out;
    }
    for i in 1..n {
        if i == 1 {
            // ∫_{x0}^{x1} by quadratic through (x0, x1, x2)
            let v = if n >= 3 {
                h / 12.0 * (5.0 * values[0] + 8.0 * values[1] - values[2])
            } else {
                h * 0.5 * (values[0] + values[1])
            };
            out.push(v);
        } else {
            let v = out[i - 2] + h / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
            out.push(v);
        }
    }
    out
}
