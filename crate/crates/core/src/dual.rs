//! Forward-mode dual numbers with a fixed number of derivative slots.
//!
//! [`Dual<T, N>`] carries a value and N partial derivatives; nesting
//! (`Dual<Dual<f64, N>, N>`) yields exact second derivatives in one pass,
//! which is how the Euler–Lagrange residual and velocity Hessian are built.
//! The [`Real`] trait abstracts over `f64` and duals so every geometric
//! kernel can be evaluated at plain points or differentiated through.

use core::ops::{Add, Div, Mul, Neg, Sub};

/// Scalar interface shared by `f64` and [`Dual`] (at any nesting depth).
pub trait Real:
    Copy
    + PartialEq
    + core::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    /// Primal (value) part, discarding derivatives.
    fn value(self) -> f64;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn tanh(self) -> Self;
    fn atanh(self) -> Self;
    /// Power with a constant exponent.
    fn powf(self, p: f64) -> Self;

    fn abs(self) -> Self {
        if self.value() < 0.0 {
            -self
        } else {
            self
        }
    }

    fn recip(self) -> Self {
        Self::from_f64(1.0) / self
    }

    fn powi(self, n: i32) -> Self {
        let mut acc = Self::from_f64(1.0);
        for _ in 0..n.unsigned_abs() {
            acc = acc * self;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }
}

impl Real for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn value(self) -> f64 {
        self
    }
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    fn exp(self) -> Self {
        libm::exp(self)
    }
    fn ln(self) -> Self {
        libm::log(self)
    }
    fn sin(self) -> Self {
        libm::sin(self)
    }
    fn cos(self) -> Self {
        libm::cos(self)
    }
    fn sinh(self) -> Self {
        libm::sinh(self)
    }
    fn cosh(self) -> Self {
        libm::cosh(self)
    }
    fn tanh(self) -> Self {
        libm::tanh(self)
    }
    fn atanh(self) -> Self {
        libm::atanh(self)
    }
    fn powf(self, p: f64) -> Self {
        libm::pow(self, p)
    }
}

/// Value plus `N` partial derivatives, propagated by the chain rule.
///
/// ```
/// use beltrami_core::dual::{Dual, Real};
///
/// // f(x, y) = x²·sin(y) at (2, 0): ∂f/∂x = 0, ∂f/∂y = 4
/// let [x, y] = Dual::<f64, 2>::vars([2.0, 0.0]);
/// let f = x * x * y.sin();
/// assert!((f.im[0] - 0.0).abs() < 1e-15);
/// assert!((f.im[1] - 4.0).abs() < 1e-15);
/// ```
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Dual<T, const N: usize> {
    pub re: T,
    pub im: [T; N],
}

impl<T: Real, const N: usize> Dual<T, N> {
    pub fn new(re: T, im: [T; N]) -> Self {
        Self { re, im }
    }

    pub fn constant(re: T) -> Self {
        Self {
            re,
            im: [T::from_f64(0.0); N],
        }
    }

    /// The `idx`-th independent variable: unit derivative in slot `idx`.
    pub fn variable(re: T, idx: usize) -> Self {
        let mut im = [T::from_f64(0.0); N];
        im[idx] = T::from_f64(1.0);
        Self { re, im }
    }

    /// Seed a full variable vector.
    pub fn vars(vals: [f64; N]) -> [Dual<f64, N>; N] {
        core::array::from_fn(|i| Dual::variable(vals[i], i))
    }

    fn lift(self, re: T, factor: T) -> Self {
        Self {
            re,
            im: self.im.map(|d| d * factor),
        }
    }
}

/// Seed second-order variables: `jet2(vals)[k]` differentiates twice.
///
/// The result of evaluating `f` on these carries `f` in `.re.re`, the
/// gradient in `.im[j].re`, and the Hessian in `.im[j].im[k]`.
pub fn jet2<const N: usize>(vals: [f64; N]) -> [Dual<Dual<f64, N>, N>; N] {
    core::array::from_fn(|i| {
        let mut outer = Dual::<Dual<f64, N>, N>::constant(Dual::variable(vals[i], i));
        outer.im[i] = Dual::constant(1.0);
        outer
    })
}

impl<T: Real, const N: usize> Add for Dual<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: core::array::from_fn(|i| self.im[i] + rhs.im[i]),
        }
    }
}

impl<T: Real, const N: usize> Sub for Dual<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: core::array::from_fn(|i| self.im[i] - rhs.im[i]),
        }
    }
}

impl<T: Real, const N: usize> Neg for Dual<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: self.im.map(|d| -d),
        }
    }
}

// product rule mixes + into Mul
#[allow(clippy::suspicious_arithmetic_impl)]
impl<T: Real, const N: usize> Mul for Dual<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re,
            im: core::array::from_fn(|i| self.im[i] * rhs.re + self.re * rhs.im[i]),
        }
    }
}

impl<T: Real, const N: usize> Div for Dual<T, N> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.re.recip();
        let inv2 = inv * inv;
        Self {
            re: self.re * inv,
            im: core::array::from_fn(|i| (self.im[i] * rhs.re - self.re * rhs.im[i]) * inv2),
        }
    }
}

impl<T: Real, const N: usize> Real for Dual<T, N> {
    fn from_f64(x: f64) -> Self {
        Self::constant(T::from_f64(x))
    }

    fn value(self) -> f64 {
        self.re.value()
    }

    fn sqrt(self) -> Self {
        let r = self.re.sqrt();
        let factor = (T::from_f64(2.0) * r).recip();
        self.lift(r, factor)
    }

    fn exp(self) -> Self {
        let e = self.re.exp();
        self.lift(e, e)
    }

    fn ln(self) -> Self {
        let factor = self.re.recip();
        self.lift(self.re.ln(), factor)
    }

    fn sin(self) -> Self {
        self.lift(self.re.sin(), self.re.cos())
    }

    fn cos(self) -> Self {
        self.lift(self.re.cos(), -self.re.sin())
    }

    fn sinh(self) -> Self {
        self.lift(self.re.sinh(), self.re.cosh())
    }

    fn cosh(self) -> Self {
        self.lift(self.re.cosh(), self.re.sinh())
    }

    fn tanh(self) -> Self {
        let t = self.re.tanh();
        let one = T::from_f64(1.0);
        self.lift(t, one - t * t)
    }

    fn atanh(self) -> Self {
        let one = T::from_f64(1.0);
        let factor = (one - self.re * self.re).recip();
        self.lift(self.re.atanh(), factor)
    }

    fn powf(self, p: f64) -> Self {
        let factor = self.re.powf(p - 1.0) * T::from_f64(p);
        self.lift(self.re.powf(p), factor)
    }
}

/// Five-point central difference, O(h⁴); the independent derivative oracle.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_has_zero_derivative() {
        let c = Dual::<f64, 2>::from_f64(3.5);
        assert_eq!(c.im, [0.0, 0.0]);
    }

    #[test]
    fn product_and_chain_rule() {
        // f(x, y) = x²·y + sin(x) at (1.2, -0.7)
        let [x, y] = Dual::<f64, 2>::vars([1.2, -0.7]);
        let f = x * x * y + x.sin();
        let fx = 2.0 * 1.2 * -0.7 + libm::cos(1.2);
        let fy = 1.2f64 * 1.2;
        assert!((f.im[0] - fx).abs() < 1e-14);
        assert!((f.im[1] - fy).abs() < 1e-14);
    }

    #[test]
    fn composite_matches_central_difference() {
        let g = |x: f64| libm::log(1.0 + libm::exp(libm::sin(x) * 0.8)) / libm::sqrt(2.0 + x * x);
        for &x in &[-1.3, 0.2, 0.9, 2.4] {
            let d = {
                let v = Dual::<f64, 1>::variable(x, 0);
                let num = (Dual::from_f64(1.0) + (v.sin() * Dual::from_f64(0.8)).exp()).ln();
                let den = (Dual::from_f64(2.0) + v * v).sqrt();
                (num / den).im[0]
            };
            let fd = central_diff(g, x, 1e-3);
            assert!(
                (d - fd).abs() <= 1e-6 * d.abs().max(1.0),
                "x={x}: dual {d} vs fd {fd}"
            );
        }
    }

    #[test]
    fn second_derivatives_via_nesting() {
        // f(x, y) = x³y² → f_xx = 6xy², f_xy = 6x²y, f_yy = 2x³
        let [x, y] = jet2([2.0, 3.0]);
        let f = x * x * x * y * y;
        assert!((f.re.re - 72.0).abs() < 1e-12);
        assert!((f.im[0].im[0] - 6.0 * 2.0 * 9.0).abs() < 1e-11);
        assert!((f.im[0].im[1] - 6.0 * 4.0 * 3.0).abs() < 1e-11);
        assert!((f.im[1].im[1] - 2.0 * 8.0).abs() < 1e-11);
        // symmetry of mixed partials
        assert_eq!(f.im[0].im[1], f.im[1].im[0]);
    }

    #[test]
    fn tanh_atanh_roundtrip_derivative() {
        let v = Dual::<f64, 1>::variable(0.4, 0);
        let r = v.tanh().atanh();
        assert!((r.re - 0.4).abs() < 1e-15);
        assert!((r.im[0] - 1.0).abs() < 1e-12);
    }
}
