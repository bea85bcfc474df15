//! Scalar-field mode machinery in the reparametrized time coordinate
//! `x̃⁰ = atanh(t)`: the damped mode ODE `χ̈ + F χ̇ + G χ = 0` with
//! `F = 2 tanh`, `G = (m² + ξ)/σ + k·k`, `σ = sech²`; the exact massless
//! solution; WKB orders with the Schwarzian-derivative iteration on a
//! uniform grid; and the detector transition amplitude together with its
//! quadrature oracle.

use alloc::vec::Vec;
use core::fmt;

use crate::cx::Cx;
use crate::dynamics;
use crate::quad::{adaptive_simpson, cumulative_simpson};

/// Mode parameters; only `k·k` enters the reduced equation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeParams {
    pub m2: f64,
    pub xi: f64,
    pub k_dot_k: f64,
}

impl ModeParams {
    pub fn new(m2: f64, xi: f64, k_dot_k: f64) -> Self {
        Self { m2, xi, k_dot_k }
    }

    pub fn massless(k_dot_k: f64) -> Self {
        Self::new(0.0, 0.0, k_dot_k)
    }

    /// Effective mass combination `m² + ξ`.
    pub fn mu(&self) -> f64 {
        self.m2 + self.xi
    }
}

/// Coefficient selection: the full damped equation, or the reduced
/// constant-coefficient case (`F ≡ 0`, `G = k·k`) used as an oscillator
/// sanity anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    Standard,
    Undamped,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum ModeError {
    /// |t| ≥ 1: outside the chart's time interval.
    TimeOutOfRange {
        t: f64,
    },
    /// `k·k ≤ 1`: the massless dispersion root turns imaginary.
    Evanescent {
        k_dot_k: f64,
    },
    /// Radicand went negative at a grid node.
    TurningPoint {
        index: usize,
        radicand: f64,
    },
    /// Finite-difference residual of the integrated solution too large.
    StepTooLarge {
        residual: f64,
    },
    BadParameter(&'static str),
}

impl fmt::Display for ModeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeError::TimeOutOfRange { t } => write!(f, "time {t} outside (−1, 1)"),
            ModeError::Evanescent { k_dot_k } => {
                write!(f, "evanescent regime: k·k = {k_dot_k} ≤ 1")
            }
            ModeError::TurningPoint { index, radicand } => {
                write!(f, "turning point at node {index} (radicand {radicand:e})")
            }
            ModeError::StepTooLarge { residual } => {
                write!(f, "step too large (FD residual {residual:e})")
            }
            ModeError::BadParameter(m) => write!(f, "bad parameter: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ModeError {}

/// `x̃⁰ = ½ ln((1+t)/(1−t)) = atanh(t)`.
pub fn time_reparam(t: f64) -> Result<f64, ModeError> {
    if !(t.abs() < 1.0) {
        return Err(ModeError::TimeOutOfRange { t });
    }
    Ok(libm::atanh(t))
}

/// Inverse reparametrization `t = tanh(x̃⁰)`.
pub fn time_reparam_inv(x: f64) -> f64 {
    libm::tanh(x)
}

/// `σ = 1 − tanh² = sech²`, in (0, 1].
pub fn sigma(x: f64) -> f64 {
    let c = libm::cosh(x);
    1.0 / (c * c)
}

/// Damping coefficient `F = 2(e^{2x̃} − 1)/(e^{2x̃} + 1) = 2 tanh(x̃)`.
pub fn coeff_f(x: f64) -> f64 {
    2.0 * libm::tanh(x)
}

/// `G = (m² + ξ)/σ + k·k`.
pub fn coeff_g(x: f64, params: &ModeParams) -> f64 {
    params.mu() / sigma(x) + params.k_dot_k
}

fn coeffs(kind: CoeffKind, x: f64, params: &ModeParams) -> (f64, f64) {
    match kind {
        CoeffKind::Standard => (coeff_f(x), coeff_g(x, params)),
        CoeffKind::Undamped => (0.0, params.k_dot_k),
    }
}

/// Sampled complex mode solution with derivative samples.
#[derive(Clone, Debug)]
pub struct ModeSolution {
    pub grid: Vec<f64>,
    pub chi: Vec<Cx>,
    pub dchi: Vec<Cx>,
    pub method: &'static str,
    /// Max finite-difference residual of the ODE at interior nodes.
    pub max_residual: f64,
}

/// Integrate the mode ODE with classical RK4 and validate the result with
/// a fourth-order finite-difference residual check.
pub fn solve_mode_ode(
    params: &ModeParams,
    chi0: Cx,
    dchi0: Cx,
    x_start: f64,
    x_end: f64,
    n_steps: usize,
    kind: CoeffKind,
) -> Result<ModeSolution, ModeError> {
    if n_steps < 8 || !(x_end > x_start) {
        return Err(ModeError::BadParameter(
            "need x_end > x_start and ≥ 8 steps",
        ));
    }
    let h = (x_end - x_start) / n_steps as f64;
    let mut grid = Vec::with_capacity(n_steps + 1);
    let mut chi = Vec::with_capacity(n_steps + 1);
    let mut dchi = Vec::with_capacity(n_steps + 1);
    let (mut x, mut c, mut d) = (x_start, chi0, dchi0);
    grid.push(x);
    chi.push(c);
    dchi.push(d);
    let accel = |x: f64, c: Cx, d: Cx| -> Cx {
        let (f, g) = coeffs(kind, x, params);
        -(d.scale(f)) - c.scale(g)
    };
    for _ in 0..n_steps {
        let k1 = (d, accel(x, c, d));
        let k2 = (
            d + k1.1.scale(0.5 * h),
            accel(
                x + 0.5 * h,
                c + k1.0.scale(0.5 * h),
                d + k1.1.scale(0.5 * h),
            ),
        );
        let k3 = (
            d + k2.1.scale(0.5 * h),
            accel(
                x + 0.5 * h,
                c + k2.0.scale(0.5 * h),
                d + k2.1.scale(0.5 * h),
            ),
        );
        let k4 = (
            d + k3.1.scale(h),
            accel(x + h, c + k3.0.scale(h), d + k3.1.scale(h)),
        );
        c = c + (k1.0 + k2.0.scale(2.0) + k3.0.scale(2.0) + k4.0).scale(h / 6.0);
        d = d + (k1.1 + k2.1.scale(2.0) + k3.1.scale(2.0) + k4.1).scale(h / 6.0);
        x += h;
        grid.push(x);
        chi.push(c);
        dchi.push(d);
    }
    let mut sol = ModeSolution {
        grid,
        chi,
        dchi,
        method: "rk4",
        max_residual: 0.0,
    };
    sol.max_residual = ode_residual_fd(&sol, params, kind);
    if sol.max_residual > 1e-6 {
        return Err(ModeError::StepTooLarge {
            residual: sol.max_residual,
        });
    }
    Ok(sol)
}

/// Fourth-order finite-difference residual `χ̈ + Fχ̇ + Gχ` over interior
/// nodes of a sampled solution.
pub fn ode_residual_fd(sol: &ModeSolution, params: &ModeParams, kind: CoeffKind) -> f64 {
    let n = sol.grid.len();
    if n < 5 {
        return 0.0;
    }
    let h = sol.grid[1] - sol.grid[0];
    let mut worst: f64 = 0.0;
    for i in 2..n - 2 {
        let c = &sol.chi;
        let d1 = (c[i - 2] - c[i + 2] + (c[i + 1] - c[i - 1]).scale(8.0)).scale(1.0 / (12.0 * h));
        let d2 = (-c[i + 2] - c[i - 2] + (c[i + 1] + c[i - 1]).scale(16.0) - c[i].scale(30.0))
            .scale(1.0 / (12.0 * h * h));
        let (f, g) = coeffs(kind, sol.grid[i], params);
        let r = d2 + d1.scale(f) + c[i].scale(g);
        worst = worst.max(r.abs());
    }
    worst
}

/// Exact massless mode `χ = sech(x̃)/2 · (k·k − 1)^{−1/4} e^{± i κ x̃}`,
/// `κ = √(k·k − 1)`.
pub fn exact_massless(k_dot_k: f64, plus: bool, x: f64) -> Result<Cx, ModeError> {
    if k_dot_k <= 1.0 {
        return Err(ModeError::Evanescent { k_dot_k });
    }
    let kappa = libm::sqrt(k_dot_k - 1.0);
    let env = 0.5 / libm::cosh(x) * libm::pow(k_dot_k - 1.0, -0.25);
    let phase = if plus { kappa * x } else { -kappa * x };
    Ok(Cx::cis(phase).scale(env))
}

/// Analytic derivative of [`exact_massless`]:
/// `χ̇ = χ · (−tanh(x̃) ± iκ)`.
pub fn exact_massless_derivative(k_dot_k: f64, plus: bool, x: f64) -> Result<Cx, ModeError> {
    let chi = exact_massless(k_dot_k, plus, x)?;
    let kappa = libm::sqrt(k_dot_k - 1.0);
    let factor = Cx::new(-libm::tanh(x), if plus { kappa } else { -kappa });
    Ok(chi * factor)
}

/// Residual of the exact solution in the massless mode ODE, by analytic
/// substitution (machine-zero in exact arithmetic).
pub fn exact_massless_ode_residual(k_dot_k: f64, plus: bool, x: f64) -> Result<f64, ModeError> {
    let chi = exact_massless(k_dot_k, plus, x)?;
    let kappa = libm::sqrt(k_dot_k - 1.0);
    let th = libm::tanh(x);
    let sech2 = sigma(x);
    let lam = Cx::new(-th, if plus { kappa } else { -kappa });
    // χ̈ = χ(λ² − sech²), χ̇ = χλ
    let ddc = chi * (lam * lam - Cx::real(sech2));
    let dc = chi * lam;
    let r = ddc + dc.scale(coeff_f(x)) + chi.scale(k_dot_k);
    Ok(r.abs())
}

/// Lowest WKB order in the quoted radicand form
/// `w⁽⁰⁾ = √((m²+ξ)(e^{2x̃}+1)²/(4e^{2x̃}) + k·k − 1)`.
pub fn wkb_w0(params: &ModeParams, x: f64) -> Result<f64, ModeError> {
    let e2 = libm::exp(2.0 * x);
    let radicand = params.mu() * (e2 + 1.0) * (e2 + 1.0) / (4.0 * e2) + params.k_dot_k - 1.0;
    if radicand <= 0.0 {
        return Err(ModeError::TurningPoint { index: 0, radicand });
    }
    Ok(libm::sqrt(radicand))
}

/// The same quantity through the hyperbolic identity:
/// `w⁽⁰⁾ = √((m²+ξ) cosh²(x̃) + k·k − 1)`.
pub fn wkb_w0_cosh_form(params: &ModeParams, x: f64) -> f64 {
    let c = libm::cosh(x);
    libm::sqrt(params.mu() * c * c + params.k_dot_k - 1.0)
}

/// Sampled WKB frequency at some iteration order.
#[derive(Clone, Debug, PartialEq)]
pub struct WkbState {
    pub grid: Vec<f64>,
    pub w: Vec<f64>,
    pub order: usize,
}

/// Sample the lowest order on a uniform grid.
pub fn wkb_w0_state(
    params: &ModeParams,
    x_min: f64,
    x_max: f64,
    nodes: usize,
) -> Result<WkbState, ModeError> {
    if nodes < 17 || !(x_max > x_min) {
        return Err(ModeError::BadParameter("need ≥ 17 nodes and x_max > x_min"));
    }
    let h = (x_max - x_min) / (nodes - 1) as f64;
    let mut grid = Vec::with_capacity(nodes);
    let mut w = Vec::with_capacity(nodes);
    for i in 0..nodes {
        let x = x_min + i as f64 * h;
        let radicand = {
            let c = libm::cosh(x);
            params.mu() * c * c + params.k_dot_k - 1.0
        };
        if radicand <= 0.0 {
            return Err(ModeError::TurningPoint { index: i, radicand });
        }
        grid.push(x);
        w.push(libm::sqrt(radicand));
    }
    Ok(WkbState { grid, w, order: 0 })
}

/// One Schwarzian iteration
/// `w² ← G − ½(w″/w − (3/2)(w′/w)²) − ½F′ − F²/4`
/// with fourth-order central stencils; the grid loses two nodes per side.
pub fn wkb_iterate(state: &WkbState, params: &ModeParams) -> Result<WkbState, ModeError> {
    let n = state.grid.len();
    if n < 17 {
        return Err(ModeError::BadParameter("grid too small for stencils"));
    }
    let h = state.grid[1] - state.grid[0];
    let mut grid = Vec::with_capacity(n - 4);
    let mut w_next = Vec::with_capacity(n - 4);
    for i in 2..n - 2 {
        let w = &state.w;
        let d1 = (w[i - 2] - w[i + 2] + 8.0 * (w[i + 1] - w[i - 1])) / (12.0 * h);
        let d2 =
            (-w[i + 2] - w[i - 2] + 16.0 * (w[i + 1] + w[i - 1]) - 30.0 * w[i]) / (12.0 * h * h);
        let schwarz = d2 / w[i] - 1.5 * (d1 / w[i]) * (d1 / w[i]);
        let x = state.grid[i];
        let f = coeff_f(x);
        let fprime = 2.0 * sigma(x);
        let radicand = coeff_g(x, params) - 0.5 * schwarz - 0.5 * fprime - 0.25 * f * f;
        if radicand <= 0.0 {
            return Err(ModeError::TurningPoint { index: i, radicand });
        }
        grid.push(x);
        w_next.push(libm::sqrt(radicand));
    }
    Ok(WkbState {
        grid,
        w: w_next,
        order: state.order + 1,
    })
}

/// Sampled first- and second-order phase corrections.
#[derive(Clone, Debug, PartialEq)]
pub struct S1S2 {
    pub grid: Vec<f64>,
    pub s1: Vec<f64>,
    pub s2: Vec<f64>,
}

/// `s₁ = ln√w + ∫F/2` (the integral is `ln cosh` for the damped case) and
/// `s₂ = w′/(4w²) + ⅛∫[w′²/w³ + F²/w + 2F′/w]`, the quadrature taken from
/// the grid's left edge. The output grid loses two nodes per side to the
/// `w′` stencil.
pub fn wkb_s1_s2(state: &WkbState, kind: CoeffKind) -> Result<S1S2, ModeError> {
    let n = state.grid.len();
    if n < 17 {
        return Err(ModeError::BadParameter("grid too small for stencils"));
    }
    let h = state.grid[1] - state.grid[0];
    let mut grid = Vec::with_capacity(n - 4);
    let mut s1 = Vec::with_capacity(n - 4);
    let mut wprime = Vec::with_capacity(n - 4);
    let mut integrand = Vec::with_capacity(n - 4);
    for i in 2..n - 2 {
        let w = &state.w;
        let x = state.grid[i];
        let d1 = (w[i - 2] - w[i + 2] + 8.0 * (w[i + 1] - w[i - 1])) / (12.0 * h);
        let (f, fprime) = match kind {
            CoeffKind::Standard => (coeff_f(x), 2.0 * sigma(x)),
            CoeffKind::Undamped => (0.0, 0.0),
        };
        let int_f_half = match kind {
            CoeffKind::Standard => libm::log(libm::cosh(x)),
            CoeffKind::Undamped => 0.0,
        };
        grid.push(x);
        s1.push(libm::log(libm::sqrt(w[i])) + int_f_half);
        wprime.push(d1);
        integrand.push(d1 * d1 / (w[i] * w[i] * w[i]) + f * f / w[i] + 2.0 * fprime / w[i]);
    }
    let cumulative = cumulative_simpson(&integrand, h);
    let s2 = (0..grid.len())
        .map(|i| {
            let w = state.w[i + 2];
            wprime[i] / (4.0 * w * w) + 0.125 * cumulative[i]
        })
        .collect();
    Ok(S1S2 { grid, s1, s2 })
}

/// Closed-form transition amplitude
/// `𝔸 = π (k·k − 1)^{−1/4} / (e^{πω/2} + e^{−πω/2})` with
/// `ω = ΔE ± √(k·k − 1)`; the physical branch is `+`.
pub fn unruh_amplitude(delta_e: f64, k_dot_k: f64, plus: bool) -> Result<f64, ModeError> {
    if k_dot_k <= 1.0 {
        return Err(ModeError::Evanescent { k_dot_k });
    }
    let kappa = libm::sqrt(k_dot_k - 1.0);
    let omega = if plus {
        delta_e + kappa
    } else {
        delta_e - kappa
    };
    let denom = libm::exp(0.5 * core::f64::consts::PI * omega)
        + libm::exp(-0.5 * core::f64::consts::PI * omega);
    Ok(core::f64::consts::PI * libm::pow(k_dot_k - 1.0, -0.25) / denom)
}

/// The plain Fourier factor `π/(e^{πω/2} + e^{−πω/2})` of the envelope.
pub fn fourier_closed_form(omega: f64) -> f64 {
    core::f64::consts::PI
        / (libm::exp(0.5 * core::f64::consts::PI * omega)
            + libm::exp(-0.5 * core::f64::consts::PI * omega))
}

/// Quadrature oracle: `∫_{−L}^{L} e^{x}/(1 + e^{2x}) e^{iωx} dx` by
/// adaptive Simpson (the envelope equals `sech(x)/2`).
pub fn fourier_oracle(omega: f64, half_width: f64, tol: f64) -> Cx {
    let re = adaptive_simpson(
        &|x: f64| 0.5 / libm::cosh(x) * libm::cos(omega * x),
        -half_width,
        half_width,
        tol,
    );
    let im = adaptive_simpson(
        &|x: f64| 0.5 / libm::cosh(x) * libm::sin(omega * x),
        -half_width,
        half_width,
        tol,
    );
    Cx::new(re, im)
}

/// Raw quadrature amplitude for a uniformly moving detector, integrating
/// the mode envelope against `e^{i(ΔE·S + κx̃ − k·v tanh x̃)} dS` with the
/// short-distance action `S(t, v·v)`. No closed form is claimed; at
/// `v = 0` this reduces to the static Fourier oracle.
pub fn unruh_amplitude_worldline(
    delta_e: f64,
    k_dot_k: f64,
    v_dot_v: f64,
    k_dot_v: f64,
    half_width: f64,
    tol: f64,
) -> Result<Cx, ModeError> {
    if k_dot_k <= 1.0 {
        return Err(ModeError::Evanescent { k_dot_k });
    }
    if !(0.0..1.0).contains(&v_dot_v) {
        return Err(ModeError::BadParameter("need 0 ≤ v·v < 1"));
    }
    let kappa = libm::sqrt(k_dot_k - 1.0);
    let prefactor = libm::pow(k_dot_k - 1.0, -0.25);
    let phase_and_weight = |x: f64| -> (f64, f64) {
        let t = libm::tanh(x);
        let s = dynamics::action_shortdist(t, v_dot_v).unwrap_or(0.0);
        let sig = sigma(x);
        let lagr = libm::sqrt(1.0 / (sig * sig) - v_dot_v / sig);
        let ds_dx = lagr * sig;
        let envelope = 0.5 / libm::cosh(x);
        (delta_e * s + kappa * x - k_dot_v * t, envelope * ds_dx)
    };
    let re = adaptive_simpson(
        &|x: f64| {
            let (phi, wgt) = phase_and_weight(x);
            wgt * libm::cos(phi)
        },
        -half_width,
        half_width,
        tol,
    );
    let im = adaptive_simpson(
        &|x: f64| {
            let (phi, wgt) = phase_and_weight(x);
            wgt * libm::sin(phi)
        },
        -half_width,
        half_width,
        tol,
    );
    Ok(Cx::new(re * prefactor, im * prefactor))
}
