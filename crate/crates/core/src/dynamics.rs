//! Free-particle dynamics of the metric family: the square-root Lagrangian,
//! the acceleration-free Euler–Lagrange residual (the inertia check), the
//! velocity Hessian and its origin limit, a Runge–Kutta trajectory
//! integrator that treats straightness as an outcome rather than an input,
//! the closed-form short-distance action, and the Finsler-type Lagrangian.

use alloc::vec::Vec;
use core::fmt;

use crate::dual::{jet2, Dual, Real};
use crate::geometry::{
    self, chart_margin, induced_v_lowered, metric_b_scaled_g, GeomError, GeometryConfig, Point4,
};
use crate::linalg;

/// Kinematic state: coordinate time, position, and velocity `v = dx/dt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KinState {
    pub t: f64,
    pub x: [f64; 3],
    pub v: [f64; 3],
}

impl KinState {
    pub fn new(t: f64, x: [f64; 3], v: [f64; 3]) -> Self {
        Self { t, x, v }
    }

    pub fn point(&self) -> Point4 {
        Point4([self.t, self.x[0], self.x[1], self.x[2]])
    }

    pub fn v_dot_v(&self) -> f64 {
        self.v[0] * self.v[0] + self.v[1] * self.v[1] + self.v[2] * self.v[2]
    }
}

/// Integrated worldline with per-sample kinematics.
#[derive(Clone, Debug, Default)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub positions: Vec<[f64; 3]>,
    pub velocities: Vec<[f64; 3]>,
    pub step: f64,
    pub method: &'static str,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Max deviation from the straight line through the initial state.
    pub fn straightness_error(&self) -> f64 {
        if self.times.is_empty() {
            return 0.0;
        }
        let t0 = self.times[0];
        let x0 = self.positions[0];
        let v0 = self.velocities[0];
        let mut worst: f64 = 0.0;
        for (k, &t) in self.times.iter().enumerate() {
            for i in 0..3 {
                let straight = x0[i] + v0[i] * (t - t0);
                worst = worst.max((self.positions[k][i] - straight).abs());
            }
        }
        worst
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum DynError {
    Geom(GeomError),
    /// Radicand of the Lagrangian is positive: spacelike input.
    Spacelike {
        radicand: f64,
    },
    /// Velocity Hessian is singular or near-singular.
    DegenerateHessian {
        det: f64,
    },
    /// Trajectory left the chart domain at the given coordinate time.
    ChartExit {
        t: f64,
    },
    BadParameter(&'static str),
    /// Real power of a negative base requested.
    NegativeBase {
        base: f64,
    },
}

impl From<GeomError> for DynError {
    fn from(e: GeomError) -> Self {
        DynError::Geom(e)
    }
}

impl fmt::Display for DynError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynError::Geom(e) => write!(f, "{e}"),
            DynError::Spacelike { radicand } => {
                write!(f, "spacelike state (radicand {radicand:e})")
            }
            DynError::DegenerateHessian { det } => {
                write!(f, "degenerate velocity Hessian (det {det:e})")
            }
            DynError::ChartExit { t } => write!(f, "trajectory left chart domain at t = {t}"),
            DynError::BadParameter(m) => write!(f, "bad parameter: {m}"),
            DynError::NegativeBase { base } => {
                write!(f, "negative base {base:e} with non-integer exponent")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DynError {}

/// Radicand `B₀₀ + 2B₀ᵢvⁱ + Bᵢⱼvⁱvʲ`; negative for timelike states.
pub fn radicand_g<R: Real>(
    t: R,
    x: &[R; 3],
    v: &[R; 3],
    cfg: &GeometryConfig,
    a1_factor: f64,
) -> R {
    let x4 = [t, x[0], x[1], x[2]];
    let b = metric_b_scaled_g(&x4, cfg, a1_factor);
    let mut acc = b[0][0];
    for i in 0..3 {
        acc = acc + R::from_f64(2.0) * b[0][i + 1] * v[i];
        for j in 0..3 {
            acc = acc + b[i + 1][j + 1] * v[i] * v[j];
        }
    }
    acc
}

/// `L = √|B_μν ẋ^μ ẋ^ν|` over any scalar (absolute value under the root).
pub fn lagrangian_g<R: Real>(t: R, x: &[R; 3], v: &[R; 3], cfg: &GeometryConfig, a1: f64) -> R {
    radicand_g(t, x, v, cfg, a1).abs().sqrt()
}

/// Checked Lagrangian; rejects spacelike states instead of going complex.
pub fn lagrangian(s: &KinState, cfg: &GeometryConfig) -> Result<f64, DynError> {
    let p = s.point();
    let margin = chart_margin(&p, cfg);
    if margin <= 0.0 {
        return Err(GeomError::OutOfChart { margin }.into());
    }
    let r = radicand_g(s.t, &s.x, &s.v, cfg, 1.0);
    if r > 0.0 {
        return Err(DynError::Spacelike { radicand: r });
    }
    Ok((-r).sqrt())
}

type Jet7 = Dual<Dual<f64, 7>, 7>;

/// Second-order jet of `L` in the variables (t, x¹..x³, v¹..v³).
fn lagrangian_jet(s: &KinState, cfg: &GeometryConfig, a1_factor: f64) -> Jet7 {
    let vars = jet2([s.t, s.x[0], s.x[1], s.x[2], s.v[0], s.v[1], s.v[2]]);
    let t = vars[0];
    let x = [vars[1], vars[2], vars[3]];
    let v = [vars[4], vars[5], vars[6]];
    lagrangian_g(t, &x, &v, cfg, a1_factor)
}

fn check_state(s: &KinState, cfg: &GeometryConfig) -> Result<(), DynError> {
    let p = s.point();
    let margin = chart_margin(&p, cfg);
    if margin <= 0.0 {
        return Err(GeomError::OutOfChart { margin }.into());
    }
    let r = radicand_g(s.t, &s.x, &s.v, cfg, 1.0);
    if r >= 0.0 {
        return Err(DynError::Spacelike { radicand: r });
    }
    Ok(())
}

/// Acceleration-free Euler–Lagrange residual
/// `∂L/∂xⁱ − ∂ₜ(∂L/∂vⁱ) − vʲ ∂ⱼ(∂L/∂vⁱ)`.
///
/// Its vanishing expresses that the straight worldline through the state
/// solves the equations of motion (the law of inertia).
pub fn el_residual(s: &KinState, cfg: &GeometryConfig) -> Result<[f64; 3], DynError> {
    el_residual_scaled(s, cfg, 1.0)
}

/// Residual with the quadratic metric coefficient rescaled; `a1_factor = 1`
/// recovers [`el_residual`], other values measure the test's power.
pub fn el_residual_scaled(
    s: &KinState,
    cfg: &GeometryConfig,
    a1_factor: f64,
) -> Result<[f64; 3], DynError> {
    check_state(s, cfg)?;
    let jet = lagrangian_jet(s, cfg, a1_factor);
    Ok(core::array::from_fn(|i| {
        let dl_dxi = jet.im[i + 1].re;
        let d2l_dt_dvi = jet.im[0].im[4 + i];
        let advect: f64 = (0..3).map(|j| s.v[j] * jet.im[j + 1].im[4 + i]).sum();
        dl_dxi - d2l_dt_dvi - advect
    }))
}

/// Velocity Hessian `∂²L/∂vⁱ∂vʲ` and its determinant.
pub fn hessian_vv(s: &KinState, cfg: &GeometryConfig) -> Result<([[f64; 3]; 3], f64), DynError> {
    check_state(s, cfg)?;
    let jet = lagrangian_jet(s, cfg, 1.0);
    let h: [[f64; 3]; 3] =
        core::array::from_fn(|i| core::array::from_fn(|j| jet.im[4 + i].im[4 + j]));
    let det = linalg::det(&h);
    if !det.is_finite() || det.abs() < 1e-12 {
        return Err(DynError::DegenerateHessian { det });
    }
    Ok((h, det))
}

/// Closed form of the Hessian determinant at the spacetime origin:
/// `det = −(a/b)^{3/2} (1 − v·v)^{−5/2}`.
pub fn hessian_det_origin_closed_form(a: f64, b: f64, v_dot_v: f64) -> f64 {
    -libm::pow(a / b, 1.5) * libm::pow(1.0 - v_dot_v, -2.5)
}

/// Alternate quoted limit `−1/|b/a (v·v − 1)|^{3/2}`.
///
/// Away from `v = 0` this is the eigenvalue of the Hessian along the
/// velocity direction (at a = b), not its determinant; retained for the
/// discrepancy report.
pub fn hessian_det_origin_alt(a: f64, b: f64, v_dot_v: f64) -> f64 {
    -1.0 / libm::pow((b / a * (v_dot_v - 1.0)).abs(), 1.5)
}

fn acceleration(
    t: f64,
    x: [f64; 3],
    v: [f64; 3],
    cfg: &GeometryConfig,
    a1_factor: f64,
) -> Result<[f64; 3], DynError> {
    let s = KinState::new(t, x, v);
    let p = s.point();
    if chart_margin(&p, cfg) <= 0.0 {
        return Err(DynError::ChartExit { t });
    }
    if radicand_g(t, &x, &v, cfg, a1_factor) >= 0.0 {
        return Err(DynError::Spacelike {
            radicand: radicand_g(t, &x, &v, cfg, a1_factor),
        });
    }
    let jet = lagrangian_jet(&s, cfg, a1_factor);
    let h: [[f64; 3]; 3] =
        core::array::from_fn(|i| core::array::from_fn(|j| jet.im[4 + i].im[4 + j]));
    let rhs: [f64; 3] = core::array::from_fn(|i| {
        let dl_dxi = jet.im[i + 1].re;
        let d2l_dt_dvi = jet.im[0].im[4 + i];
        let advect: f64 = (0..3).map(|j| v[j] * jet.im[j + 1].im[4 + i]).sum();
        dl_dxi - d2l_dt_dvi - advect
    });
    linalg::lu_solve(&h, &rhs).ok_or(DynError::DegenerateHessian {
        det: linalg::det(&h),
    })
}

/// Integrate the explicit equations of motion (classical RK4), solving the
/// 3×3 Hessian system for `dv/dt` at every stage. For the inertial metric
/// coefficients the result stays on the straight line through the initial
/// state; that is measured, not imposed.
pub fn integrate_free_motion(
    s0: &KinState,
    t_end: f64,
    step: f64,
    cfg: &GeometryConfig,
) -> Result<Trajectory, DynError> {
    integrate_free_motion_scaled(s0, t_end, step, cfg, 1.0)
}

/// Integrator with the same diagnostic coefficient knob as
/// [`el_residual_scaled`]; `a1_factor ≠ 1` produces genuinely curved
/// trajectories, which is what the convergence-order check integrates.
pub fn integrate_free_motion_scaled(
    s0: &KinState,
    t_end: f64,
    step: f64,
    cfg: &GeometryConfig,
    a1_factor: f64,
) -> Result<Trajectory, DynError> {
    if !(step > 0.0) || !t_end.is_finite() {
        return Err(DynError::BadParameter(
            "step must be positive and t_end finite",
        ));
    }
    check_state(s0, cfg)?;
    let dir = if t_end >= s0.t { 1.0 } else { -1.0 };
    let n_steps = libm::ceil((t_end - s0.t).abs() / step) as usize;
    let h = dir * (t_end - s0.t).abs() / n_steps.max(1) as f64;

    let mut traj = Trajectory {
        times: Vec::with_capacity(n_steps + 1),
        positions: Vec::with_capacity(n_steps + 1),
        velocities: Vec::with_capacity(n_steps + 1),
        step,
        method: "rk4",
    };
    let (mut t, mut x, mut v) = (s0.t, s0.x, s0.v);
    traj.times.push(t);
    traj.positions.push(x);
    traj.velocities.push(v);

    let add = |p: [f64; 3], q: [f64; 3], c: f64| -> [f64; 3] {
        [p[0] + c * q[0], p[1] + c * q[1], p[2] + c * q[2]]
    };

    for _ in 0..n_steps {
        let a1 = acceleration(t, x, v, cfg, a1_factor)?;
        let k1 = (v, a1);
        let a2 = acceleration(
            t + 0.5 * h,
            add(x, k1.0, 0.5 * h),
            add(v, k1.1, 0.5 * h),
            cfg,
            a1_factor,
        )?;
        let k2 = (add(v, k1.1, 0.5 * h), a2);
        let a3 = acceleration(
            t + 0.5 * h,
            add(x, k2.0, 0.5 * h),
            add(v, k2.1, 0.5 * h),
            cfg,
            a1_factor,
        )?;
        let k3 = (add(v, k2.1, 0.5 * h), a3);
        let a4 = acceleration(t + h, add(x, k3.0, h), add(v, k3.1, h), cfg, a1_factor)?;
        let k4 = (add(v, k3.1, h), a4);
        for i in 0..3 {
            x[i] += h / 6.0 * (k1.0[i] + 2.0 * k2.0[i] + 2.0 * k3.0[i] + k4.0[i]);
            v[i] += h / 6.0 * (k1.1[i] + 2.0 * k2.1[i] + 2.0 * k3.1[i] + k4.1[i]);
        }
        t += h;
        if chart_margin(&Point4([t, x[0], x[1], x[2]]), cfg) <= 0.0 {
            return Err(DynError::ChartExit { t });
        }
        traj.times.push(t);
        traj.positions.push(x);
        traj.velocities.push(v);
    }
    Ok(traj)
}

/// Closed-form short-distance action (a = b = 1, spatial origin):
/// `½ ln[(u + t)/(u − t)] − √(v·v) ln[√(v·v) t + u]` with
/// `u = √(1 − v·v(1 − t²))`.
pub fn action_shortdist(t: f64, v_dot_v: f64) -> Result<f64, DynError> {
    if !(t * t < 1.0) {
        return Err(DynError::BadParameter("need t² < 1"));
    }
    if v_dot_v < 0.0 {
        return Err(DynError::BadParameter("need v·v ≥ 0"));
    }
    let rad = 1.0 - v_dot_v * (1.0 - t * t);
    if rad <= 0.0 {
        return Err(DynError::NegativeBase { base: rad });
    }
    let u = libm::sqrt(rad);
    let speed = libm::sqrt(v_dot_v);
    Ok(0.5 * libm::log((u + t) / (u - t)) - speed * libm::log(speed * t + u))
}

/// Residual `d/dt(closed form) − √(1/(1−t²)² − v·v/(1−t²))`, by duals.
pub fn action_shortdist_check(t: f64, v_dot_v: f64) -> Result<f64, DynError> {
    if !(t * t < 1.0) || v_dot_v < 0.0 || 1.0 - v_dot_v * (1.0 - t * t) <= 0.0 {
        return Err(DynError::BadParameter("outside closed-form domain"));
    }
    let tv = Dual::<f64, 1>::variable(t, 0);
    let one = Dual::<f64, 1>::from_f64(1.0);
    let vv = Dual::<f64, 1>::from_f64(v_dot_v);
    let u = (one - vv * (one - tv * tv)).sqrt();
    let speed = Dual::<f64, 1>::from_f64(libm::sqrt(v_dot_v));
    let action = ((u + tv) / (u - tv)).ln() * Dual::from_f64(0.5) - speed * (speed * tv + u).ln();
    let one_minus_t2 = 1.0 - t * t;
    let integrand = libm::sqrt(1.0 / (one_minus_t2 * one_minus_t2) - v_dot_v / one_minus_t2);
    Ok(action.im[0] - integrand)
}

/// Finsler-type Lagrangian `|B ẋẋ|^{(1−δ)/2} (V·ẋ)^δ` with `ẋ = (1, v)`,
/// built on the invariant (lowered-index) one-form `V`.
pub fn finsler_lagrangian(s: &KinState, delta: f64, va: f64) -> Result<f64, DynError> {
    if delta == 0.0 || delta == 1.0 {
        return Err(DynError::BadParameter("delta must differ from 0 and 1"));
    }
    let cfg = GeometryConfig::unit();
    check_state(s, &cfg)?;
    let base = radicand_g(s.t, &s.x, &s.v, &cfg, 1.0).abs();
    let v = induced_v_lowered(&s.point(), va)?.0;
    let vfac = v[0] + v[1] * s.v[0] + v[2] * s.v[1] + v[3] * s.v[2];
    let is_integer = delta == libm::floor(delta);
    let vterm = if is_integer {
        libm::pow(vfac, delta)
    } else {
        if vfac < 0.0 {
            return Err(DynError::NegativeBase { base: vfac });
        }
        libm::pow(vfac, delta)
    };
    Ok(libm::pow(base, 0.5 * (1.0 - delta)) * vterm)
}

/// Homogeneous 4-velocity version of [`finsler_lagrangian`], used by the
/// invariance checks (degree-1 homogeneous in `u`).
pub fn finsler_lagrangian4(x: &Point4, u: &[f64; 4], delta: f64, va: f64) -> Result<f64, DynError> {
    if delta == 0.0 || delta == 1.0 {
        return Err(DynError::BadParameter("delta must differ from 0 and 1"));
    }
    let cfg = GeometryConfig::unit();
    let b = geometry::metric_b(x, &cfg)?.0;
    let mut rad = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            rad += b[mu][nu] * u[mu] * u[nu];
        }
    }
    let v = induced_v_lowered(x, va)?.0;
    let vfac: f64 = (0..4).map(|mu| v[mu] * u[mu]).sum();
    let is_integer = delta == libm::floor(delta);
    if !is_integer && vfac < 0.0 {
        return Err(DynError::NegativeBase { base: vfac });
    }
    Ok(libm::pow(rad.abs(), 0.5 * (1.0 - delta)) * libm::pow(vfac, delta))
}

/// Residuals of the four first-order coefficient equations
/// (`∂ᵢA₀ − 2A₁xⁱ`, `∂ₜA₀ + 2A₁t`, `∂ᵢA₁A₀ − 4A₁²xⁱ`, `∂ₜA₁A₀ + 4A₁²t`),
/// each maximized over its components, by dual numbers.
pub fn pde_residuals(x: &Point4, cfg: &GeometryConfig) -> Result<[f64; 4], DynError> {
    let margin = chart_margin(x, cfg);
    if margin <= 0.0 {
        return Err(GeomError::OutOfChart { margin }.into());
    }
    let vars = Dual::<f64, 4>::vars(x.0);
    let w = geometry::chart_w_g(&vars, cfg);
    let a = Dual::<f64, 4>::from_f64(cfg.a);
    let a0 = a / w;
    let a1 = -(a / (w * w));
    let (a0v, a1v) = (a0.re, a1.re);
    let t = x.0[0];
    let mut res = [0.0f64; 4];
    for i in 1..4 {
        res[0] = res[0].max((a0.im[i] - 2.0 * a1v * x.0[i]).abs());
        res[2] = res[2].max((a1.im[i] * a0v - 4.0 * a1v * a1v * x.0[i]).abs());
    }
    res[1] = (a0.im[0] + 2.0 * a1v * t).abs();
    res[3] = (a1.im[0] * a0v + 4.0 * a1v * a1v * t).abs();
    Ok(res)
}
