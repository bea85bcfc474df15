//! The two-parameter metric family `B` on the projective chart, its inverse
//! and signature tests, the quadric-hypersurface embedding with pullback
//! machinery, and the induced tensors of the symmetry-breaking examples.
//!
//! Conventions: coordinates are `x⁰ = t, x¹, x², x³` with the flat metric
//! `η = diag(−1,1,1,1)`. Chart coordinates enter every formula through
//! `x̂ = x/l₁`; the closed-form displays below are quoted at `l₁ = 1`.
//! Writing `w = b + η(x̂,x̂)`, the metric coefficients are `A₀ = a/w`,
//! `A₁ = −a/w²`, and the chart domain is `w > 0` on the de Sitter branch
//! (`a, b > 0`) and `b + x̂·x̂ < 0` on the anti-de Sitter branch
//! (`a, b < 0`).

use core::fmt;

use crate::dual::{Dual, Real};
use crate::linalg;

/// Flat 4-metric signs diag(−1, 1, 1, 1).
pub const ETA4_DIAG: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// Which quadric the configuration lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    DeSitter,
    AntiDeSitter,
}

/// Parameters of the metric family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeometryConfig {
    pub a: f64,
    pub b: f64,
    pub l1: f64,
    pub branch: Branch,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        Self {
            a: 1.0,
            b: 1.0,
            l1: 1.0,
            branch: Branch::DeSitter,
        }
    }
}

impl GeometryConfig {
    /// The `a = b = 1` de Sitter configuration used by the worked examples.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn anti_de_sitter(a: f64, b: f64) -> Self {
        Self {
            a,
            b,
            l1: 1.0,
            branch: Branch::AntiDeSitter,
        }
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        if !(self.l1 > 0.0) {
            return Err(GeomError::BadConfig("l1 must be positive"));
        }
        match self.branch {
            Branch::DeSitter if self.a > 0.0 && self.b > 0.0 => Ok(()),
            Branch::AntiDeSitter if self.a < 0.0 && self.b < 0.0 => Ok(()),
            Branch::DeSitter => Err(GeomError::BadConfig("de Sitter branch needs a > 0, b > 0")),
            Branch::AntiDeSitter => Err(GeomError::BadConfig(
                "anti-de Sitter branch needs a < 0, b < 0",
            )),
        }
    }

    /// Sign of the quadric constant: `X·S·X = +1` (dS) or `−1` (AdS).
    pub fn quadric_sign(&self) -> f64 {
        match self.branch {
            Branch::DeSitter => 1.0,
            Branch::AntiDeSitter => -1.0,
        }
    }

    /// Ambient quadratic form diag(−1, 1, 1, 1, b); its pullback to the
    /// quadric reproduces `B` up to a constant conformal factor.
    pub fn ambient_form(&self) -> [[f64; 5]; 5] {
        let mut s = [[0.0; 5]; 5];
        s[0][0] = -1.0;
        for i in 1..4 {
            s[i][i] = 1.0;
        }
        s[4][4] = self.b;
        s
    }
}

/// Chart point (x⁰ = t, x¹, x², x³).
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Point4(pub [f64; 4]);

impl Point4 {
    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self([x0, x1, x2, x3])
    }

    pub fn t(&self) -> f64 {
        self.0[0]
    }

    /// Spatial squared norm x·x.
    pub fn space_dot(&self) -> f64 {
        self.0[1] * self.0[1] + self.0[2] * self.0[2] + self.0[3] * self.0[3]
    }

    /// η(x, x) = −t² + x·x.
    pub fn eta_xx(&self) -> f64 {
        eta_xx_g(&self.0)
    }
}

/// Point on the embedding quadric, components (T, X, Y, Z, W).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct AmbientPoint5(pub [f64; 5]);

impl AmbientPoint5 {
    /// Residual of the defining quadric equation `X·S·X − (±1)`.
    pub fn quadric_residual(&self, cfg: &GeometryConfig) -> f64 {
        let s = cfg.ambient_form();
        let mut acc = 0.0;
        for i in 0..5 {
            for j in 0..5 {
                acc += self.0[i] * s[i][j] * self.0[j];
            }
        }
        acc - cfg.quadric_sign()
    }
}

/// Symmetric 4×4 form; symmetry is exact by construction.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct QuadForm4(pub [[f64; 4]; 4]);

/// Antisymmetric 4×4 form; antisymmetry is exact by construction.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct TwoForm4(pub [[f64; 4]; 4]);

/// Covector with 4 components.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct OneForm4(pub [f64; 4]);

impl QuadForm4 {
    /// Build from the upper triangle, mirroring exactly.
    pub fn from_upper(mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in mu..4 {
                let v = f(mu, nu);
                m[mu][nu] = v;
                m[nu][mu] = v;
            }
        }
        Self(m)
    }
}

impl TwoForm4 {
    /// Build from the strict upper triangle, antisymmetrizing exactly.
    pub fn from_upper(mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in mu + 1..4 {
                let v = f(mu, nu);
                m[mu][nu] = v;
                m[nu][mu] = -v;
            }
        }
        Self(m)
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum GeomError {
    /// Point violates the chart-domain condition; carries the offending
    /// margin value (positive inside the domain).
    OutOfChart {
        margin: f64,
    },
    /// Metric degenerate at this point (domain boundary).
    SingularMetric {
        w: f64,
    },
    BadConfig(&'static str),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::OutOfChart { margin } => {
                write!(f, "point outside chart domain (margin {margin:e})")
            }
            GeomError::SingularMetric { w } => write!(f, "metric singular (w = {w:e})"),
            GeomError::BadConfig(msg) => write!(f, "invalid geometry config: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GeomError {}

/// η(x, x) over any scalar.
pub fn eta_xx_g<R: Real>(x: &[R; 4]) -> R {
    x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - x[0] * x[0]
}

/// Denominator `w = b + η(x̂, x̂)`; the chart boundary is `w = 0`.
pub fn chart_w_g<R: Real>(x: &[R; 4], cfg: &GeometryConfig) -> R {
    let inv_l1 = R::from_f64(1.0 / cfg.l1);
    let xh = x.map(|c| c * inv_l1);
    R::from_f64(cfg.b) + eta_xx_g(&xh)
}

/// Signed chart margin: positive inside the domain on either branch.
pub fn chart_margin(x: &Point4, cfg: &GeometryConfig) -> f64 {
    match cfg.branch {
        Branch::DeSitter => chart_w_g(&x.0, cfg),
        Branch::AntiDeSitter => {
            let s = x.space_dot() / (cfg.l1 * cfg.l1);
            -(cfg.b + s)
        }
    }
}

fn require_chart(x: &Point4, cfg: &GeometryConfig) -> Result<(), GeomError> {
    let margin = chart_margin(x, cfg);
    if margin > 0.0 {
        Ok(())
    } else {
        Err(GeomError::OutOfChart { margin })
    }
}

/// Metric components over any scalar; no domain check.
pub fn metric_b_g<R: Real>(x: &[R; 4], cfg: &GeometryConfig) -> [[R; 4]; 4] {
    metric_b_scaled_g(x, cfg, 1.0)
}

/// Variant with the quadratic coefficient rescaled by `a1_factor`
/// (diagnostic knob: `a1_factor = 1` is the inertial solution).
pub fn metric_b_scaled_g<R: Real>(x: &[R; 4], cfg: &GeometryConfig, a1_factor: f64) -> [[R; 4]; 4] {
    let inv_l1 = R::from_f64(1.0 / cfg.l1);
    let xh = x.map(|c| c * inv_l1);
    let w = R::from_f64(cfg.b) + eta_xx_g(&xh);
    let a = R::from_f64(cfg.a);
    let a0 = a / w;
    let a1 = -(a / (w * w)) * R::from_f64(a1_factor);
    let lowered: [R; 4] = core::array::from_fn(|mu| xh[mu] * R::from_f64(ETA4_DIAG[mu]));
    let mut b = [[R::from_f64(0.0); 4]; 4];
    for mu in 0..4 {
        for nu in mu..4 {
            let mut v = a1 * lowered[mu] * lowered[nu];
            if mu == nu {
                v = v + a0 * R::from_f64(ETA4_DIAG[mu]);
            }
            b[mu][nu] = v;
            b[nu][mu] = v;
        }
    }
    b
}

/// Metric `B_μν` at a chart point.
///
/// ```
/// use beltrami_core::geometry::{metric_b, GeometryConfig, Point4};
///
/// // at the origin with a = b = 1 the metric is exactly flat
/// let b = metric_b(&Point4::default(), &GeometryConfig::unit()).unwrap().0;
/// assert_eq!(b[0][0], -1.0);
/// assert_eq!(b[1][1], 1.0);
/// assert_eq!(b[0][1], 0.0);
/// ```
pub fn metric_b(x: &Point4, cfg: &GeometryConfig) -> Result<QuadForm4, GeomError> {
    require_chart(x, cfg)?;
    Ok(QuadForm4(metric_b_g(&x.0, cfg)))
}

/// Closed-form inverse `B^{μν} = (w/a)(η^{μν} + x̂^μ x̂^ν / b)`.
///
/// This is the Sherman–Morrison inverse of the rank-one structure of `B`;
/// the product with [`metric_b`] is the identity to machine precision.
pub fn inverse_b(x: &Point4, cfg: &GeometryConfig) -> Result<QuadForm4, GeomError> {
    require_chart(x, cfg)?;
    let w = chart_w_g(&x.0, cfg);
    if w.abs() < 1e-14 {
        return Err(GeomError::SingularMetric { w });
    }
    let xh = x.0.map(|c| c / cfg.l1);
    Ok(QuadForm4::from_upper(|mu, nu| {
        let eta = if mu == nu { ETA4_DIAG[mu] } else { 0.0 };
        (w / cfg.a) * (eta + xh[mu] * xh[nu] / cfg.b)
    }))
}

/// Alternate closed-form candidate `(η^{μν} − x^μ x^ν)/w`.
///
/// Retained only for the discrepancy report: it does **not** invert
/// [`metric_b`] (the verification suite records the residual).
pub fn inverse_b_alt(x: &Point4, cfg: &GeometryConfig) -> Result<QuadForm4, GeomError> {
    require_chart(x, cfg)?;
    let w = chart_w_g(&x.0, cfg);
    let xh = x.0.map(|c| c / cfg.l1);
    Ok(QuadForm4::from_upper(|mu, nu| {
        let eta = if mu == nu { ETA4_DIAG[mu] } else { 0.0 };
        (eta - xh[mu] * xh[nu]) / w
    }))
}

/// The time-time component and the three leading minors of the reduced
/// spatial block `B̃_ij = B_ij − B_0i B_0j / B_00`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignatureMinors {
    pub b00: f64,
    pub minor1: f64,
    pub minor2: f64,
    pub minor3: f64,
}

impl SignatureMinors {
    /// Sylvester conditions for signature (−,+,+,+).
    pub fn is_lorentzian(&self) -> bool {
        self.b00 < 0.0 && self.minor1 > 0.0 && self.minor2 > 0.0 && self.minor3 > 0.0
    }
}

/// Minors computed from the metric matrix itself.
pub fn signature_minors(x: &Point4, cfg: &GeometryConfig) -> Result<SignatureMinors, GeomError> {
    let b = metric_b(x, cfg)?.0;
    if b[0][0] == 0.0 {
        return Err(GeomError::SingularMetric { w: 0.0 });
    }
    let mut red = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            red[i][j] = b[i + 1][j + 1] - b[0][i + 1] * b[0][j + 1] / b[0][0];
        }
    }
    let minor1 = red[0][0];
    let minor2 = red[0][0] * red[1][1] - red[0][1] * red[1][0];
    let minor3 = linalg::det(&red);
    Ok(SignatureMinors {
        b00: b[0][0],
        minor1,
        minor2,
        minor3,
    })
}

/// The same four quantities from their closed forms.
pub fn signature_minors_closed_form(
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<SignatureMinors, GeomError> {
    require_chart(x, cfg)?;
    let (a, b) = (cfg.a, cfg.b);
    let xh = x.0.map(|c| c / cfg.l1);
    let s = xh[1] * xh[1] + xh[2] * xh[2] + xh[3] * xh[3];
    let w = b + s - xh[0] * xh[0];
    let bs = b + s;
    Ok(SignatureMinors {
        b00: -a * bs / (w * w),
        minor1: a * (b + xh[2] * xh[2] + xh[3] * xh[3]) / (w * bs),
        minor2: a * a * (b + xh[3] * xh[3]) / (w * w * bs),
        minor3: a * a * a * b / (w * w * w * bs),
    })
}

/// Embed a chart point on the quadric; `positive_w` picks the half-domain.
pub fn embed_g<R: Real>(x: &[R; 4], cfg: &GeometryConfig, positive_w: bool) -> [R; 5] {
    let w = chart_w_g(x, cfg);
    let denom = match cfg.branch {
        Branch::DeSitter => w,
        Branch::AntiDeSitter => -w,
    };
    let mut big_w = denom.sqrt().recip();
    if !positive_w {
        big_w = -big_w;
    }
    let inv_l1 = R::from_f64(1.0 / cfg.l1);
    [
        x[0] * inv_l1 * big_w,
        x[1] * inv_l1 * big_w,
        x[2] * inv_l1 * big_w,
        x[3] * inv_l1 * big_w,
        big_w,
    ]
}

/// Checked embedding.
pub fn embed(
    x: &Point4,
    cfg: &GeometryConfig,
    positive_w: bool,
) -> Result<AmbientPoint5, GeomError> {
    let w = chart_w_g(&x.0, cfg);
    let ok = match cfg.branch {
        Branch::DeSitter => w > 0.0,
        Branch::AntiDeSitter => w < 0.0,
    };
    if !ok {
        return Err(GeomError::OutOfChart { margin: w });
    }
    Ok(AmbientPoint5(embed_g(&x.0, cfg, positive_w)))
}

/// Projective chart map `x^μ = l₁ · X^μ / W`.
pub fn project(p: &AmbientPoint5, cfg: &GeometryConfig) -> Result<Point4, GeomError> {
    let w = p.0[4];
    if w == 0.0 {
        return Err(GeomError::OutOfChart { margin: 0.0 });
    }
    Ok(Point4(core::array::from_fn(|mu| cfg.l1 * p.0[mu] / w)))
}

/// Jacobian `∂X^A/∂x^μ` of the embedding, by dual numbers.
pub fn embed_jacobian(x: &Point4, cfg: &GeometryConfig) -> Result<[[f64; 4]; 5], GeomError> {
    require_chart(x, cfg)?;
    let vars = Dual::<f64, 4>::vars(x.0);
    let amb = embed_g(&vars, cfg, true);
    Ok(core::array::from_fn(|a| amb[a].im))
}

/// Pull an ambient symmetric form back to the chart through the embedding.
pub fn pullback_form(
    ambient: &[[f64; 5]; 5],
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<QuadForm4, GeomError> {
    let j = embed_jacobian(x, cfg)?;
    Ok(QuadForm4::from_upper(|mu, nu| {
        let mut acc = 0.0;
        for a in 0..5 {
            for b in 0..5 {
                acc += j[a][mu] * ambient[a][b] * j[b][nu];
            }
        }
        acc
    }))
}

/// Pull an ambient antisymmetric form back to the chart.
pub fn pullback_two_form(
    ambient: &[[f64; 5]; 5],
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<TwoForm4, GeomError> {
    let j = embed_jacobian(x, cfg)?;
    Ok(TwoForm4::from_upper(|mu, nu| {
        let mut acc = 0.0;
        for a in 0..5 {
            for b in 0..5 {
                acc += j[a][mu] * ambient[a][b] * j[b][nu];
            }
        }
        acc
    }))
}

/// Pull ambient covector components back to the chart: `c_A ∂X^A/∂x^μ`.
pub fn pullback_covector(
    components: &[f64; 5],
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<OneForm4, GeomError> {
    let j = embed_jacobian(x, cfg)?;
    Ok(OneForm4(core::array::from_fn(|mu| {
        (0..5).map(|a| components[a] * j[a][mu]).sum()
    })))
}

// ---------------------------------------------------------------------------
// Induced tensors of the symmetry-breaking examples (quoted at a = b = 1).
// ---------------------------------------------------------------------------

fn require_unit_chart(x: &Point4) -> Result<(f64, [f64; 4]), GeomError> {
    let cfg = GeometryConfig::unit();
    require_chart(x, &cfg)?;
    Ok((1.0 + x.eta_xx(), x.0))
}

/// Ambient symmetric invariant tensor with constants (𝖺, 𝖻).
pub fn ambient_c(sa: f64, sb: f64) -> [[f64; 5]; 5] {
    let d = sb - sa;
    [
        [sa, sb, 0.0, 0.0, 0.0],
        [sb, 2.0 * sb - sa, 0.0, 0.0, 0.0],
        [0.0, 0.0, d, 0.0, 0.0],
        [0.0, 0.0, 0.0, d, 0.0],
        [0.0, 0.0, 0.0, 0.0, d],
    ]
}

/// Ambient antisymmetric invariant tensor with constants (𝖺, 𝖻, 𝖼).
pub fn ambient_d(da: f64, db: f64, dc: f64) -> [[f64; 5]; 5] {
    let mut m = [[0.0; 5]; 5];
    for (col, v) in [(2usize, da), (3, db), (4, dc)] {
        m[0][col] = v;
        m[1][col] = v;
        m[col][0] = -v;
        m[col][1] = -v;
    }
    m
}

/// Ambient invariant vector of the translation subgroup: (𝖺, 0, 0, 0, −𝖺).
pub fn ambient_v(va: f64) -> [f64; 5] {
    [va, 0.0, 0.0, 0.0, -va]
}

/// Ambient direction-preserved null vector: (𝖺, 𝖺, 0, 0, 0).
pub fn ambient_w(wa: f64) -> [f64; 5] {
    [wa, wa, 0.0, 0.0, 0.0]
}

/// Closed-form induced symmetric form `C_μν` (a = b = 1).
pub fn induced_c(x: &Point4, sa: f64, sb: f64) -> Result<QuadForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let s = x1 * x1 + x2 * x2 + x3 * x3;
    let d = sb - sa;
    let p01 = 1.0 + s + x0 * x1;
    let q1 = w - x1 * x1 - x0 * x1;
    let w2 = w * w;
    let entry = |mu: usize, nu: usize| -> f64 {
        match (mu, nu) {
            (0, 0) => (sb * p01 * p01 / w - d * (1.0 + s)) / w2,
            (0, 1) => (sb * p01 * q1 / w + d * x0 * x1) / w2,
            (0, 2) => (-sb * p01 * (x0 * x2 + x1 * x2) / w + d * x0 * x2) / w2,
            (0, 3) => (-sb * p01 * (x0 * x3 + x1 * x3) / w + d * x0 * x3) / w2,
            (1, 1) => (sb * q1 * q1 / w + d * (w - x1 * x1)) / w2,
            (1, 2) => (-sb * q1 * (x0 * x2 + x1 * x2) / w - d * x1 * x2) / w2,
            (1, 3) => (-sb * q1 * (x0 * x3 + x1 * x3) / w - d * x1 * x3) / w2,
            (2, 2) => (sb * (x0 * x2 + x1 * x2) * (x0 * x2 + x1 * x2) / w + d * (w - x2 * x2)) / w2,
            (2, 3) => (sb * x2 * x3 * (x0 + x1) * (x0 + x1) / w - d * x2 * x3) / w2,
            (3, 3) => (sb * (x0 * x3 + x1 * x3) * (x0 * x3 + x1 * x3) / w + d * (w - x3 * x3)) / w2,
            _ => unreachable!(),
        }
    };
    Ok(QuadForm4::from_upper(entry))
}

/// Closed-form induced field strength `D_μν` (a = b = 1).
pub fn induced_d(x: &Point4, da: f64, db: f64, dc: f64) -> Result<TwoForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let q = da * x2 + db * x3 + dc;
    let s01 = x0 + x1;
    let w2 = w * w;
    let entry = |mu: usize, nu: usize| -> f64 {
        match (mu, nu) {
            (0, 1) => -s01 * q / w2,
            (0, 2) => (da * (1.0 + x1 * x1 + x3 * x3 + x0 * x1) - db * x2 * x3 - dc * x2) / w2,
            (0, 3) => (db * (1.0 + x1 * x1 + x2 * x2 + x0 * x1) - da * x2 * x3 - dc * x3) / w2,
            (1, 2) => (da * (1.0 - x0 * x0 + x3 * x3 - x0 * x1) - db * x2 * x3 - dc * x2) / w2,
            (1, 3) => (db * (1.0 - x0 * x0 + x2 * x2 - x0 * x1) - da * x2 * x3 - dc * x3) / w2,
            (2, 3) => s01 * (da * x3 - db * x2) / w2,
            _ => unreachable!(),
        }
    };
    Ok(TwoForm4::from_upper(entry))
}

/// Gauge potential with `dU = D` exactly: the pullback of
/// `(T + X)(𝖺 dY + 𝖻 dZ + 𝖼 dW)`.
pub fn induced_u(x: &Point4, da: f64, db: f64, dc: f64) -> Result<OneForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let q = da * x2 + db * x3 + dc;
    let s01 = x0 + x1;
    let w2 = w * w;
    Ok(OneForm4([
        s01 * q * x0 / w2,
        -s01 * q * x1 / w2,
        s01 * (da * w - q * x2) / w2,
        s01 * (db * w - q * x3) / w2,
    ]))
}

/// Alternate potential variant with a first-power prefactor; kept for the
/// discrepancy report (its exterior derivative does not reproduce `D`).
pub fn induced_u_alt(x: &Point4, da: f64, db: f64, dc: f64) -> Result<OneForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let q = da * x2 + db * x3 + dc;
    let s01 = x0 + x1;
    Ok(OneForm4([
        s01 * q * x0 / w,
        -s01 * q * x1 / w,
        s01 * (da * w - q * x2) / w,
        s01 * (da * w - q * x3) / w,
    ]))
}

/// Displayed closed form of the induced one-form `V_μ` (a = b = 1).
pub fn induced_v(x: &Point4, va: f64) -> Result<OneForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let s = x1 * x1 + x2 * x2 + x3 * x3;
    let f = va * w.powf(-1.5);
    Ok(OneForm4([
        f * (1.0 + s - x0),
        f * x1 * (1.0 - x0),
        f * x2 * (1.0 - x0),
        f * x3 * (1.0 - x0),
    ]))
}

/// Pullback of the ambient-metric-lowered invariant vector; this is the
/// variant left invariant by the translation-subgroup action, and what the
/// Finsler Lagrangian uses. It equals `−1` times [`induced_v`] with the
/// sign of the `x⁰` terms flipped.
pub fn induced_v_lowered(x: &Point4, va: f64) -> Result<OneForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let s = x1 * x1 + x2 * x2 + x3 * x3;
    let f = va * w.powf(-1.5);
    Ok(OneForm4([
        -f * (1.0 + s + x0),
        f * x1 * (1.0 + x0),
        f * x2 * (1.0 + x0),
        f * x3 * (1.0 + x0),
    ]))
}

/// Displayed closed form of the induced one-form `W_μ` (a = b = 1).
pub fn induced_w(x: &Point4, wa: f64) -> Result<OneForm4, GeomError> {
    let (w, c) = require_unit_chart(x)?;
    let [x0, x1, x2, x3] = c;
    let s01 = x0 + x1;
    let f = wa * w.powf(-1.5);
    Ok(OneForm4([
        f * (w + s01 * x0),
        f * (w - s01 * x1),
        -f * s01 * x2,
        -f * s01 * x3,
    ]))
}

/// Yang–Mills-type density `D_μν D_αβ B^{μα} B^{νβ} · √|det B|` at a = b = 1.
pub fn ym_density(x: &Point4, da: f64, db: f64, dc: f64) -> Result<f64, GeomError> {
    let cfg = GeometryConfig::unit();
    let binv = inverse_b(x, &cfg)?.0;
    let d = induced_d(x, da, db, dc)?.0;
    let bdb = linalg::mat_mul(&linalg::mat_mul(&binv, &d), &binv);
    let mut scalar = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            scalar += bdb[mu][nu] * d[mu][nu];
        }
    }
    let det_b = linalg::det(&metric_b(x, &cfg)?.0);
    Ok(scalar * det_b.abs().sqrt())
}

/// Born–Infeld-type density `√|det(B − D B⁻¹ D)|` at a = b = 1.
pub fn bi_density(x: &Point4, da: f64, db: f64, dc: f64) -> Result<f64, GeomError> {
    let cfg = GeometryConfig::unit();
    let b = metric_b(x, &cfg)?.0;
    let binv = inverse_b(x, &cfg)?.0;
    let d = induced_d(x, da, db, dc)?.0;
    let dbd = linalg::mat_mul(&linalg::mat_mul(&d, &binv), &d);
    let m = linalg::mat_sub(&b, &dbd);
    Ok(linalg::det(&m).abs().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn unit() -> GeometryConfig {
        GeometryConfig::unit()
    }

    fn random_ds_point(r: &mut SplitMix64, cfg: &GeometryConfig) -> Point4 {
        loop {
            let p = Point4::new(
                r.range(-0.6, 0.6),
                r.range(-0.6, 0.6),
                r.range(-0.6, 0.6),
                r.range(-0.6, 0.6),
            );
            if chart_margin(&p, cfg) > 0.05 {
                return p;
            }
        }
    }

    #[test]
    fn metric_at_origin_is_eta() {
        let b = metric_b(&Point4::default(), &unit()).unwrap().0;
        for mu in 0..4 {
            for nu in 0..4 {
                let e = if mu == nu { ETA4_DIAG[mu] } else { 0.0 };
                assert_eq!(b[mu][nu], e);
            }
        }
    }

    #[test]
    fn b00_closed_form_sample() {
        // t = 0.5, x = (0.1, 0, 0): B₀₀ = −(b + x·x)/w²
        let x = Point4::new(0.5, 0.1, 0.0, 0.0);
        let b = metric_b(&x, &unit()).unwrap().0;
        let w = 1.0 - 0.25 + 0.01;
        let expect = -(1.0 + 0.01) / (w * w);
        assert!((b[0][0] - expect).abs() < 1e-15);
    }

    #[test]
    fn out_of_chart_is_rejected() {
        let x = Point4::new(1.5, 0.0, 0.0, 0.0);
        assert!(matches!(
            metric_b(&x, &unit()),
            Err(GeomError::OutOfChart { .. })
        ));
        let bad = GeometryConfig { a: -1.0, ..unit() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn inverse_b_product_is_identity() {
        let mut rng = SplitMix64::new(11);
        for cfg in [
            unit(),
            GeometryConfig {
                a: 2.5,
                b: 0.7,
                ..unit()
            },
            GeometryConfig::anti_de_sitter(-1.3, -2.0),
        ] {
            for _ in 0..200 {
                let x = match cfg.branch {
                    Branch::DeSitter => random_ds_point(&mut rng, &cfg),
                    Branch::AntiDeSitter => {
                        // need b + x·x < 0: stay near the spatial origin
                        Point4::new(rng.range(-0.5, 0.5), rng.range(-0.3, 0.3), 0.0, 0.0)
                    }
                };
                let b = metric_b(&x, &cfg).unwrap().0;
                let binv = inverse_b(&x, &cfg).unwrap().0;
                let prod = linalg::mat_mul(&binv, &b);
                let resid = linalg::mat_sub(&prod, &linalg::identity::<4>());
                assert!(
                    linalg::inf_norm(&resid) < 1e-12,
                    "cfg {cfg:?} x {x:?}: {}",
                    linalg::inf_norm(&resid)
                );
            }
        }
    }

    #[test]
    fn inverse_closed_form_sample_point() {
        // x = (0.3, 0.2, 0.1, 0): exact closed-form entries w(η + x xᵀ)
        let x = Point4::new(0.3, 0.2, 0.1, 0.0);
        let w = 1.0 + x.eta_xx();
        let binv = inverse_b(&x, &unit()).unwrap().0;
        assert!((binv[0][0] - w * (-1.0 + 0.09)).abs() < 1e-15);
        assert!((binv[0][1] - w * (0.3 * 0.2)).abs() < 1e-15);
        assert!((binv[1][1] - w * (1.0 + 0.04)).abs() < 1e-15);
    }

    #[test]
    fn alt_closed_form_is_not_an_inverse() {
        // The ratio-form variant fails to invert B away from the origin;
        // the verification suite reports this as a flagged discrepancy.
        let x = Point4::new(0.3, 0.2, 0.1, 0.0);
        let b = metric_b(&x, &unit()).unwrap().0;
        let alt = inverse_b_alt(&x, &unit()).unwrap().0;
        let prod = linalg::mat_mul(&alt, &b);
        let resid = linalg::mat_sub(&prod, &linalg::identity::<4>());
        assert!(linalg::inf_norm(&resid) > 0.05);
    }

    #[test]
    fn minors_at_origin() {
        let m = signature_minors(&Point4::default(), &unit()).unwrap();
        assert_eq!((m.b00, m.minor1, m.minor2, m.minor3), (-1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn minor3_closed_form_sample() {
        let x = Point4::new(0.5, 0.1, 0.0, 0.0);
        let m = signature_minors(&x, &unit()).unwrap();
        let expect = 1.0 / (0.76f64.powi(3) * 1.01);
        assert!((m.minor3 - expect).abs() < 1e-12 * expect.abs());
        let cf = signature_minors_closed_form(&x, &unit()).unwrap();
        assert!((cf.minor3 - expect).abs() < 1e-15);
    }

    #[test]
    fn signature_sweep() {
        let mut rng = SplitMix64::new(3);
        let cfg = GeometryConfig {
            a: 1.7,
            b: 0.9,
            ..unit()
        };
        for _ in 0..2000 {
            let x = random_ds_point(&mut rng, &cfg);
            let m = signature_minors(&x, &cfg).unwrap();
            assert!(m.is_lorentzian(), "{x:?} {m:?}");
            let cf = signature_minors_closed_form(&x, &cfg).unwrap();
            for (got, want) in [
                (m.b00, cf.b00),
                (m.minor1, cf.minor1),
                (m.minor2, cf.minor2),
                (m.minor3, cf.minor3),
            ] {
                assert!((got - want).abs() < 1e-10 * want.abs().max(1.0));
            }
        }
    }

    #[test]
    fn embed_examples() {
        let amb = embed(&Point4::default(), &unit(), true).unwrap();
        assert_eq!(amb.0, [0.0, 0.0, 0.0, 0.0, 1.0]);

        let x = Point4::new(0.5, 0.0, 0.0, 0.0);
        let amb = embed(&x, &unit(), true).unwrap();
        let w_expect = 1.0 / libm::sqrt(0.75);
        assert!((amb.0[4] - w_expect).abs() < 1e-15);
        assert!((amb.0[0] - 0.5 * w_expect).abs() < 1e-15);
        assert!(amb.quadric_residual(&unit()).abs() < 1e-14);
    }

    #[test]
    fn embed_project_round_trip() {
        let mut rng = SplitMix64::new(5);
        let cfg = unit();
        for _ in 0..1000 {
            let x = random_ds_point(&mut rng, &cfg);
            for sign in [true, false] {
                let amb = embed(&x, &cfg, sign).unwrap();
                assert!(amb.quadric_residual(&cfg).abs() < 1e-12);
                let back = project(&amb, &cfg).unwrap();
                for mu in 0..4 {
                    assert!((back.0[mu] - x.0[mu]).abs() < 1e-14);
                }
            }
        }
        // AdS branch round trip
        let cfg = GeometryConfig::anti_de_sitter(-1.0, -1.0);
        let x = Point4::new(0.4, 0.2, 0.1, -0.3);
        assert!(chart_margin(&x, &cfg) > 0.0);
        let amb = embed(&x, &cfg, true).unwrap();
        assert!(amb.quadric_residual(&cfg).abs() < 1e-12);
        let back = project(&amb, &cfg).unwrap();
        for mu in 0..4 {
            assert!((back.0[mu] - x.0[mu]).abs() < 1e-14);
        }
    }

    #[test]
    fn pullback_of_eta5_at_origin_is_eta() {
        let mut eta5 = [[0.0; 5]; 5];
        eta5[0][0] = -1.0;
        for i in 1..5 {
            eta5[i][i] = 1.0;
        }
        let g = pullback_form(&eta5, &Point4::default(), &unit()).unwrap().0;
        for mu in 0..4 {
            for nu in 0..4 {
                let e = if mu == nu { ETA4_DIAG[mu] } else { 0.0 };
                assert!((g[mu][nu] - e).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn pullback_matches_induced_metric_display() {
        // pullback of diag(η, b) = [bη/w − b x_l x_lᵀ/w²]/b on the dS branch
        let mut rng = SplitMix64::new(17);
        let cfg = unit();
        for _ in 0..1000 {
            let x = random_ds_point(&mut rng, &cfg);
            let g = pullback_form(&cfg.ambient_form(), &x, &cfg).unwrap().0;
            let w = 1.0 + x.eta_xx();
            for mu in 0..4 {
                for nu in 0..4 {
                    let eta = if mu == nu { ETA4_DIAG[mu] } else { 0.0 };
                    let xl_mu = ETA4_DIAG[mu] * x.0[mu];
                    let xl_nu = ETA4_DIAG[nu] * x.0[nu];
                    let expect = eta / w - xl_mu * xl_nu / (w * w);
                    assert!(
                        (g[mu][nu] - expect).abs() < 1e-10,
                        "({mu},{nu}): {} vs {expect}",
                        g[mu][nu]
                    );
                }
            }
        }
    }

    #[test]
    fn pullback_linearity() {
        let mut rng = SplitMix64::new(23);
        let cfg = unit();
        let s1 = ambient_c(0.3, -1.2);
        let s2 = cfg.ambient_form();
        let (alpha, beta) = (1.7, -0.4);
        for _ in 0..50 {
            let x = random_ds_point(&mut rng, &cfg);
            let mut combo = [[0.0; 5]; 5];
            for i in 0..5 {
                for j in 0..5 {
                    combo[i][j] = alpha * s1[i][j] + beta * s2[i][j];
                }
            }
            let lhs = pullback_form(&combo, &x, &cfg).unwrap().0;
            let p1 = pullback_form(&s1, &x, &cfg).unwrap().0;
            let p2 = pullback_form(&s2, &x, &cfg).unwrap().0;
            for mu in 0..4 {
                for nu in 0..4 {
                    let rhs = alpha * p1[mu][nu] + beta * p2[mu][nu];
                    assert!((lhs[mu][nu] - rhs).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn induced_c_at_origin() {
        let (sa, sb) = (0.7, -0.3);
        let c = induced_c(&Point4::default(), sa, sb).unwrap().0;
        assert!((c[0][0] - sa).abs() < 1e-15);
        assert!((c[0][1] - sb).abs() < 1e-15);
        assert!((c[1][1] - (2.0 * sb - sa)).abs() < 1e-15);
        assert!((c[2][2] - (sb - sa)).abs() < 1e-15);
        assert!((c[3][3] - (sb - sa)).abs() < 1e-15);
    }

    #[test]
    fn induced_c_matches_pullback() {
        let mut rng = SplitMix64::new(31);
        let cfg = unit();
        for &(sa, sb) in &[(0.0, 1.0), (1.3, -0.4)] {
            let amb = ambient_c(sa, sb);
            for _ in 0..300 {
                let x = random_ds_point(&mut rng, &cfg);
                let disp = induced_c(&x, sa, sb).unwrap().0;
                let pull = pullback_form(&amb, &x, &cfg).unwrap().0;
                for mu in 0..4 {
                    for nu in 0..4 {
                        assert!(
                            (disp[mu][nu] - pull[mu][nu]).abs() < 1e-8,
                            "({mu},{nu}) at {x:?}: {} vs {}",
                            disp[mu][nu],
                            pull[mu][nu]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn induced_d_at_origin_pattern() {
        let (da, db, dc) = (1.5, -0.7, 0.9);
        let d = induced_d(&Point4::default(), da, db, dc).unwrap().0;
        assert!((d[0][2] - da).abs() < 1e-15);
        assert!((d[0][3] - db).abs() < 1e-15);
        assert!((d[1][2] - da).abs() < 1e-15);
        assert!((d[1][3] - db).abs() < 1e-15);
        assert_eq!(d[0][1], 0.0);
        assert_eq!(d[2][3], 0.0);
    }

    #[test]
    fn induced_d_matches_pullback() {
        let mut rng = SplitMix64::new(37);
        let cfg = unit();
        let (da, db, dc) = (0.8, -1.1, 0.5);
        let amb = ambient_d(da, db, dc);
        for _ in 0..300 {
            let x = random_ds_point(&mut rng, &cfg);
            let disp = induced_d(&x, da, db, dc).unwrap().0;
            let pull = pullback_two_form(&amb, &x, &cfg).unwrap().0;
            for mu in 0..4 {
                for nu in 0..4 {
                    assert!((disp[mu][nu] - pull[mu][nu]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn exterior_derivative_of_u_is_d() {
        let mut rng = SplitMix64::new(41);
        let (da, db, dc) = (1.0, 0.6, -0.8);
        let h = 1e-5;
        for _ in 0..200 {
            let x = random_ds_point(&mut rng, &unit());
            let d = induced_d(&x, da, db, dc).unwrap().0;
            for mu in 0..4 {
                for nu in mu + 1..4 {
                    let du = |k: usize, comp: usize, delta: f64| {
                        let mut p = x;
                        p.0[k] += delta;
                        induced_u(&p, da, db, dc).unwrap().0[comp]
                    };
                    let d_mu_u_nu = (du(mu, nu, h) - du(mu, nu, -h)) / (2.0 * h);
                    let d_nu_u_mu = (du(nu, mu, h) - du(nu, mu, -h)) / (2.0 * h);
                    let fd = d_mu_u_nu - d_nu_u_mu;
                    assert!(
                        (fd - d[mu][nu]).abs() < 1e-6,
                        "({mu},{nu}) at {x:?}: fd {fd} vs D {}",
                        d[mu][nu]
                    );
                }
            }
        }
    }

    #[test]
    fn alt_potential_fails_exterior_derivative() {
        let (da, db, dc) = (1.0, 0.6, -0.8);
        let x = Point4::new(0.2, 0.3, -0.1, 0.2);
        let d = induced_d(&x, da, db, dc).unwrap().0;
        let h = 1e-5;
        let du = |k: usize, comp: usize, delta: f64| {
            let mut p = x;
            p.0[k] += delta;
            induced_u_alt(&p, da, db, dc).unwrap().0[comp]
        };
        let fd01 =
            (du(0, 1, h) - du(0, 1, -h)) / (2.0 * h) - (du(1, 0, h) - du(1, 0, -h)) / (2.0 * h);
        assert!((fd01 - d[0][1]).abs() > 1e-3);
    }

    #[test]
    fn induced_v_and_w_match_covector_pullbacks() {
        let mut rng = SplitMix64::new(43);
        let cfg = unit();
        let (va, wa) = (1.4, -0.9);
        for _ in 0..300 {
            let x = random_ds_point(&mut rng, &cfg);
            // displayed forms equal the pullback of the raw components
            let v_disp = induced_v(&x, va).unwrap().0;
            let v_pull = pullback_covector(&ambient_v(va), &x, &cfg).unwrap().0;
            let w_disp = induced_w(&x, wa).unwrap().0;
            let w_pull = pullback_covector(&ambient_w(wa), &x, &cfg).unwrap().0;
            for mu in 0..4 {
                assert!((v_disp[mu] - v_pull[mu]).abs() < 1e-12);
                assert!((w_disp[mu] - w_pull[mu]).abs() < 1e-12);
            }
            // the lowered variant is the pullback of η⁽⁵⁾-lowered components
            let v_low = induced_v_lowered(&x, va).unwrap().0;
            let lowered = [-va, 0.0, 0.0, 0.0, -va];
            let v_low_pull = pullback_covector(&lowered, &x, &cfg).unwrap().0;
            for mu in 0..4 {
                assert!((v_low[mu] - v_low_pull[mu]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn densities_with_zero_field() {
        let x = Point4::new(0.2, 0.1, -0.3, 0.4);
        assert_eq!(ym_density(&x, 0.0, 0.0, 0.0).unwrap(), 0.0);
        let bi = bi_density(&x, 0.0, 0.0, 0.0).unwrap();
        let det_b = linalg::det(&metric_b(&x, &unit()).unwrap().0);
        assert!((bi - det_b.abs().sqrt()).abs() < 1e-14);
    }

    #[test]
    fn ym_density_against_index_loop_oracle() {
        let mut rng = SplitMix64::new(47);
        let (da, db, dc) = (1.0, 0.0, 0.0);
        for _ in 0..50 {
            let x = random_ds_point(&mut rng, &unit());
            let got = ym_density(&x, da, db, dc).unwrap();
            // brute-force quadruple contraction
            let binv = inverse_b(&x, &unit()).unwrap().0;
            let d = induced_d(&x, da, db, dc).unwrap().0;
            let mut scalar = 0.0;
            for mu in 0..4 {
                for nu in 0..4 {
                    for al in 0..4 {
                        for be in 0..4 {
                            scalar += d[mu][nu] * d[al][be] * binv[mu][al] * binv[nu][be];
                        }
                    }
                }
            }
            let weight = linalg::det(&metric_b(&x, &unit()).unwrap().0).abs().sqrt();
            let expect = scalar * weight;
            assert!(
                (got - expect).abs() < 1e-12 * expect.abs().max(1.0),
                "{got} vs {expect}"
            );
        }
    }
}
