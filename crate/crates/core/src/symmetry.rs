//! Isometry group elements of the quadric: sampling by exponentiating the
//! algebra, the (N, P, λ) block decomposition with its defining relation,
//! the fractional linear action on chart coordinates (checked against the
//! projective route), metric-invariance residuals, and the flat-limit
//! contraction to inhomogeneous Lorentz transformations.

use alloc::vec::Vec;
use core::fmt;

use crate::dual::{Dual, Real};
use crate::geometry::{
    self, chart_margin, metric_b_g, Branch, GeomError, GeometryConfig, Point4, ETA4_DIAG,
};
use crate::linalg::{self, MatExpError};
use crate::rng::SplitMix64;

/// Group element: a 5×5 matrix preserving the branch quadratic form
/// diag(−1, 1, 1, 1, ±1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    pub m: [[f64; 5]; 5],
    pub branch: Branch,
}

/// The unit branch form diag(−1, 1, 1, 1, ±1).
pub fn branch_eta(branch: Branch) -> [[f64; 5]; 5] {
    let mut g = [[0.0; 5]; 5];
    g[0][0] = -1.0;
    for i in 1..4 {
        g[i][i] = 1.0;
    }
    g[4][4] = match branch {
        Branch::DeSitter => 1.0,
        Branch::AntiDeSitter => -1.0,
    };
    g
}

impl GroupElement {
    pub fn identity(branch: Branch) -> Self {
        Self {
            m: linalg::identity(),
            branch,
        }
    }

    /// `‖Mᵀ g M − g‖∞` for the branch form; ~1e−12 for honest members.
    pub fn defining_residual(&self) -> f64 {
        let g = branch_eta(self.branch);
        let mtgm = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(&self.m), &g), &self.m);
        linalg::inf_norm(&linalg::mat_sub(&mtgm, &g))
    }

    pub fn det(&self) -> f64 {
        linalg::det(&self.m)
    }

    pub fn compose(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            m: linalg::mat_mul(&self.m, &rhs.m),
            branch: self.branch,
        }
    }
}

/// Blocks of the group element: 4×4 `N`, column `P`, and the sign `λ`
/// normalizing the corner entry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockDecomposition {
    pub n: [[f64; 4]; 4],
    pub p: [f64; 4],
    pub lambda: f64,
    pub branch: Branch,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum GroupError {
    MatExp(MatExpError),
    /// The fractional linear denominator vanished or changed sign: the
    /// image left the half-chart. Carries the offending denominator.
    ChartEscape {
        denominator: f64,
    },
    /// `1 ∓ ηPP ≤ 0`: the block square roots leave the real domain.
    DecompositionDomain {
        q: f64,
    },
    Geom(GeomError),
}

impl From<MatExpError> for GroupError {
    fn from(e: MatExpError) -> Self {
        GroupError::MatExp(e)
    }
}

impl From<GeomError> for GroupError {
    fn from(e: GeomError) -> Self {
        GroupError::Geom(e)
    }
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::MatExp(_) => write!(f, "matrix exponential failed"),
            GroupError::ChartEscape { denominator } => {
                write!(f, "image escapes half-chart (denominator {denominator:e})")
            }
            GroupError::DecompositionDomain { q } => {
                write!(f, "block decomposition out of domain (1 ∓ ηPP = {q:e})")
            }
            GroupError::Geom(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GroupError {}

/// Algebra basis element w.r.t. the branch form: `δ_A^C g_BD − δ_B^C g_AD`.
fn algebra_basis(a: usize, b: usize, branch: Branch) -> [[f64; 5]; 5] {
    let g = branch_eta(branch);
    let mut m = [[0.0; 5]; 5];
    m[a][b] = g[b][b];
    m[b][a] = -g[a][a];
    m
}

/// Exponentiate a seeded random algebra combination; deterministic per
/// seed, coefficients uniform in [−scale, scale].
pub fn sample_group_element(
    seed: u64,
    scale: f64,
    branch: Branch,
) -> Result<GroupElement, GroupError> {
    let mut rng = SplitMix64::new(seed);
    let mut x = [[0.0; 5]; 5];
    for a in 0..5 {
        for b in a + 1..5 {
            let c = rng.range(-scale, scale);
            let basis = algebra_basis(a, b, branch);
            x = linalg::mat_add(&x, &linalg::mat_scale(&basis, c));
        }
    }
    Ok(GroupElement {
        m: linalg::matexp(&x)?,
        branch,
    })
}

/// Group element from a single algebra coefficient, e.g. a plane rotation.
pub fn exp_single(
    a: usize,
    b: usize,
    angle: f64,
    branch: Branch,
) -> Result<GroupElement, GroupError> {
    let basis = algebra_basis(a, b, branch);
    Ok(GroupElement {
        m: linalg::matexp(&linalg::mat_scale(&basis, angle))?,
        branch,
    })
}

/// Extract the (N, P, λ) blocks. `λ` is the sign normalizing the corner
/// entry and carries no further interpretation.
pub fn decompose(el: &GroupElement) -> Result<BlockDecomposition, GroupError> {
    let m44 = el.m[4][4];
    if m44 == 0.0 {
        return Err(GroupError::DecompositionDomain { q: 0.0 });
    }
    let lambda = if m44 > 0.0 { 1.0 } else { -1.0 };
    let n: [[f64; 4]; 4] = core::array::from_fn(|i| core::array::from_fn(|j| el.m[i][j] / lambda));
    let p: [f64; 4] = core::array::from_fn(|i| el.m[i][4] / lambda);
    let q = match el.branch {
        Branch::DeSitter => 1.0 - eta_pp(&p),
        Branch::AntiDeSitter => 1.0 + eta_pp(&p),
    };
    if q <= 0.0 {
        return Err(GroupError::DecompositionDomain { q });
    }
    Ok(BlockDecomposition {
        n,
        p,
        lambda,
        branch: el.branch,
    })
}

fn eta_pp(p: &[f64; 4]) -> f64 {
    -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]
}

impl BlockDecomposition {
    /// `√(1 ∓ ηPP)`, the corner entry of the normalized element.
    pub fn corner(&self) -> f64 {
        let q = match self.branch {
            Branch::DeSitter => 1.0 - eta_pp(&self.p),
            Branch::AntiDeSitter => 1.0 + eta_pp(&self.p),
        };
        libm::sqrt(q)
    }

    /// Residual of the block relation
    /// `NᵀηN = η + NᵀηP PᵀηN / (∓1 + ηPP)`.
    pub fn relation_residual(&self) -> f64 {
        let mut lhs = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0.0;
                for k in 0..4 {
                    acc += self.n[k][i] * ETA4_DIAG[k] * self.n[k][j];
                }
                lhs[i][j] = acc;
            }
        }
        let denom = match self.branch {
            Branch::DeSitter => -1.0 + eta_pp(&self.p),
            Branch::AntiDeSitter => 1.0 + eta_pp(&self.p),
        };
        // u = NᵀηP
        let u: [f64; 4] = core::array::from_fn(|i| {
            (0..4)
                .map(|k| self.n[k][i] * ETA4_DIAG[k] * self.p[k])
                .sum()
        });
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let eta = if i == j { ETA4_DIAG[i] } else { 0.0 };
                let rhs = eta + u[i] * u[j] / denom;
                worst = worst.max((lhs[i][j] - rhs).abs());
            }
        }
        worst
    }

    /// Rebuild the 5×5 element from the blocks.
    pub fn reassemble(&self) -> GroupElement {
        let r = self.corner();
        let sign = match self.branch {
            Branch::DeSitter => -1.0,
            Branch::AntiDeSitter => 1.0,
        };
        let mut m = [[0.0; 5]; 5];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = self.lambda * self.n[i][j];
            }
            m[i][4] = self.lambda * self.p[i];
        }
        for j in 0..4 {
            // bottom row: ∓ PᵀηN / r
            let mut acc = 0.0;
            for k in 0..4 {
                acc += self.p[k] * ETA4_DIAG[k] * self.n[k][j];
            }
            m[4][j] = self.lambda * sign * acc / r;
        }
        m[4][4] = self.lambda * r;
        GroupElement {
            m,
            branch: self.branch,
        }
    }
}

/// Fractional linear action over any scalar. Blocks are held as plain
/// floats; only the chart point is differentiated through.
fn flt_g<R: Real>(
    dec: &BlockDecomposition,
    cfg: &GeometryConfig,
    x: &[R; 4],
) -> Result<[R; 4], GroupError> {
    let sqrt_b = libm::sqrt(cfg.b.abs());
    let r = dec.corner();
    let sign = match dec.branch {
        Branch::DeSitter => -1.0,
        Branch::AntiDeSitter => 1.0,
    };
    let inv_l1 = R::from_f64(1.0 / cfg.l1);
    let xh = x.map(|c| c * inv_l1);
    // numerator N x̂ + √b P, denominator ∓ PᵀηN x̂/(√b r) + r
    let num: [R; 4] = core::array::from_fn(|mu| {
        let mut acc = R::from_f64(sqrt_b * dec.p[mu]);
        for nu in 0..4 {
            acc = acc + R::from_f64(dec.n[mu][nu]) * xh[nu];
        }
        acc
    });
    let mut den = R::from_f64(r);
    for gamma in 0..4 {
        let mut coef = 0.0;
        for alpha in 0..4 {
            coef += dec.p[alpha] * ETA4_DIAG[alpha] * dec.n[alpha][gamma];
        }
        den = den + R::from_f64(sign * coef / (sqrt_b * r)) * xh[gamma];
    }
    if den.value() <= 1e-12 {
        return Err(GroupError::ChartEscape {
            denominator: den.value(),
        });
    }
    Ok(core::array::from_fn(|mu| {
        num[mu] / den * R::from_f64(cfg.l1)
    }))
}

/// Apply the fractional linear transformation of a group element to a
/// chart point.
pub fn flt_apply(
    el: &GroupElement,
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<Point4, GroupError> {
    let margin = chart_margin(x, cfg);
    if margin <= 0.0 {
        return Err(GeomError::OutOfChart { margin }.into());
    }
    let dec = decompose(el)?;
    Ok(Point4(flt_g(&dec, cfg, &x.0)?))
}

/// Projective route: embed, act with the (b-conjugated) ambient matrix,
/// divide the first four components by the fifth.
pub fn flt_projective(
    el: &GroupElement,
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<Point4, GroupError> {
    let amb = geometry::embed(x, cfg, true)?;
    let sqrt_b = libm::sqrt(cfg.b.abs());
    // conjugate by diag(1,1,1,1,√b): upper-right scales by √b, lower-left by 1/√b
    let mut m = el.m;
    for i in 0..4 {
        m[i][4] *= sqrt_b;
        m[4][i] /= sqrt_b;
    }
    let image = linalg::mat_vec(&m, &amb.0);
    if image[4] == 0.0 {
        return Err(GroupError::ChartEscape { denominator: 0.0 });
    }
    Ok(Point4(core::array::from_fn(|mu| {
        cfg.l1 * image[mu] / image[4]
    })))
}

/// Pullback residual `B_αβ(x′) ∂x′^α/∂x^μ ∂x′^β/∂x^ν − B_μν(x)` with the
/// Jacobian from dual numbers; the max-norm is the invariance defect.
pub fn verify_b_invariance(
    el: &GroupElement,
    x: &Point4,
    cfg: &GeometryConfig,
) -> Result<[[f64; 4]; 4], GroupError> {
    let margin = chart_margin(x, cfg);
    if margin <= 0.0 {
        return Err(GeomError::OutOfChart { margin }.into());
    }
    let dec = decompose(el)?;
    let vars = Dual::<f64, 4>::vars(x.0);
    let image = flt_g(&dec, cfg, &vars)?;
    let x_prime = Point4(core::array::from_fn(|mu| image[mu].re));
    let margin_prime = chart_margin(&x_prime, cfg);
    if margin_prime <= 0.0 {
        return Err(GeomError::OutOfChart {
            margin: margin_prime,
        }
        .into());
    }
    let jac: [[f64; 4]; 4] = core::array::from_fn(|alpha| image[alpha].im);
    let b_prime = metric_b_g(&x_prime.0, cfg);
    let b_here = metric_b_g(&x.0, cfg);
    let mut resid = [[0.0; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = 0.0;
            for al in 0..4 {
                for be in 0..4 {
                    acc += b_prime[al][be] * jac[al][mu] * jac[be][nu];
                }
            }
            resid[mu][nu] = acc - b_here[mu][nu];
        }
    }
    Ok(resid)
}

/// A de Sitter "translation" with prescribed column `P`: the unique
/// boost-like element with upper-left block `I + γ P Pᵀη`, γ = −1/(1 + r).
pub fn translation_element(p: &[f64; 4]) -> Result<GroupElement, GroupError> {
    let s = eta_pp(p);
    let q = 1.0 - s;
    if q <= 0.0 {
        return Err(GroupError::DecompositionDomain { q });
    }
    let r = libm::sqrt(q);
    let gamma = -1.0 / (1.0 + r);
    let n: [[f64; 4]; 4] = core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            let delta = if i == j { 1.0 } else { 0.0 };
            delta + gamma * p[i] * ETA4_DIAG[j] * p[j]
        })
    });
    let dec = BlockDecomposition {
        n,
        p: *p,
        lambda: 1.0,
        branch: Branch::DeSitter,
    };
    Ok(dec.reassemble())
}

/// Embed a 4×4 Lorentz matrix as the upper block (P = 0).
pub fn lorentz_block(n: &[[f64; 4]; 4], branch: Branch) -> GroupElement {
    let mut m = [[0.0; 5]; 5];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = n[i][j];
        }
    }
    m[4][4] = 1.0;
    GroupElement { m, branch }
}

/// One row of the flat-limit convergence report.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContractionSample {
    pub l1: f64,
    pub deviation: f64,
}

/// Flat-limit check: with `P = p/l₁` the fractional linear map converges
/// to `x ↦ Nx + √b p`; the fitted log–log rate should be ≈ 2.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractionReport {
    pub samples: Vec<ContractionSample>,
    /// Least-squares slope of ln(deviation) against ln(l₁), negated.
    pub rate: f64,
}

pub fn poincare_limit_check(
    n: &[[f64; 4]; 4],
    p: &[f64; 4],
    l1_values: &[f64],
    b: f64,
    points: &[Point4],
) -> Result<ContractionReport, GroupError> {
    let sqrt_b = libm::sqrt(b.abs());
    let mut samples = Vec::new();
    for &l1 in l1_values {
        let cfg = GeometryConfig {
            b,
            l1,
            ..GeometryConfig::unit()
        };
        let scaled_p: [f64; 4] = core::array::from_fn(|i| p[i] / l1);
        let trans = translation_element(&scaled_p)?;
        let el = trans.compose(&lorentz_block(n, Branch::DeSitter));
        let mut worst: f64 = 0.0;
        for x in points {
            let image = flt_apply(&el, x, &cfg)?;
            for mu in 0..4 {
                let target: f64 =
                    (0..4).map(|nu| n[mu][nu] * x.0[nu]).sum::<f64>() + sqrt_b * p[mu];
                worst = worst.max((image.0[mu] - target).abs());
            }
        }
        samples.push(ContractionSample {
            l1,
            deviation: worst,
        });
    }
    // least-squares slope in log-log coordinates
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|s| s.deviation > 0.0)
        .map(|s| (libm::log(s.l1), libm::log(s.deviation)))
        .collect();
    let rate = if pts.len() >= 2 {
        let n_pts = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        -(n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx)
    } else {
        f64::INFINITY
    };
    Ok(ContractionReport { samples, rate })
}
