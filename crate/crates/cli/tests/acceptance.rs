//! Acceptance suite: one test per numbered criterion, each printing a
//! pass/fail line (visible with `--nocapture`). The shared verification
//! report is computed once; criteria with runtime budgets re-execute their
//! workload directly under a timer.

use std::sync::OnceLock;
use std::time::Instant;

use beltrami_cli::config::RunConfig;
use beltrami_cli::report::{CheckRecord, Status, VerificationReport};
use beltrami_cli::verify::run_verify;
use beltrami_core::dynamics::{el_residual, hessian_vv, integrate_free_motion, KinState};
use beltrami_core::exact::QMat;
use beltrami_core::geometry::{chart_margin, GeometryConfig};
use beltrami_core::lie::{
    in_span, invariant_space, tensor_c, tensor_d, Convention, Species, SubalgebraSpec,
};
use beltrami_core::rng::SplitMix64;

fn shared_report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let cfg = RunConfig::default();
        run_verify(&cfg, None).expect("suites run").0
    })
}

fn check(id: &str) -> &'static CheckRecord {
    shared_report()
        .checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("missing check `{id}`"))
}

fn assert_pass(id: &str) -> &'static CheckRecord {
    let c = check(id);
    assert_eq!(
        c.status,
        Status::Pass,
        "{id}: residual {} vs tolerance {} ({})",
        c.residual,
        c.tolerance,
        c.anchor
    );
    c
}

fn assert_flagged(id: &str) -> &'static CheckRecord {
    let c = check(id);
    assert_eq!(c.status, Status::Flagged, "{id} should be flagged");
    c
}

fn announce(n: usize, ok: bool, detail: &str) {
    println!(
        "[criterion {n:2}] {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
}

#[test]
fn criterion_01_inertia_theorem() {
    // 10^3 seeded random states: residual < 1e-6 and integrated
    // trajectories over dt = 0.5 straight to < 1e-6, within 10 s.
    let start = Instant::now();
    let unit = GeometryConfig::unit();
    let mut rng = SplitMix64::new(20260808);
    let mut worst_resid: f64 = 0.0;
    let mut worst_straight: f64 = 0.0;
    let mut produced = 0usize;
    while produced < 1000 {
        let s = KinState::new(
            rng.range(-0.2, 0.2),
            [
                rng.range(-0.4, 0.4),
                rng.range(-0.4, 0.4),
                rng.range(-0.4, 0.4),
            ],
            [
                rng.range(-0.5, 0.5),
                rng.range(-0.5, 0.5),
                rng.range(-0.5, 0.5),
            ],
        );
        if chart_margin(&s.point(), &unit) < 0.15
            || beltrami_core::dynamics::radicand_g(s.t, &s.x, &s.v, &unit, 1.0) > -0.05
        {
            continue;
        }
        let r = el_residual(&s, &unit).unwrap();
        worst_resid = worst_resid.max(r.iter().fold(0.0f64, |m, c| m.max(c.abs())));
        let traj = integrate_free_motion(&s, s.t + 0.5, 0.02, &unit).unwrap();
        worst_straight = worst_straight.max(traj.straightness_error());
        produced += 1;
    }
    let elapsed = start.elapsed().as_secs_f64();
    let ok = worst_resid < 1e-6 && worst_straight < 1e-6 && elapsed < 10.0;
    announce(
        1,
        ok,
        &format!(
            "inertia residual {worst_resid:.2e} < 1e-6, straightness {worst_straight:.2e} < 1e-6, runtime {elapsed:.2}s < 10s over 1000 states"
        ),
    );
}

#[test]
fn criterion_02_pde_system() {
    let c = assert_pass("dynamics.pde.residuals");
    announce(
        2,
        c.residual < 1e-10,
        &format!(
            "all four coefficient-equation residuals {:.2e} < 1e-10 at {} random chart points (dual numbers)",
            c.residual,
            RunConfig::default().sweep_points
        ),
    );
}

#[test]
fn criterion_03_hessian_limit() {
    // the determinant at the origin matches the analytic closed form for
    // 100 random (a, b, v); the pinned values are det = -1 at rest and
    // det = -32 at v·v = 0.75, where the quoted -8 is the parallel
    // eigenvalue — recorded as a flagged discrepancy, not failed.
    let c = assert_pass("dynamics.hessian.origin_det");
    let flag = assert_flagged("dynamics.hessian.quoted_limit");
    let unit = GeometryConfig::unit();
    let rest = hessian_vv(&KinState::new(0.0, [0.0; 3], [0.0; 3]), &unit)
        .unwrap()
        .1;
    let fast = hessian_vv(
        &KinState::new(0.0, [0.0; 3], [libm::sqrt(0.75), 0.0, 0.0]),
        &unit,
    )
    .unwrap()
    .1;
    let ok = c.residual < 1e-9 && (rest + 1.0).abs() < 1e-9 && (fast + 32.0).abs() < 1e-7;
    announce(
        3,
        ok,
        &format!(
            "det closed form to {:.2e} (100 random a, b, v); det(v=0) = {rest:.12}; det(v.v=0.75) = {fast:.9} with quoted -8 flagged (gap {:.1})",
            c.residual, flag.residual
        ),
    );
}

#[test]
fn criterion_04_induced_metric_identity() {
    let pb = assert_pass("geometry.metric_b.pullback_conformal");
    let lu = assert_pass("geometry.inverse_b.lu_oracle");
    let prod = assert_pass("geometry.inverse_b.product_identity");
    assert_flagged("geometry.inverse_b.alt_form");
    let ok = pb.residual < 1e-10 && lu.residual < 1e-12;
    announce(
        4,
        ok,
        &format!(
            "pullback conformal to metric at {:.2e} < 1e-10 on both branches; closed-form inverse vs numerical inversion {:.2e} < 1e-12 (product identity {:.2e}); printed ratio-form variant flagged",
            pb.residual, lu.residual, prod.residual
        ),
    );
}

#[test]
fn criterion_05_signature() {
    let syl = assert_pass("geometry.signature.sylvester");
    let cf = assert_pass("geometry.signature.minors_closed_form");
    let ok = syl.residual == 0.0 && cf.residual < 1e-10;
    announce(
        5,
        ok,
        &format!(
            "10^4 admissible points: B00 < 0 with three positive minors ({} violations); closed-form minors to {:.2e} relative",
            syl.residual, cf.residual
        ),
    );
}

#[test]
fn criterion_06_group_action() {
    let def = assert_pass("symmetry.sample.defining_relation");
    let flt = assert_pass("symmetry.flt.projective_match");
    let inv = assert_pass("symmetry.invariance.metric");
    let dec = assert_pass("symmetry.decompose.block_relation");
    let rate = assert_pass("symmetry.poincare.contraction_rate");
    let ok = def.residual < 1e-9
        && flt.residual < 1e-9
        && inv.residual < 1e-6
        && dec.residual < 1e-9
        && rate.residual >= 1.9;
    announce(
        6,
        ok,
        &format!(
            "defining relation {:.2e} < 1e-9; flt vs projective {:.2e} < 1e-9; metric invariance {:.2e} < 1e-6; block relation {:.2e} < 1e-9; contraction rate {:.3} >= 1.9",
            def.residual, flt.residual, inv.residual, dec.residual, rate.residual
        ),
    );
}

#[test]
fn criterion_07_lie_tables() {
    let tables = assert_pass("lie.table.rank7");
    let basis = assert_pass("lie.bracket.basis_display");
    let ops = assert_pass("lie.cross.operator_realization");
    assert_flagged("lie.generator.p_plus_scale");
    // the normalization multipliers are logged in the table anchor
    let ok = tables.residual == 0.0
        && basis.residual == 45.0
        && ops.residual == 0.0
        && tables.anchor.contains("multipliers");
    announce(
        7,
        ok,
        "both rank-7 tables exact in Q(sqrt 2) with multipliers logged; 45 basis bracket pairs exact; operator realization matches on all degree-<=3 monomials (P+ scale flagged)",
    );
}

#[test]
fn criterion_08_invariant_tensors() {
    // re-run the exact solves under a timer (< 5 s) and assert the
    // dimensions and quoted-tensor membership directly.
    let start = Instant::now();
    let vec_spec = SubalgebraSpec::by_name("K1+").unwrap();
    let inv_v = invariant_space(&vec_spec, Species::Vector, Convention::Contravariant);
    let sym_spec = SubalgebraSpec::by_name("example1").unwrap();
    let inv_c = invariant_space(&sym_spec, Species::Symmetric2, Convention::Contravariant);
    let anti_spec = SubalgebraSpec::by_name("H1+").unwrap();
    let inv_d = invariant_space(
        &anti_spec,
        Species::Antisymmetric2,
        Convention::Contravariant,
    );
    let full = SubalgebraSpec::by_name("o(1,4)").unwrap();
    let inv_full = invariant_space(&full, Species::Symmetric2, Convention::Contravariant);
    let elapsed = start.elapsed().as_secs_f64();

    let dims_ok = inv_v.dimension == 1
        && inv_c.dimension == 2
        && inv_d.dimension == 3
        && inv_full.dimension == 1;
    let membership_ok = in_span(
        &inv_v.basis,
        &QMat::new(5, 1, beltrami_core::lie::vector_v().to_vec()),
    ) && in_span(&inv_c.basis, &tensor_c(2, 3))
        && in_span(&inv_c.basis, &beltrami_core::lie::eta5())
        && tensor_c(-1, 0) == beltrami_core::lie::eta5()
        && in_span(&inv_d.basis, &tensor_d(5, -7, 2))
        && in_span(&inv_full.basis, &beltrami_core::lie::eta5());
    let directions = assert_pass("lie.direction.relations");
    let ok = dims_ok && membership_ok && directions.residual == 0.0 && elapsed < 5.0;
    announce(
        8,
        ok,
        &format!(
            "dims (vector, symmetric, antisymmetric, full) = ({}, {}, {}, {}); quoted tensors and eta in span, eta at (a,b) = (-1,0); direction relations exact; runtime {elapsed:.2}s < 5s",
            inv_v.dimension, inv_c.dimension, inv_d.dimension, inv_full.dimension
        ),
    );
}

#[test]
fn criterion_09_modes() {
    let exact = assert_pass("modes.exact.ode_residual");
    let agree = assert_pass("modes.ode.exact_agreement");
    let w0 = assert_pass("modes.wkb.w0_identity");
    let fixed = assert_pass("modes.wkb.fixed_point");
    let ok = exact.residual < 1e-10
        && agree.residual < 1e-6
        && w0.residual < 1e-12
        && fixed.residual < 1e-9;
    announce(
        9,
        ok,
        &format!(
            "exact mode ODE residual {:.2e} < 1e-10 on [-5, 5]; numeric agreement {:.2e} < 1e-6; w0 identity {:.2e} < 1e-12; constant-w fixed point {:.2e} < 1e-9",
            exact.residual, agree.residual, w0.residual, fixed.residual
        ),
    );
}

#[test]
fn criterion_10_unruh() {
    let fourier = assert_pass("modes.unruh.fourier_match");
    let zero = assert_flagged("modes.unruh.omega_zero");
    let decay = assert_pass("modes.unruh.decay");
    let ok = fourier.residual < 1e-8 && zero.residual < 1e-8 && decay.residual == 0.0;
    announce(
        10,
        ok,
        &format!(
            "quadrature vs closed form {:.2e} < 1e-8 on |omega| <= 10; omega = 0 value is pi/2 (flagged vs the quoted pi, residual {:.2e}); amplitude monotone for dE >= 3",
            fourier.residual, zero.residual
        ),
    );
}

#[test]
fn criterion_11_du_equals_d_and_density_invariance() {
    let du = assert_pass("geometry.induced.du_equals_d");
    let inv = assert_pass("geometry.density.invariance");
    assert_flagged("geometry.induced.u_alt_variant");
    let ok = du.residual < 1e-6 && inv.residual < 1e-6;
    announce(
        11,
        ok,
        &format!(
            "finite-difference dU = D at {:.2e} < 1e-6 over 1000 points; YM and BI densities invariant under stabilizer maps with the Jacobian factor at {:.2e} < 1e-6",
            du.residual, inv.residual
        ),
    );
}

#[test]
fn criterion_12_short_distance_action() {
    let c = assert_pass("dynamics.action.derivative_residual");
    announce(
        12,
        c.residual < 1e-8,
        &format!(
            "closed-form action derivative matches the integrand to {:.2e} < 1e-8 on a 1089-point (t, v.v) grid",
            c.residual
        ),
    );
}

#[test]
fn acceptance_report_is_green_with_known_flags() {
    let report = shared_report();
    assert_eq!(report.summary.failed, 0, "no check may fail");
    // the recorded discrepancies, and nothing else, carry flags
    let flagged: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Flagged)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(
        flagged,
        vec![
            "geometry.inverse_b.alt_form",
            "geometry.induced.u_alt_variant",
            "dynamics.hessian.quoted_limit",
            "lie.generator.p_plus_scale",
            "lie.invariant.convention",
            "modes.s1s2.envelope_factor",
            "modes.unruh.omega_zero",
        ]
    );
}
