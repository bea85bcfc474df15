//! Property-based invariants: exact-arithmetic identities, rank–nullity,
//! derivative agreement between duals and finite differences, chart
//! round-trips, and homogeneity of the square-root Lagrangian.

use beltrami_core::dual::{central_diff, Dual};
use beltrami_core::dynamics::{lagrangian_g, radicand_g};
use beltrami_core::exact::{ratio, Matrix, QSqrt2, Rational};
use beltrami_core::geometry::{chart_margin, embed, project, GeometryConfig, Point4};
use beltrami_core::Real;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn qsqrt2_norm_identity(p in small_rational(), q in small_rational()) {
        // (p + q√2)(p − q√2) = p² − 2q², exactly
        let x = QSqrt2::new(p.clone(), q.clone());
        let prod = x.clone() * x.conj();
        prop_assert!(prod.q.is_zero());
        prop_assert_eq!(prod.p, p.clone() * p - ratio(2, 1) * q.clone() * q);
    }

    #[test]
    fn rank_nullity_on_random_exact_matrices(
        rows in 1usize..=25,
        cols in 1usize..=25,
        seed in any::<u64>(),
    ) {
        let mut rng = beltrami_core::rng::SplitMix64::new(seed);
        let m = Matrix::<Rational>::from_fn(rows, cols, |_, _| {
            ratio(rng.below(11) as i64 - 5, 1 + rng.below(4) as i64)
        });
        let rank = m.rank();
        let null = m.nullspace();
        prop_assert_eq!(rank + null.len(), cols);
        for v in &null {
            prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn dual_derivative_matches_central_difference(x in -1.2f64..1.2) {
        // composite with exp/ln/sqrt/tanh in the chain
        let f = |t: f64| libm::exp(libm::tanh(2.0 * t)) / libm::sqrt(2.5 + libm::sin(t));
        let d = {
            let v = Dual::<f64, 1>::variable(x, 0);
            let num = (v * Dual::from_f64(2.0)).tanh().exp();
            let den = (Dual::from_f64(2.5) + v.sin()).sqrt();
            (num / den).im[0]
        };
        let fd = central_diff(f, x, 1e-3);
        prop_assert!((d - fd).abs() < 1e-6 * d.abs().max(1.0));
    }

    #[test]
    fn embed_project_round_trip(
        t in -0.55f64..0.55,
        x1 in -0.4f64..0.4,
        x2 in -0.4f64..0.4,
        x3 in -0.4f64..0.4,
        a in 0.5f64..2.0,
        b in 0.5f64..2.0,
    ) {
        let cfg = GeometryConfig { a, b, ..GeometryConfig::unit() };
        let p = Point4::new(t, x1, x2, x3);
        prop_assume!(chart_margin(&p, &cfg) > 0.05);
        let amb = embed(&p, &cfg, true).unwrap();
        prop_assert!(amb.quadric_residual(&cfg).abs() < 1e-12);
        let back = project(&amb, &cfg).unwrap();
        for mu in 0..4 {
            prop_assert!((back.0[mu] - p.0[mu]).abs() < 1e-14);
        }
    }

    #[test]
    fn lagrangian_is_degree_one_homogeneous(
        t in -0.3f64..0.3,
        vx in -0.4f64..0.4,
        vy in -0.4f64..0.4,
        lam in 0.1f64..3.0,
    ) {
        // time reparametrization scales (dt, dx) together: with velocity
        // fixed, the radicand picks up λ² and L picks up λ
        let cfg = GeometryConfig::unit();
        let x = [0.05, -0.1, 0.08];
        let v = [vx, vy, 0.1];
        prop_assume!(radicand_g(t, &x, &v, &cfg, 1.0) < -1e-3);
        let base: f64 = lagrangian_g(t, &x, &v, &cfg, 1.0);
        // scale the 4-velocity (1, v) → (λ, λv) through the quadratic form
        let b = beltrami_core::geometry::metric_b(&Point4::new(t, x[0], x[1], x[2]), &cfg)
            .unwrap()
            .0;
        let u = [lam, lam * v[0], lam * v[1], lam * v[2]];
        let mut rad = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                rad += b[mu][nu] * u[mu] * u[nu];
            }
        }
        prop_assert!((libm::sqrt(rad.abs()) - lam * base).abs() < 1e-10 * (lam * base).abs());
    }

    #[test]
    fn flt_is_a_group_action(seed1 in 0u64..500, seed2 in 0u64..500) {
        use beltrami_core::symmetry::{flt_apply, sample_group_element};
        let cfg = GeometryConfig::unit();
        let x = Point4::new(0.1, 0.12, -0.08, 0.02);
        let m1 = sample_group_element(seed1, 0.25, beltrami_core::Branch::DeSitter).unwrap();
        let m2 = sample_group_element(seed2, 0.25, beltrami_core::Branch::DeSitter).unwrap();
        let inner = flt_apply(&m2, &x, &cfg);
        prop_assume!(inner.is_ok());
        let staged = flt_apply(&m1, &inner.unwrap(), &cfg);
        let direct = flt_apply(&m1.compose(&m2), &x, &cfg);
        prop_assume!(staged.is_ok() && direct.is_ok());
        let (s, d) = (staged.unwrap(), direct.unwrap());
        for mu in 0..4 {
            prop_assert!((s.0[mu] - d.0[mu]).abs() < 1e-8);
        }
    }

    #[test]
    fn signature_holds_across_admissible_parameters(
        t in -0.6f64..0.6,
        x1 in -0.5f64..0.5,
        x2 in -0.5f64..0.5,
        a in 0.2f64..3.0,
        b in 0.2f64..3.0,
    ) {
        let cfg = GeometryConfig { a, b, ..GeometryConfig::unit() };
        let p = Point4::new(t, x1, x2, 0.1);
        prop_assume!(chart_margin(&p, &cfg) > 1e-3);
        let m = beltrami_core::geometry::signature_minors(&p, &cfg).unwrap();
        prop_assert!(m.is_lorentzian());
    }
}
