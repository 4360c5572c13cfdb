use hgf::ineq::{self, DistortionBound, ModelMap};
use hgf::metrics::{self, DiskPoint, Domain, HalfPlanePoint, MobiusH};
use hgf::specfun::{self, SpecFunConfig, UnitPair, PI_SQ_OVER_4};
use proptest::prelude::*;

fn half_plane() -> impl Strategy<Value = HalfPlanePoint> {
    (-10.0f64..10.0, 1e-3f64..10.0).prop_map(|(re, im)| HalfPlanePoint::new(re, im).unwrap())
}

fn disk() -> impl Strategy<Value = DiskPoint> {
    (0.0f64..0.999, 0.0f64..std::f64::consts::TAU)
        .prop_map(|(r, t)| DiskPoint::new(r * t.cos(), r * t.sin()).unwrap())
}

fn mobius() -> impl Strategy<Value = MobiusH> {
    [-3.0f64..3.0, -3.0f64..3.0, -3.0f64..3.0, -3.0f64..3.0]
        .prop_filter("det > 0.25", |m| m[0] * m[3] - m[1] * m[2] > 0.25)
        .prop_map(|m| {
            let s = (m[0] * m[3] - m[1] * m[2]).sqrt();
            MobiusH::new(m[0] / s, m[1] / s, m[2] / s, m[3] / s).unwrap()
        })
}

fn unit() -> impl Strategy<Value = f64> {
    // log-uniform on (1e-12, 1) plus complements near 1
    prop_oneof![
        (-12.0f64..0.0).prop_map(|e| 10f64.powf(e) * 0.999_999),
        (-12.0f64..-1.0).prop_map(|e| 1.0 - 10f64.powf(e)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn half_plane_triangle(c in 1.0f64..10.0, x in half_plane(), y in half_plane(), z in half_plane()) {
        let p = [x, y, z];
        let m = metrics::triangle_margin(|i, j| metrics::h_half_plane(c, p[i], p[j]));
        prop_assert!(m >= -1e-12, "margin {m}");
    }

    #[test]
    fn disk_triangle_for_c_at_least_two(c in 2.0f64..10.0, a in disk(), b in disk(), d in disk()) {
        let p = [a, b, d];
        let m = metrics::triangle_margin(|i, j| metrics::h_disk(c, p[i], p[j]));
        prop_assert!(m >= -1e-12, "margin {m}");
    }

    #[test]
    fn metrics_are_symmetric_and_vanish_on_diagonal(c in 0.1f64..10.0, x in half_plane(), y in half_plane(), a in disk(), b in disk()) {
        prop_assert_eq!(metrics::h_half_plane(c, x, y), metrics::h_half_plane(c, y, x));
        prop_assert_eq!(metrics::rho_disk(a, b), metrics::rho_disk(b, a));
        prop_assert_eq!(metrics::h_half_plane(c, x, x), 0.0);
        prop_assert_eq!(metrics::rho_disk(a, a), 0.0);
    }

    #[test]
    fn bridge_identity(c in 0.1f64..10.0, x in half_plane(), y in half_plane()) {
        let h = metrics::h_half_plane(c, x, y);
        let b = metrics::h_from_rho(c, metrics::rho_half_plane(x, y)).unwrap();
        prop_assert!((h - b).abs() <= 1e-12 * h.max(1.0), "{h} vs {b}");
        let via_domain = Domain::HalfPlane.h_metric(c, (x.re(), x.im()), (y.re(), y.im())).unwrap();
        prop_assert_eq!(via_domain, h);
    }

    #[test]
    fn mobius_invariance(m in mobius(), x in half_plane(), y in half_plane()) {
        let before = metrics::rho_half_plane(x, y);
        let after = metrics::rho_half_plane(m.apply(x).unwrap(), m.apply(y).unwrap());
        prop_assert!((after - before).abs() <= 1e-10 * before.max(1.0), "{before} -> {after}");
    }

    #[test]
    fn comparison_with_rho(c in 1.0f64..10.0, x in half_plane(), y in half_plane()) {
        let case = ineq::comp_rho_case(c, x, y, ineq::METRIC_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }

    #[test]
    fn mu_round_trip(r in unit()) {
        let back = specfun::mu_inv(specfun::mu(r).unwrap()).unwrap();
        prop_assert!((back - r).abs() <= 1e-10, "{r} -> {back}");
    }

    #[test]
    fn mu_is_decreasing(a in unit(), b in unit()) {
        prop_assume!(a < b);
        prop_assert!(specfun::mu(a).unwrap() >= specfun::mu(b).unwrap());
    }

    #[test]
    fn mu_reflection(r in unit()) {
        let p = UnitPair::new(r);
        let cfg = SpecFunConfig::DEFAULT;
        let prod = cfg.mu_pair(p).unwrap() * cfg.mu_pair(p.swap()).unwrap();
        prop_assert!((prod - PI_SQ_OVER_4).abs() <= 1e-9, "{prod}");
    }

    #[test]
    fn phi_pair_inverse(k in 1.0f64..8.0, r in unit()) {
        let cfg = SpecFunConfig::DEFAULT;
        let fwd = cfg.phi_k_pair(k, UnitPair::new(r)).unwrap();
        let back = cfg.phi_k_pair(1.0 / k, fwd).unwrap();
        prop_assert!((back.value - r).abs() <= 1e-8, "{r} -> {back:?}");
        prop_assert!(fwd.value >= r * (1.0 - 1e-12));
    }

    #[test]
    fn phi_is_in_unit_interval_and_monotone_in_k(k1 in 1.0f64..8.0, k2 in 1.0f64..8.0, r in 0.01f64..0.99) {
        let (lo, hi) = if k1 < k2 { (k1, k2) } else { (k2, k1) };
        let a = specfun::phi_k(lo, r).unwrap();
        let b = specfun::phi_k(hi, r).unwrap();
        prop_assert!(0.0 < a && a < 1.0 && b < 1.0);
        prop_assert!(a <= b + 1e-15);
    }

    #[test]
    fn eta_bound(k in 1.0f64..5.0, lt in -4.0f64..4.0) {
        let cfg = SpecFunConfig::DEFAULT;
        let case = ineq::eta_bound_case(&cfg, cfg.lambda_k(k).unwrap(), k, 10f64.powf(lt), ineq::THEOREM_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }

    #[test]
    fn fuji_holds(c in 1.0f64..10.0, k in 1.0f64..8.0, lt in -6.0f64..6.0) {
        let case = ineq::fuji_case(c, k, 10f64.powf(lt), ineq::THEOREM_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }

    #[test]
    fn mfprop_subadditive(c in 1.0f64..10.0, s in 0.0f64..20.0, t in 0.0f64..20.0) {
        let case = ineq::subadditivity_case(c, s, t, ineq::THEOREM_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }

    #[test]
    fn bernoulli_holds(c2 in 1.0f64..10.0, extra in 0.0f64..10.0, lt in -6.0f64..6.0) {
        let case = ineq::bernoulli_pair(c2 + extra, c2, 10f64.powf(lt), ineq::THEOREM_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }

    #[test]
    fn stretch_distortion(k in 1.0f64..4.0, c in 1.0f64..5.0, x in half_plane(), y in half_plane()) {
        let bound = DistortionBound::new(k).unwrap();
        let case = ineq::empirical_distortion_case(&bound, c, &ModelMap::Stretch(k), x, y, ineq::THEOREM_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }

    #[test]
    fn schwarz_chain_links(c in 1.0f64..10.0, k in 1.0f64..8.0, lr in -4.0f64..1.47) {
        let case = ineq::schwarz_chain_case(c, k, 10f64.powf(lr), ineq::THEOREM_TOL).unwrap();
        prop_assert!(case.pass, "{case:?}");
    }
}
