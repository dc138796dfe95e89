use lorentz_harmonics::basis::{
    apply_cylindrical, chi2d, decompose, expectation, reconstruct, CoefficientTable, Mode2D,
};
use lorentz_harmonics::covariant::{cylindrical_expectation, decompose_state, CovariantState};
use lorentz_harmonics::kinematics::{rotate, PlanePoint};
use lorentz_harmonics::quadrature::build_rule;
use lorentz_harmonics::special::chi;
use lorentz_harmonics::SqueezeParameter;
use proptest::prelude::*;

fn rotated_doublet(theta: f64) -> impl Fn(f64, f64) -> f64 {
    move |x, y| {
        let q = rotate(PlanePoint::new(x, y), -theta);
        chi(1, q.x).unwrap() * chi(0, q.y).unwrap()
    }
}

#[test]
fn basis_elements_are_orthonormal() {
    let rule = build_rule(24).unwrap();
    for a in 0..=6 {
        for b in 0..=6 {
            let t = decompose(|x, y| chi2d(Mode2D::new(a, b), x, y).unwrap(), 6, &rule).unwrap();
            for (&m, &amp) in &t.entries {
                let expected = if m == Mode2D::new(a, b) { 1.0 } else { 0.0 };
                assert!((amp - expected).abs() < 1e-10, "({a},{b}) vs {m:?}");
            }
        }
    }
}

#[test]
fn parseval_for_localized_functions() {
    let rule = build_rule(64).unwrap();
    let fs: Vec<Box<dyn Fn(f64, f64) -> f64>> = vec![
        Box::new(|x: f64, y: f64| (x - 0.5 * y) * (-(x * x + y * y) / 2.0).exp()),
        Box::new(|x: f64, y: f64| (-(x * x + 1.5 * y * y) / 2.0 + 0.3 * x).exp()),
        Box::new(rotated_doublet(0.4)),
    ];
    for f in &fs {
        let t = decompose(f, 30, &rule).unwrap();
        assert!(t.discarded_weight <= 1e-9);
        let norm = t.norm_squared() + t.discarded_weight;
        let direct = lorentz_harmonics::quadrature::integrate_2d(|x, y| f(x, y).powi(2), &rule).unwrap();
        assert!((t.norm_squared() - direct).abs() < 1e-8);
        assert!((norm - direct).abs() < 1e-12);
    }
}

#[test]
fn cylindrical_operator_commutes_with_rotation() {
    let rule = build_rule(32).unwrap();
    let base = decompose(rotated_doublet(0.0), 4, &rule).unwrap();
    let base_expectation = expectation(&base, Mode2D::cylindrical_eigenvalue);
    for i in 0..16 {
        let theta = 0.4 * i as f64;
        let t = decompose(rotated_doublet(theta), 4, &rule).unwrap();
        let applied = apply_cylindrical(&t);
        let scaled = t.map_amplitudes(|_, a| 2.0 * a);
        assert!(applied.max_abs_diff(&scaled) < 1e-8, "theta={theta}");
        assert!((t.get(Mode2D::new(1, 0)) - theta.cos()).abs() < 1e-9);
        assert!((t.get(Mode2D::new(0, 1)) - theta.sin()).abs() < 1e-9);
        assert!((expectation(&t, Mode2D::cylindrical_eigenvalue) - base_expectation).abs() < 1e-10);
    }
}

#[test]
fn boosted_state_round_trip() {
    let rule = build_rule(96).unwrap();
    let st = CovariantState::new(0, SqueezeParameter::new(1.0).unwrap()).unwrap();
    let t = decompose_state(&st, 60, &rule).unwrap();
    let mut worst = 0.0f64;
    for i in 0..=12 {
        for j in 0..=12 {
            let (z, tt) = (-3.0 + 0.5 * i as f64, -3.0 + 0.5 * j as f64);
            let direct = st.evaluate_direct(lorentz_harmonics::kinematics::SpaceTimePoint::new(z, tt));
            worst = worst.max((reconstruct(&t, z, tt) - direct).abs());
        }
    }
    assert!(worst < 1e-6, "{worst}");
}

#[test]
fn cylindrical_expectation_of_boosted_states() {
    // (n + 1) cosh 2η from the table and from the probability series
    let rule = build_rule(96).unwrap();
    for (n, e) in [(0usize, 0.5f64), (1, 0.8), (2, 0.3)] {
        let s = SqueezeParameter::new(e).unwrap();
        let closed = (n + 1) as f64 * (2.0 * e).cosh();
        let series = cylindrical_expectation(n, s, 1e-15).unwrap();
        assert!((series - closed).abs() < 1e-10);
        let t = decompose_state(&CovariantState::new(n, s).unwrap(), 60, &rule).unwrap();
        assert!((expectation(&t, Mode2D::cylindrical_eigenvalue) - closed).abs() < 1e-8);
    }
}

#[test]
fn table_json_round_trip() {
    let t = CoefficientTable {
        entries: [(Mode2D::new(2, 3), 0.5), (Mode2D::new(0, 0), -0.25)].into_iter().collect(),
        k_max: 3,
        discarded_weight: 1e-12,
    };
    let text = serde_json::to_string(&t).unwrap();
    assert_eq!(text, r#"{"kmax":3,"entries":[[0,0,-0.25],[2,3,0.5]],"discarded":1e-12}"#);
    assert_eq!(serde_json::from_str::<CoefficientTable>(&text).unwrap(), t);
}

proptest! {
    #[test]
    fn operators_are_linear(a in -2.0f64..2.0, b in -2.0f64..2.0, na in 0usize..8, nb in 0usize..8) {
        let m = Mode2D::new(na, nb);
        let t = CoefficientTable {
            entries: [(m, a), (Mode2D::new(nb + 1, na), b)].into_iter().collect(),
            k_max: 9,
            discarded_weight: 0.0,
        };
        let doubled = t.map_amplitudes(|_, x| 2.0 * x);
        let lhs = apply_cylindrical(&doubled);
        let rhs = apply_cylindrical(&t).map_amplitudes(|_, x| 2.0 * x);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-14);
        prop_assert_eq!(apply_cylindrical(&t).get(m), a * (na + nb + 1) as f64);
    }

    #[test]
    fn reconstruct_single_mode(na in 0usize..20, nb in 0usize..20, x in -4.0f64..4.0, y in -4.0f64..4.0) {
        let m = Mode2D::new(na, nb);
        let t = CoefficientTable { entries: [(m, 1.0)].into_iter().collect(), k_max: na.max(nb), discarded_weight: 0.0 };
        prop_assert!((reconstruct(&t, x, y) - chi2d(m, x, y).unwrap()).abs() < 1e-14);
    }
}
