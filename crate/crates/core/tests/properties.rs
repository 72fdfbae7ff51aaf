//! Property tests for the algebraic invariants of the solver.

use hellmann_core::model::{
    approx_potential, hellmann_potential, kappa_label, PotentialParams, QuantumNumbers,
    RelativisticSetup, SymmetryLimit,
};
use hellmann_core::nu::{energy_residual, solve_levels};
use hellmann_core::wavefunctions::jacobi;
use proptest::prelude::*;

fn nonzero_kappa() -> impl Strategy<Value = i32> {
    prop_oneof![(-8i32..=-1), (1i32..=8)]
}

proptest! {
    #[test]
    fn kappa_identities(kappa in nonzero_kappa()) {
        let spin = kappa_label(kappa, SymmetryLimit::Spin).unwrap();
        let l = spin.l as i64;
        prop_assert_eq!((kappa as i64) * (kappa as i64 + 1), l * (l + 1));
        let pspin = kappa_label(kappa, SymmetryLimit::PSpin).unwrap();
        let lt = pspin.l as i64;
        prop_assert_eq!((kappa as i64) * (kappa as i64 - 1), lt * (lt + 1));
    }

    #[test]
    fn coulomb_special_case(a in 0.1f64..5.0, r in 1e-3f64..100.0) {
        let p = PotentialParams::new(a, 0.0, 0.01, 0.0).unwrap();
        prop_assert_eq!(hellmann_potential(r, &p).unwrap(), -a / r);
    }

    #[test]
    fn approximation_converges_pointwise(
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
        r in 0.1f64..10.0,
    ) {
        // delta r <= 1e-3 here, so the relative error is below 1e-3.
        let p = PotentialParams::new(a, b, 1e-4, 0.0).unwrap();
        let exact = hellmann_potential(r, &p).unwrap();
        let approx = approx_potential(r, &p).unwrap();
        if exact.abs() > 1e-9 {
            prop_assert!(((approx - exact) / exact).abs() < 1e-3);
        }
    }

    #[test]
    fn branch_invariance(
        kappa in prop_oneof![(-8i32..=-2), (1i32..=8)],
        h in -0.9f64..0.9,
        frac in 0.05f64..0.95,
    ) {
        // eta -> 1 - eta is realized by (kappa, H) -> (-kappa - 1, -H);
        // the residual depends only on eta_eff.
        let setup = RelativisticSetup::new(5.0, 5.5, SymmetryLimit::Spin).unwrap();
        let (lo, hi) = setup.energy_window();
        let e = lo + frac * (hi - lo);
        let p = PotentialParams::new(1.0, -4.0, 0.01, h).unwrap();
        let p_flip = PotentialParams::new(1.0, -4.0, 0.01, -h).unwrap();
        let qn = QuantumNumbers::new(0, kappa).unwrap();
        let qn_flip = QuantumNumbers::new(0, -kappa - 1).unwrap();
        match (
            energy_residual(e, &p, &setup, &qn),
            energy_residual(e, &p_flip, &setup, &qn_flip),
        ) {
            (Ok(r1), Ok(r2)) => {
                let scale = r1.abs().max(r2.abs()).max(1.0);
                prop_assert!((r1 - r2).abs() < 1e-9 * scale, "{r1} vs {r2}");
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "definedness differs: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn spin_doublets_degenerate_without_tensor(kappa in -5i32..=-2, n in 0u32..=1) {
        let p = PotentialParams::new(1.0, -4.0, 0.01, 0.0).unwrap();
        let setup = RelativisticSetup::new(5.0, 5.5, SymmetryLimit::Spin).unwrap();
        let qn = QuantumNumbers::new(n, kappa).unwrap();
        let partner = QuantumNumbers::new(n, -kappa - 1).unwrap();
        let e1 = solve_levels(&p, &setup, &qn, None).unwrap();
        let e2 = solve_levels(&p, &setup, &partner, None).unwrap();
        prop_assert_eq!(e1.len(), e2.len());
        for (a, b) in e1.iter().zip(&e2) {
            prop_assert_eq!(a.energy, b.energy);
        }
    }

    #[test]
    fn jacobi_reflection_symmetry(
        n in 0u32..8,
        alpha in -0.5f64..4.0,
        beta in -0.5f64..4.0,
        x in -1.0f64..1.0,
    ) {
        // P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)
        let lhs = jacobi(n, alpha, beta, -x).unwrap();
        let rhs = (-1.0f64).powi(n as i32) * jacobi(n, beta, alpha, x).unwrap();
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        prop_assert!((lhs - rhs).abs() < 1e-9 * scale);
    }

    #[test]
    fn jacobi_endpoint_value(n in 0u32..10, alpha in -0.5f64..4.0, beta in -0.5f64..4.0) {
        // P_n^{(a,b)}(1) = binom(n + a, n)
        let mut expected = 1.0;
        for k in 1..=n {
            expected *= (alpha + k as f64) / k as f64;
        }
        let got = jacobi(n, alpha, beta, 1.0).unwrap();
        prop_assert!((got - expected).abs() < 1e-9 * expected.abs().max(1.0));
    }
}
