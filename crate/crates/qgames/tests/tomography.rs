//! Payoff/Stokes identities and reconstruction accuracy.

mod common;

use common::{qubit_fidelity, random_qubit_state, rng};
use qgames::qmath::{pure_qubit, BlochVector};
use qgames::tomography::{
    density_from_stokes, reconstruct, stokes_from_density, tomographic_payoff, Reconstruction,
    SampleMode, Setting, StokesVector,
};
use rand::Rng;

#[test]
fn payoffs_equal_stokes_parameters() {
    let mut r = rng(61);
    for _ in 0..1000 {
        let rho = random_qubit_state(&mut r);
        let s = stokes_from_density(&rho).unwrap();
        let expected = [s.s1, s.s2, s.s3];
        for (k, setting) in Setting::ALL.iter().enumerate() {
            let pay = tomographic_payoff(*setting, &rho).unwrap();
            assert!(
                (pay.a - expected[k]).abs() < 1e-12,
                "{setting:?}: {} vs {}",
                pay.a,
                expected[k]
            );
            // Zero-sum readout: Bob receives the negation.
            assert!((pay.a + pay.b).abs() < 1e-15);
        }
    }
}

#[test]
fn stokes_density_round_trip() {
    let mut r = rng(62);
    for _ in 0..200 {
        let rho = random_qubit_state(&mut r);
        let s = stokes_from_density(&rho).unwrap();
        let back = density_from_stokes(&s).unwrap();
        assert!(rho.operator().max_abs_diff(back.operator()) < 1e-12);
    }
}

#[test]
fn exact_reconstruction_is_perfect() {
    let mut r = rng(63);
    for _ in 0..200 {
        let rho = random_qubit_state(&mut r);
        let rec = reconstruct(&rho, SampleMode::Exact).unwrap();
        assert_eq!(rec.errors, [0.0; 3]);
        let f = qubit_fidelity(&rho, &rec.density);
        assert!(f > 1.0 - 1e-12, "fidelity {f}");
    }
    // Pure states too (boundary of the Bloch ball).
    for _ in 0..50 {
        let rho = pure_qubit(
            r.gen_range(0.0..=std::f64::consts::PI),
            r.gen_range(-std::f64::consts::PI..=std::f64::consts::PI),
        )
        .unwrap();
        let rec = reconstruct(&rho, SampleMode::Exact).unwrap();
        assert!(qubit_fidelity(&rho, &rec.density) > 1.0 - 1e-12);
    }
}

#[test]
fn sampled_reconstruction_is_deterministic_and_bounded() {
    let rho = BlochVector::new(0.3, -0.5, 0.4).unwrap().to_density();
    let mode = SampleMode::Sampled {
        shots: 4096,
        seed: 9,
    };
    let a = reconstruct(&rho, mode).unwrap();
    let b = reconstruct(&rho, mode).unwrap();
    assert_eq!(a.stokes.s1, b.stokes.s1);
    assert_eq!(a.stokes.s2, b.stokes.s2);
    assert_eq!(a.stokes.s3, b.stokes.s3);
    for e in a.errors {
        assert!((e - 1.0 / 64.0).abs() < 1e-15);
    }
    // The estimate stays inside the Bloch ball.
    assert!(a.stokes.norm() <= 1.0 + 1e-12);
}

#[test]
fn sampled_reconstruction_reaches_high_fidelity() {
    let mut r = rng(64);
    let mut good = 0;
    let trials = 100;
    for seed in 0..trials {
        let rho = random_qubit_state(&mut r);
        let rec: Reconstruction = reconstruct(
            &rho,
            SampleMode::Sampled {
                shots: 10_000,
                seed,
            },
        )
        .unwrap();
        if qubit_fidelity(&rho, &rec.density) >= 0.999 {
            good += 1;
        }
    }
    assert!(good >= 95, "only {good}/{trials} trials reached 0.999");
}

#[test]
fn reconstruction_rejects_zero_shots() {
    let rho = BlochVector::new(0.0, 0.0, 0.0).unwrap().to_density();
    assert!(reconstruct(&rho, SampleMode::Sampled { shots: 0, seed: 1 }).is_err());
}

#[test]
fn stokes_vector_validates_the_ball() {
    assert!(StokesVector::new(1.0, 1.0, 1.0).is_err());
    assert!(StokesVector::new(0.6, 0.0, 0.8).is_ok());
}
