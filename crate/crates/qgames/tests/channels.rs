//! Kraus completeness, Bloch/Kraus agreement, and the dephasing-noise
//! closed form against the full pipeline.

mod common;

use common::{random_matrix, random_qubit_state, random_strategy, rng};
use qgames::channels::{
    classical_alice_payoffs, noisy_payoff_closed_form, noisy_payoff_numeric,
    symmetric_noise_payoffs, CorrelatedDephasing, Dephasing, NoiseConfig, SingleQubitChannel,
};
use qgames::games::CanonicalGame;
use qgames::qmath::BlochVector;
use qgames::scheme::{payoff_numeric, SchemeConfig, StrategyParams};
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};

#[test]
fn all_kraus_sets_are_complete() {
    // KrausSet::new rejects incomplete sets, so constructing each channel
    // over a parameter grid is already the completeness check.
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        Dephasing::new(p).unwrap().kraus_set();
        SingleQubitChannel::Dephasing { p }.kraus_set().unwrap();
        SingleQubitChannel::Depolarizing { p }.kraus_set().unwrap();
        SingleQubitChannel::AmplitudeDamping { p }
            .kraus_set()
            .unwrap();
        for m in 0..=10 {
            let mu = m as f64 / 10.0;
            CorrelatedDephasing::new(p, mu).unwrap().kraus_set().unwrap();
        }
    }
}

#[test]
fn out_of_range_parameters_are_rejected() {
    assert!(Dephasing::new(1.2).is_err());
    assert!(SingleQubitChannel::Depolarizing { p: -0.1 }
        .kraus_set()
        .is_err());
    assert!(CorrelatedDephasing::new(0.5, 1.5).is_err());
}

#[test]
fn bloch_transforms_agree_with_kraus_path() {
    let mut r = rng(41);
    let channels = |p: f64| {
        [
            SingleQubitChannel::Dephasing { p },
            SingleQubitChannel::Depolarizing { p },
            SingleQubitChannel::AmplitudeDamping { p },
        ]
    };
    for _ in 0..1000 {
        let rho = random_qubit_state(&mut r);
        let before = BlochVector::from_density(&rho).unwrap();
        let p = r.gen_range(0.0..=1.0);
        for ch in channels(p) {
            let via_bloch = ch.bloch_transform(&before).unwrap();
            let via_kraus = ch.kraus_set().unwrap().apply(&rho).unwrap();
            let after = BlochVector::from_density(&via_kraus).unwrap();
            assert!((via_bloch.x - after.x).abs() < 1e-9, "{ch:?}");
            assert!((via_bloch.y - after.y).abs() < 1e-9, "{ch:?}");
            assert!((via_bloch.z - after.z).abs() < 1e-9, "{ch:?}");
        }
    }
}

#[test]
fn depolarizing_shrink_factor_is_exact() {
    let ch = SingleQubitChannel::Depolarizing { p: 0.3 };
    let r = BlochVector::new(1.0, 0.0, 0.0).unwrap();
    let out = ch.bloch_transform(&r).unwrap();
    assert_eq!(out.x, 0.6);
    assert_eq!(out.y, 0.0);
    assert_eq!(out.z, 0.0);
}

#[test]
fn single_qubit_dephasing_forms_agree() {
    let mut r = rng(42);
    for _ in 0..200 {
        let p = r.gen_range(0.0..=1.0);
        let rho = random_qubit_state(&mut r);
        let v = BlochVector::from_density(&rho).unwrap();
        let a = Dephasing::new(p).unwrap().bloch_transform(&v).unwrap();
        let b = SingleQubitChannel::Dephasing { p }
            .bloch_transform(&v)
            .unwrap();
        assert!((a.x - b.x).abs() < 1e-15 && (a.y - b.y).abs() < 1e-15 && (a.z - b.z).abs() < 1e-15);
    }
}

#[test]
fn correlated_dephasing_coherence_factor() {
    // μ_p = (1−μ)(1−p)² + μ.
    let ch = CorrelatedDephasing::new(0.4, 0.25).unwrap();
    assert!((ch.mu_p() - (0.75 * 0.36 + 0.25)).abs() < 1e-15);
    // Fully correlated kicks preserve the two-qubit coherences entirely.
    assert_eq!(CorrelatedDephasing::new(0.9, 1.0).unwrap().mu_p(), 1.0);
    // No noise is transparent regardless of memory.
    assert_eq!(CorrelatedDephasing::new(0.0, 0.3).unwrap().mu_p(), 1.0);
}

#[test]
fn noisy_closed_form_matches_kraus_pipeline() {
    let mut r = rng(43);
    let mut worst: f64 = 0.0;
    for _ in 0..300 {
        let gamma = r.gen_range(0.0..=FRAC_PI_2);
        let delta = r.gen_range(0.0..=FRAC_PI_2);
        let cfg = SchemeConfig::new(gamma, delta).unwrap();
        let (sa, sb) = (random_strategy(&mut r), random_strategy(&mut r));
        let pm = random_matrix(&mut r);
        let leg = |r: &mut rand_chacha::ChaCha8Rng| {
            if r.gen_bool(0.25) {
                None
            } else {
                Some(
                    CorrelatedDephasing::new(r.gen_range(0.0..=1.0), r.gen_range(0.0..=1.0))
                        .unwrap(),
                )
            }
        };
        let noise = NoiseConfig {
            leg1: leg(&mut r),
            leg2: leg(&mut r),
        };
        let closed = noisy_payoff_closed_form(&cfg, &sa, &sb, &pm, &noise);
        let oracle = noisy_payoff_numeric(&cfg, &sa, &sb, &pm, &noise).unwrap();
        worst = worst
            .max((closed.a - oracle.a).abs())
            .max((closed.b - oracle.b).abs());
    }
    assert!(worst < 1e-9, "worst residual {worst:e}");
}

/// Full memory (μ = 1) makes the dephasing invisible at any error weight:
/// the payoffs coincide with the clean game.
#[test]
fn full_memory_removes_the_noise() {
    let mut r = rng(44);
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    for _ in 0..100 {
        let p = r.gen_range(0.0..=1.0);
        let (sa, sb) = (random_strategy(&mut r), random_strategy(&mut r));
        let noisy = symmetric_noise_payoffs(p, 1.0, &sa, &sb, &pm).unwrap();
        let clean = payoff_numeric(&SchemeConfig::maximal(), &sa, &sb, &pm).unwrap();
        assert!((noisy.a - clean.a).abs() < 1e-9);
        assert!((noisy.b - clean.b).abs() < 1e-9);
    }
}

/// With a classically restricted Alice at θ = π/2 against Bob's full
/// three-parameter set, Bob's optimum over phases sits at φ_B − ψ_B = −π/2
/// with value 9/4 + (μ_p/4) sin γ for the prisoners' dilemma.
#[test]
fn classical_alice_pd_optimum() {
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    for &(p, mu) in &[(0.0, 0.0), (0.3, 0.2), (0.7, 0.9), (1.0, 0.0)] {
        let leg = CorrelatedDephasing::new(p, mu).unwrap();
        for &gamma in &[0.0, 0.7, FRAC_PI_2] {
            let expected = 9.0 / 4.0 + leg.mu_p() / 4.0 * gamma.sin();
            let sb = StrategyParams::new(FRAC_PI_2, 0.0, FRAC_PI_2).unwrap();
            let at_opt = classical_alice_payoffs(gamma, FRAC_PI_2, &sb, &pm, Some(leg)).unwrap();
            assert!(
                (at_opt.b - expected).abs() < 1e-9,
                "γ={gamma} p={p} μ={mu}: {} vs {expected}",
                at_opt.b
            );
            // Phase scan: no (φ_B, ψ_B) does better.
            for i in 0..=24 {
                for j in 0..=24 {
                    let phi = -PI + 2.0 * PI * i as f64 / 24.0;
                    let psi = -PI + 2.0 * PI * j as f64 / 24.0;
                    let sb = StrategyParams::new(FRAC_PI_2, phi, psi).unwrap();
                    let pay = classical_alice_payoffs(gamma, FRAC_PI_2, &sb, &pm, Some(leg))
                        .unwrap();
                    assert!(pay.b <= expected + 1e-9);
                }
            }
        }
    }
}

/// The Battle-of-the-Sexes (2, 1, 0) analogue of the classical-Alice
/// optimum: 3/4 + (3 μ_p / 4) sin γ, attained at φ_B − ψ_B = +π/2 (the
/// interference coefficient has the opposite sign to the prisoners'
/// dilemma, mirroring the optimal phase).
#[test]
fn classical_alice_bos_optimum() {
    let pm = CanonicalGame::bos_default().matrix().unwrap();
    let leg = CorrelatedDephasing::new(0.5, 0.4).unwrap();
    let gamma = 1.1_f64;
    let expected = 3.0 / 4.0 + 3.0 * leg.mu_p() / 4.0 * gamma.sin();
    let sb = StrategyParams::new(FRAC_PI_2, FRAC_PI_2, 0.0).unwrap();
    let at_opt = classical_alice_payoffs(gamma, FRAC_PI_2, &sb, &pm, Some(leg)).unwrap();
    assert!((at_opt.b - expected).abs() < 1e-9);
    // Phase scan: no (φ_B, ψ_B) does better.
    for i in 0..=24 {
        for j in 0..=24 {
            let phi = -PI + 2.0 * PI * i as f64 / 24.0;
            let psi = -PI + 2.0 * PI * j as f64 / 24.0;
            let sb = StrategyParams::new(FRAC_PI_2, phi, psi).unwrap();
            let pay = classical_alice_payoffs(gamma, FRAC_PI_2, &sb, &pm, Some(leg)).unwrap();
            assert!(pay.b <= expected + 1e-9);
        }
    }
}

#[test]
fn amplitude_damping_fixes_the_ground_state() {
    let ch = SingleQubitChannel::AmplitudeDamping { p: 0.8 };
    let ground = BlochVector::new(0.0, 0.0, 1.0).unwrap();
    let out = ch.bloch_transform(&ground).unwrap();
    assert!((out.z - 1.0).abs() < 1e-15 && out.x == 0.0 && out.y == 0.0);
    // Full decay maps everything to |0⟩.
    let full = SingleQubitChannel::AmplitudeDamping { p: 1.0 };
    let excited = BlochVector::new(0.0, 0.0, -1.0).unwrap();
    let out = full.bloch_transform(&excited).unwrap();
    assert!((out.z - 1.0).abs() < 1e-15);
}
