//! Nash-search fixtures, the Marinatto–Weber Battle-of-the-Sexes analysis,
//! the entanglement-placement payoff hierarchy, and the miracle-move curve.

mod common;

use common::rng;
use qgames::games::{
    bos_effective_matrix, bos_general_payoffs, bos_nash_conditions, category_payoff_single,
    measurement_category_payoffs, miracle_payoffs, miracle_strategy, nash_search_grid, pd_payoffs,
    q_strategy, CanonicalGame, Corner, MeasurementCategory, RockScissorsPaper, SearchGrid,
    StateWeights,
};
use qgames::scheme::{payoff_numeric, SchemeConfig, StrategyParams};
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};

#[test]
fn classical_pd_has_unique_defect_defect_equilibrium() {
    let cfg = SchemeConfig::classical();
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    let found = nash_search_grid(&cfg, &pm, &SearchGrid::classical(25), 1e-9).unwrap();
    assert_eq!(found.len(), 1, "expected a unique equilibrium: {found:?}");
    let ne = &found[0];
    assert!((ne.sa.theta() - PI).abs() < 1e-12);
    assert!((ne.sb.theta() - PI).abs() < 1e-12);
    assert_eq!(ne.payoffs.a, 1.0);
    assert_eq!(ne.payoffs.b, 1.0);
}

#[test]
fn maximally_entangled_pd_equilibrium_is_q_q() {
    let cfg = SchemeConfig::maximal();
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    let found = nash_search_grid(&cfg, &pm, &SearchGrid::two_param(25), 1e-9).unwrap();
    let q = q_strategy();
    let hit = found.iter().find(|ne| {
        (ne.sa.theta() - q.theta()).abs() < 1e-12
            && (ne.sa.phi() - q.phi()).abs() < 1e-12
            && (ne.sb.theta() - q.theta()).abs() < 1e-12
            && (ne.sb.phi() - q.phi()).abs() < 1e-12
    });
    let hit = hit.expect("Q ⊗ Q must be a grid equilibrium");
    assert!((hit.payoffs.a - 3.0).abs() < 1e-12);
    assert!((hit.payoffs.b - 3.0).abs() < 1e-12);
    // Every equilibrium of this game pays the cooperative (3, 3).
    for ne in &found {
        assert!((ne.payoffs.a - 3.0).abs() < 1e-9, "{ne:?}");
        assert!((ne.payoffs.b - 3.0).abs() < 1e-9, "{ne:?}");
    }
}

#[test]
fn miracle_curve_matches_density_pipeline() {
    let cfg = SchemeConfig::maximal();
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    let ma = miracle_strategy();
    for k in 0..100 {
        let theta = (PI * k as f64 / 99.0).min(PI);
        let closed = miracle_payoffs(theta).unwrap();
        let oracle =
            payoff_numeric(&cfg, &ma, &StrategyParams::classical(theta).unwrap(), &pm).unwrap();
        assert!(
            (closed.a - oracle.a).abs() < 1e-9,
            "θ={theta}: {} vs {}",
            closed.a,
            oracle.a
        );
        assert!((closed.b - oracle.b).abs() < 1e-9);
    }
    // Against the defector the miracle move pays (3, 1/2).
    let at_pi = miracle_payoffs(PI).unwrap();
    assert!((at_pi.a - 3.0).abs() < 1e-12);
    assert!((at_pi.b - 0.5).abs() < 1e-12);
}

/// Mutual defection payoffs under the four entanglement placements: for
/// γ = δ with sin²(γ/2) ≤ 1/3 the hierarchy is
/// 1 < 1 + 2 sin²(δ/2) = 1 + 2 sin²(γ/2) < 3 (the last value is the
/// cooperative equilibrium of the fully entangled game).
#[test]
fn entanglement_placement_payoff_hierarchy() {
    let defect = StrategyParams::classical(PI).unwrap();
    for &angle in &[0.5, PI / 3.0, 1.2] {
        let pp =
            measurement_category_payoffs(MeasurementCategory::ProductProduct, &defect, &defect)
                .unwrap();
        let pe = measurement_category_payoffs(
            MeasurementCategory::ProductEntangled { delta: angle },
            &defect,
            &defect,
        )
        .unwrap();
        let ep = measurement_category_payoffs(
            MeasurementCategory::EntangledProduct { gamma: angle },
            &defect,
            &defect,
        )
        .unwrap();
        let q = q_strategy();
        let ee =
            measurement_category_payoffs(MeasurementCategory::EntangledEntangled, &q, &q).unwrap();

        let expected = 1.0 + 2.0 * (angle / 2.0).sin().powi(2);
        assert!((pp.a - 1.0).abs() < 1e-12);
        assert!((pe.a - expected).abs() < 1e-12);
        assert!((ep.a - expected).abs() < 1e-12);
        assert!((pe.a - ep.a).abs() < 1e-12);
        assert!((ee.a - 3.0).abs() < 1e-12);
        assert!(pp.a < pe.a && ep.a < ee.a);
    }
}

#[test]
fn category_payoff_single_agrees_with_pair_form() {
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    let sa = StrategyParams::two_param(0.7, 0.3).unwrap();
    let sb = StrategyParams::two_param(1.9, -0.4).unwrap();
    let cat = MeasurementCategory::ProductEntangled { delta: 0.8 };
    let pair = measurement_category_payoffs(cat, &sa, &sb).unwrap();
    let single = category_payoff_single(cat, &sa, &sb, &pm.a).unwrap();
    assert!((pair.a - single).abs() < 1e-12);
}

#[test]
fn paradoxical_bos_effective_matrix() {
    let eff = bos_effective_matrix(2.0, 1.0, 0.0).unwrap();
    assert!((eff.alpha - 15.0 / 16.0).abs() < 1e-15);
    assert!((eff.beta - 11.0 / 16.0).abs() < 1e-15);
    assert!((eff.sigma - 7.0 / 16.0).abs() < 1e-15);
    assert!(eff.alpha > eff.beta && eff.beta > eff.sigma);
}

#[test]
fn paradoxical_bos_corners_passing_the_standard_conditions() {
    let w = StateWeights::paradoxical();
    let passing: Vec<Corner> = [
        Corner::BothFlip,
        Corner::BothStay,
        Corner::FlipStay,
        Corner::StayFlip,
    ]
    .into_iter()
    .filter(|&corner| {
        bos_nash_conditions(&w, corner, 2.0, 1.0, 0.0)
            .unwrap()
            .standard
    })
    .collect();
    assert_eq!(passing, vec![Corner::BothFlip, Corner::BothStay]);
}

/// The standard corner conditions mix strict and weak inequalities; on the
/// paradoxical state the weak reading must accept at least whatever the
/// standard one accepts.
#[test]
fn corner_condition_readings_are_ordered() {
    let w = StateWeights::paradoxical();
    for corner in [
        Corner::BothFlip,
        Corner::BothStay,
        Corner::FlipStay,
        Corner::StayFlip,
    ] {
        let check = bos_nash_conditions(&w, corner, 2.0, 1.0, 0.0).unwrap();
        assert!(!check.strict || check.weak);
        assert!(!check.standard || check.weak);
    }
}

/// The weak corner conditions are exactly the Nash property of the
/// bilinear tactic game: no unilateral move to the opposite tactic helps.
#[test]
fn weak_corner_conditions_match_direct_payoff_comparisons() {
    let mut r = rng(31);
    let (alpha, beta, sigma) = (2.0, 1.0, 0.0);
    for _ in 0..300 {
        let mut w = [0.0; 4];
        let mut total = 0.0;
        for v in &mut w {
            *v = r.gen_range(0.0..1.0);
            total += *v;
        }
        let w = StateWeights::new(w[0] / total, w[1] / total, w[2] / total, w[3] / total).unwrap();
        for (corner, p, q) in [
            (Corner::BothFlip, 0.0, 0.0),
            (Corner::BothStay, 1.0, 1.0),
            (Corner::FlipStay, 0.0, 1.0),
            (Corner::StayFlip, 1.0, 0.0),
        ] {
            let here = bos_general_payoffs(&w, p, q, alpha, beta, sigma).unwrap();
            let a_dev = bos_general_payoffs(&w, 1.0 - p, q, alpha, beta, sigma).unwrap();
            let b_dev = bos_general_payoffs(&w, p, 1.0 - q, alpha, beta, sigma).unwrap();
            let nash = here.a >= a_dev.a - 1e-12 && here.b >= b_dev.b - 1e-12;
            let check = bos_nash_conditions(&w, corner, alpha, beta, sigma).unwrap();
            assert_eq!(check.weak, nash, "corner {corner:?}, weights {w:?}");
        }
    }
}

/// Brute-force tactic mixture for a general Marinatto–Weber state: Alice's
/// flip swaps outcomes 00↔10 and 01↔11, Bob's swaps 00↔01 and 10↔11, and
/// the payoff rows are (α, σ, σ, β) / (β, σ, σ, α).
#[test]
fn bos_general_payoffs_match_tactic_mixture() {
    let mut r = rng(32);
    let (alpha, beta, sigma) = (2.0, 1.0, 0.0);
    for _ in 0..300 {
        let mut raw = [0.0; 4];
        let mut total = 0.0;
        for v in &mut raw {
            *v = r.gen_range(0.0..1.0);
            total += *v;
        }
        let w = StateWeights::new(
            raw[0] / total,
            raw[1] / total,
            raw[2] / total,
            raw[3] / total,
        )
        .unwrap();
        let (p, q) = (r.gen_range(0.0..=1.0), r.gen_range(0.0..=1.0));
        let closed = bos_general_payoffs(&w, p, q, alpha, beta, sigma).unwrap();

        let corner = |stay_a: bool, stay_b: bool| -> [f64; 4] {
            let mut v = [w.a, w.b, w.c, w.d];
            if !stay_a {
                v.swap(0, 2);
                v.swap(1, 3);
            }
            if !stay_b {
                v.swap(0, 1);
                v.swap(2, 3);
            }
            v
        };
        let rows_a = [alpha, sigma, sigma, beta];
        let rows_b = [beta, sigma, sigma, alpha];
        let (mut ea, mut eb) = (0.0, 0.0);
        for (stay_a, pa) in [(true, p), (false, 1.0 - p)] {
            for (stay_b, pb) in [(true, q), (false, 1.0 - q)] {
                let v = corner(stay_a, stay_b);
                for k in 0..4 {
                    ea += pa * pb * v[k] * rows_a[k];
                    eb += pa * pb * v[k] * rows_b[k];
                }
            }
        }
        assert!((closed.a - ea).abs() < 1e-12);
        assert!((closed.b - eb).abs() < 1e-12);
    }
}

#[test]
fn rock_scissors_paper_fixture() {
    let rsp = RockScissorsPaper::standard();
    let uniform = [1.0 / 3.0; 3];
    assert!(rsp.mixed_expectation(&uniform, &uniform).unwrap().abs() < 1e-15);
    // Rock beats scissors.
    assert_eq!(
        rsp.mixed_expectation(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0])
            .unwrap(),
        1.0
    );
    assert!(rsp.mixed_expectation(&[0.5, 0.6, 0.0], &uniform).is_err());
}

#[test]
fn canonical_game_invariants_are_enforced() {
    assert!(CanonicalGame::GeneralPd {
        r: 3.0,
        s: 0.0,
        t: 5.0,
        u: 1.0
    }
    .matrix()
    .is_ok());
    assert!(CanonicalGame::GeneralPd {
        r: 3.0,
        s: 2.0,
        t: 5.0,
        u: 1.0
    }
    .matrix()
    .is_err());
    assert!(CanonicalGame::BattleOfSexes {
        alpha: 1.0,
        beta: 2.0,
        sigma: 0.0
    }
    .matrix()
    .is_err());
    assert!(bos_effective_matrix(1.0, 2.0, 0.0).is_err());
}

#[test]
fn pd_payoffs_convenience_matches_oracle() {
    let cfg = SchemeConfig::new(0.8, 1.0).unwrap();
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    let sa = StrategyParams::new(0.5, 0.2, -0.7).unwrap();
    let sb = StrategyParams::new(2.0, -0.9, 0.4).unwrap();
    let quick = pd_payoffs(&cfg, &sa, &sb).unwrap();
    let oracle = payoff_numeric(&cfg, &sa, &sb, &pm).unwrap();
    assert!((quick.a - oracle.a).abs() < 1e-9);
    assert!((quick.b - oracle.b).abs() < 1e-9);
}

#[test]
fn q_strategy_is_best_reply_proof_against_defection_grid() {
    // In the maximally entangled prisoners' dilemma the pair (Q, Q) pays
    // (3, 3) and no classical deviation beats it.
    let cfg = SchemeConfig::maximal();
    let pm = CanonicalGame::PrisonersDilemma.matrix().unwrap();
    let q = q_strategy();
    let base = payoff_numeric(&cfg, &q, &q, &pm).unwrap();
    assert!((base.a - 3.0).abs() < 1e-12);
    for k in 0..=32 {
        let theta = PI * k as f64 / 32.0;
        let dev = payoff_numeric(&cfg, &StrategyParams::classical(theta).unwrap(), &q, &pm)
            .unwrap();
        assert!(dev.a <= base.a + 1e-12);
    }
    // The Eisert two-parameter grid cannot beat Q either.
    for i in 0..=16 {
        for j in 0..=16 {
            let theta = PI * i as f64 / 16.0;
            let phi = FRAC_PI_2 * j as f64 / 16.0;
            let dev =
                payoff_numeric(&cfg, &StrategyParams::two_param(theta, phi).unwrap(), &q, &pm)
                    .unwrap();
            assert!(dev.a <= base.a + 1e-12);
        }
    }
}
