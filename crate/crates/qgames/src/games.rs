//! Canonical games, equilibrium search, and the named closed-form results.
//!
//! The module collects the 2×2 bimatrix fixtures used throughout the crate,
//! a deterministic ε-Nash grid search over the quantized strategy space,
//! the Marinatto–Weber Battle-of-the-Sexes analysis for a general initial
//! state (payoff bilinear form, corner Nash conditions, effective matrix of
//! the paradoxical state), the measurement-role payoff categories, and the
//! miracle-move payoff curve.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::scheme::{
    generalized_payoff, payoff_closed_form, PayoffMatrix, PayoffPair, SchemeConfig,
    StrategyParams,
};

/// The 2×2 bimatrix fixtures used by the CLI and tests.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CanonicalGame {
    /// Prisoners' dilemma with (r, s, t, u) = (3, 0, 5, 1).
    PrisonersDilemma,
    /// A general prisoners' dilemma; requires t > r > u > s.
    GeneralPd {
        /// Reward for mutual cooperation.
        r: f64,
        /// Sucker's payoff.
        s: f64,
        /// Temptation to defect.
        t: f64,
        /// Punishment for mutual defection.
        u: f64,
    },
    /// Chicken with (3, 3), (1, 4), (4, 1), (0, 0).
    Chicken,
    /// Battle of the Sexes with diagonal (α, β) and off-diagonal σ; α > β > σ.
    BattleOfSexes {
        /// Preferred-outcome payoff.
        alpha: f64,
        /// Compromise payoff.
        beta: f64,
        /// Miscoordination payoff.
        sigma: f64,
    },
    /// Matching pennies: zero-sum (±1).
    MatchingPennies,
}

impl CanonicalGame {
    /// Default Battle of the Sexes (α, β, σ) = (2, 1, 0).
    pub fn bos_default() -> Self {
        Self::BattleOfSexes {
            alpha: 2.0,
            beta: 1.0,
            sigma: 0.0,
        }
    }

    /// The bimatrix of the game.
    ///
    /// # Errors
    ///
    /// [`Error::Invariant`] when a parameterized game's defining ordering
    /// (t > r > u > s, resp. α > β > σ) does not hold.
    pub fn matrix(&self) -> Result<PayoffMatrix> {
        match *self {
            Self::PrisonersDilemma => PayoffMatrix::new([3.0, 0.0, 5.0, 1.0], [3.0, 5.0, 0.0, 1.0]),
            Self::GeneralPd { r, s, t, u } => {
                if !(t > r && r > u && u > s) {
                    return Err(Error::Invariant(format!(
                        "prisoners' dilemma needs t > r > u > s, got t={t}, r={r}, u={u}, s={s}"
                    )));
                }
                PayoffMatrix::new([r, s, t, u], [r, t, s, u])
            }
            Self::Chicken => PayoffMatrix::new([3.0, 1.0, 4.0, 0.0], [3.0, 4.0, 1.0, 0.0]),
            Self::BattleOfSexes { alpha, beta, sigma } => {
                check_bos(alpha, beta, sigma)?;
                PayoffMatrix::new(
                    [alpha, sigma, sigma, beta],
                    [beta, sigma, sigma, alpha],
                )
            }
            Self::MatchingPennies => {
                PayoffMatrix::new([1.0, -1.0, -1.0, 1.0], [-1.0, 1.0, 1.0, -1.0])
            }
        }
    }
}

fn check_bos(alpha: f64, beta: f64, sigma: f64) -> Result<()> {
    if !(alpha > beta && beta > sigma) {
        return Err(Error::Invariant(format!(
            "Battle of the Sexes needs α > β > σ, got α={alpha}, β={beta}, σ={sigma}"
        )));
    }
    Ok(())
}

/// Rock–scissors–paper kept as a plain 3×3 classical fixture (the
/// quantization scheme is strictly two-strategy). Row player payoffs;
/// the game is zero-sum, so the column player receives the negation.
#[derive(Clone, Copy, Debug)]
pub struct RockScissorsPaper {
    /// Row payoffs a[i][j] for row move i against column move j,
    /// moves ordered rock, scissors, paper.
    pub a: [[f64; 3]; 3],
}

impl RockScissorsPaper {
    /// The standard win/loss/draw matrix (+1 / −1 / 0).
    pub fn standard() -> Self {
        Self {
            a: [
                [0.0, 1.0, -1.0],
                [-1.0, 0.0, 1.0],
                [1.0, -1.0, 0.0],
            ],
        }
    }

    /// Classical mixed expectation (row payoff; column payoff is its
    /// negation).
    ///
    /// # Errors
    ///
    /// [`Error::Invariant`] unless both mixtures are distributions.
    pub fn mixed_expectation(&self, p: &[f64; 3], q: &[f64; 3]) -> Result<f64> {
        for dist in [p, q] {
            if dist.iter().any(|&x| !(0.0..=1.0 + 1e-12).contains(&x))
                || (dist.iter().sum::<f64>() - 1.0).abs() > 1e-9
            {
                return Err(Error::Invariant("mixture is not a distribution".into()));
            }
        }
        let mut total = 0.0;
        for (pi, row) in p.iter().zip(&self.a) {
            for (qj, entry) in q.iter().zip(row) {
                total += pi * qj * entry;
            }
        }
        Ok(total)
    }
}

/// Strategy grid for the ε-Nash search.
///
/// θ runs over `theta_points` values spanning [0, π]; φ and ψ over their
/// point counts spanning [0, π/2]. A count of 1 pins the parameter at 0
/// (the two-parameter search uses `psi_points = 1`, the classical search
/// additionally `phi_points = 1`).
#[derive(Clone, Copy, Debug)]
pub struct SearchGrid {
    /// Grid points for θ ∈ [0, π].
    pub theta_points: usize,
    /// Grid points for φ ∈ [0, π/2].
    pub phi_points: usize,
    /// Grid points for ψ ∈ [0, π/2].
    pub psi_points: usize,
}

impl SearchGrid {
    /// The default two-parameter grid: 25 points in θ and φ, ψ pinned at 0.
    pub fn two_param(points: usize) -> Self {
        Self {
            theta_points: points,
            phi_points: points,
            psi_points: 1,
        }
    }

    /// Classical grid: θ only.
    pub fn classical(points: usize) -> Self {
        Self {
            theta_points: points,
            phi_points: 1,
            psi_points: 1,
        }
    }

    fn strategies(&self) -> Vec<StrategyParams> {
        let axis = |count: usize, hi: f64| -> Vec<f64> {
            if count <= 1 {
                vec![0.0]
            } else {
                (0..count)
                    .map(|i| hi * i as f64 / (count - 1) as f64)
                    .collect()
            }
        };
        let mut out = Vec::new();
        for &theta in &axis(self.theta_points, PI) {
            for &phi in &axis(self.phi_points, FRAC_PI_2) {
                for &psi in &axis(self.psi_points, FRAC_PI_2) {
                    out.push(
                        StrategyParams::new(theta, phi, psi)
                            .expect("grid values are in range"),
                    );
                }
            }
        }
        out
    }
}

/// One ε-Nash profile found by [`nash_search_grid`].
#[derive(Clone, Copy, Debug)]
pub struct NashProfile {
    /// Alice's strategy.
    pub sa: StrategyParams,
    /// Bob's strategy.
    pub sb: StrategyParams,
    /// Payoffs at the profile.
    pub payoffs: PayoffPair,
}

/// Exhaustive ε-Nash search over the strategy grid.
///
/// The full payoff table is precomputed via the closed form; a profile
/// (i, j) is reported when Alice's payoff is within `eps` of the column
/// maximum and Bob's is within `eps` of the row maximum. All ties are
/// returned, ordered lexicographically by (Alice, Bob) grid index, so the
/// result is deterministic.
///
/// # Errors
///
/// [`Error::Range`] for a non-finite or negative `eps`.
pub fn nash_search_grid(
    cfg: &SchemeConfig,
    pm: &PayoffMatrix,
    grid: &SearchGrid,
    eps: f64,
) -> Result<Vec<NashProfile>> {
    if !eps.is_finite() || eps < 0.0 {
        return Err(Error::Range {
            name: "eps",
            value: eps,
            range: "[0, ∞)",
        });
    }
    let strategies = grid.strategies();
    let n = strategies.len();
    let mut table = vec![PayoffPair { a: 0.0, b: 0.0 }; n * n];
    for (i, sa) in strategies.iter().enumerate() {
        for (j, sb) in strategies.iter().enumerate() {
            table[i * n + j] = payoff_closed_form(cfg, sa, sb, pm);
        }
    }
    // Best responses: column maxima for Alice, row maxima for Bob.
    let mut col_max = vec![f64::NEG_INFINITY; n];
    let mut row_max = vec![f64::NEG_INFINITY; n];
    for i in 0..n {
        for j in 0..n {
            let cell = table[i * n + j];
            col_max[j] = col_max[j].max(cell.a);
            row_max[i] = row_max[i].max(cell.b);
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let cell = table[i * n + j];
            if cell.a >= col_max[j] - eps && cell.b >= row_max[i] - eps {
                out.push(NashProfile {
                    sa: strategies[i],
                    sb: strategies[j],
                    payoffs: cell,
                });
            }
        }
    }
    Ok(out)
}

/// Squared amplitudes (|a|², |b|², |c|², |d|²) of a Marinatto–Weber initial
/// state a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateWeights {
    /// |a|² (outcome 00 weight).
    pub a: f64,
    /// |b|² (outcome 01 weight).
    pub b: f64,
    /// |c|² (outcome 10 weight).
    pub c: f64,
    /// |d|² (outcome 11 weight).
    pub d: f64,
}

impl StateWeights {
    /// Validates a probability vector.
    ///
    /// # Errors
    ///
    /// [`Error::Invariant`] unless the weights are non-negative and sum to 1.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let all = [a, b, c, d];
        if all.iter().any(|&x| !x.is_finite() || x < -1e-12)
            || (all.iter().sum::<f64>() - 1.0).abs() > 1e-9
        {
            return Err(Error::Invariant(
                "state weights must be a probability vector".into(),
            ));
        }
        Ok(Self { a, b, c, d })
    }

    /// The paradoxical state weights (5, 5, 1, 5)/16.
    pub fn paradoxical() -> Self {
        Self {
            a: 5.0 / 16.0,
            b: 5.0 / 16.0,
            c: 1.0 / 16.0,
            d: 5.0 / 16.0,
        }
    }
}

/// Marinatto–Weber Battle-of-the-Sexes payoffs for a general initial state,
/// with identity probabilities p (Alice) and q (Bob):
///
/// ```text
/// $_A(p, q) = pq·Ω + p[Φ(|b|²−|d|²) + Λ(|c|²−|a|²)]
///                 + q[Φ(|c|²−|d|²) + Λ(|b|²−|a|²)] + Θ_A,
/// Ω = (α+β−2σ)(|a|²−|b|²−|c|²+|d|²),  Φ = α−σ,  Λ = β−σ,
/// Θ_A = α|d|² + σ|c|² + σ|b|² + β|a|²,
/// ```
///
/// and $_B with the roles of α and β exchanged. Tests assert agreement with
/// the explicit tactic-mixture evaluation.
///
/// # Errors
///
/// [`Error::Range`] when p or q leave [0, 1], [`Error::Invariant`] for a
/// non-BoS ordering.
pub fn bos_general_payoffs(
    w: &StateWeights,
    p: f64,
    q: f64,
    alpha: f64,
    beta: f64,
    sigma: f64,
) -> Result<PayoffPair> {
    check_bos(alpha, beta, sigma)?;
    for (name, v) in [("p", p), ("q", q)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Range {
                name: if name == "p" { "p" } else { "q" },
                value: v,
                range: "[0, 1]",
            });
        }
    }
    let omega = (alpha + beta - 2.0 * sigma) * (w.a - w.b - w.c + w.d);
    let pay = |x: f64, y: f64| -> f64 {
        let phi = x - sigma;
        let lam = y - sigma;
        p * q * omega
            + p * (phi * (w.b - w.d) + lam * (w.c - w.a))
            + q * (phi * (w.c - w.d) + lam * (w.b - w.a))
            + x * w.d + sigma * w.c + sigma * w.b + y * w.a
    };
    Ok(PayoffPair {
        a: pay(alpha, beta),
        b: pay(beta, alpha),
    })
}

/// A pure-tactic corner of the Marinatto–Weber game, (p*, q*) ∈ {0, 1}².
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    /// (p, q) = (0, 0): both players flip.
    BothFlip,
    /// (p, q) = (1, 1): both players stay.
    BothStay,
    /// (p, q) = (0, 1): Alice flips, Bob stays.
    FlipStay,
    /// (p, q) = (1, 0): Alice stays, Bob flips.
    StayFlip,
}

/// Outcome of a corner Nash-condition check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerCheck {
    /// The standard reading: strict inequalities for the corners
    /// (0,0), (0,1), (1,0) and weak ones for (1,1).
    pub standard: bool,
    /// All inequalities taken strictly.
    pub strict: bool,
    /// All inequalities taken weakly.
    pub weak: bool,
}

/// Checks the Battle-of-the-Sexes corner Nash conditions for a general
/// initial state.
///
/// With E1(q) = qΩ + (σ−β)|a|² + (α−σ)|b|² + (β−σ)|c|² + (σ−α)|d|² (the
/// p-derivative of $_A at opponent tactic q) and E2(p) the analogous
/// q-derivative of $_B, the corners require:
///
/// * (0,0): E1(0) < 0 and E2(0) < 0,
/// * (1,1): E1(1) ≥ 0 and E2(1) ≥ 0,
/// * (0,1): E1(1) < 0 and E2(0) > 0,
/// * (1,0): E1(0) > 0 and E2(1) < 0.
///
/// The result also reports the all-strict and all-weak readings.
///
/// # Errors
///
/// [`Error::Invariant`] for a non-BoS ordering.
pub fn bos_nash_conditions(
    w: &StateWeights,
    corner: Corner,
    alpha: f64,
    beta: f64,
    sigma: f64,
) -> Result<CornerCheck> {
    check_bos(alpha, beta, sigma)?;
    let omega = (alpha + beta - 2.0 * sigma) * (w.a - w.b - w.c + w.d);
    let e1 = |q: f64| {
        q * omega + (sigma - beta) * w.a + (alpha - sigma) * w.b + (beta - sigma) * w.c
            + (sigma - alpha) * w.d
    };
    let e2 = |p: f64| {
        p * omega + (sigma - alpha) * w.a + (alpha - sigma) * w.b + (beta - sigma) * w.c
            + (sigma - beta) * w.d
    };
    // (x, want_positive) pairs for the two inequality tests of the corner.
    let (v1, pos1, v2, pos2, weak_standard) = match corner {
        Corner::BothFlip => (e1(0.0), false, e2(0.0), false, false),
        Corner::BothStay => (e1(1.0), true, e2(1.0), true, true),
        Corner::FlipStay => (e1(1.0), false, e2(0.0), true, false),
        Corner::StayFlip => (e1(0.0), true, e2(1.0), false, false),
    };
    let strict_of = |v: f64, pos: bool| if pos { v > 0.0 } else { v < 0.0 };
    let weak_of = |v: f64, pos: bool| if pos { v >= 0.0 } else { v <= 0.0 };
    let strict = strict_of(v1, pos1) && strict_of(v2, pos2);
    let weak = weak_of(v1, pos1) && weak_of(v2, pos2);
    Ok(CornerCheck {
        standard: if weak_standard { weak } else { strict },
        strict,
        weak,
    })
}

/// The effective Battle-of-the-Sexes parameters of the paradoxical state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EffectiveBos {
    /// Effective preferred payoff α′ = (5α + 5β + 6σ)/16.
    pub alpha: f64,
    /// Effective compromise payoff β′ = (5α + β + 10σ)/16.
    pub beta: f64,
    /// Effective miscoordination payoff σ′ = (α + 5β + 10σ)/16.
    pub sigma: f64,
}

/// Effective game matrix seen by the players on the paradoxical state.
///
/// # Errors
///
/// [`Error::Invariant`] when the input ordering α > β > σ fails or the
/// effective ordering α′ > β′ > σ′ is not preserved.
pub fn bos_effective_matrix(alpha: f64, beta: f64, sigma: f64) -> Result<EffectiveBos> {
    check_bos(alpha, beta, sigma)?;
    let out = EffectiveBos {
        alpha: (5.0 * alpha + 5.0 * beta + 6.0 * sigma) / 16.0,
        beta: (5.0 * alpha + beta + 10.0 * sigma) / 16.0,
        sigma: (alpha + 5.0 * beta + 10.0 * sigma) / 16.0,
    };
    if !(out.alpha > out.beta && out.beta > out.sigma) {
        return Err(Error::Invariant(format!(
            "effective ordering α′ > β′ > σ′ violated: {out:?}"
        )));
    }
    Ok(out)
}

/// Entanglement placement for [`measurement_category_payoffs`]: whether the
/// initial state (first letter) and the measurement basis (second letter)
/// are product (P) or entangled (E).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeasurementCategory {
    /// Product state, product measurement: the classical mixed extension.
    ProductProduct,
    /// Product state, entangled measurement at basis angle δ.
    ProductEntangled {
        /// Measurement-basis entanglement δ ∈ [0, π/2].
        delta: f64,
    },
    /// Entangled state at angle γ, product measurement.
    EntangledProduct {
        /// Initial-state entanglement γ ∈ [0, π/2].
        gamma: f64,
    },
    /// Maximally entangled state and measurement (γ = δ = π/2).
    EntangledEntangled,
}

impl MeasurementCategory {
    fn config(&self) -> Result<SchemeConfig> {
        match *self {
            Self::ProductProduct => SchemeConfig::new(0.0, 0.0),
            Self::ProductEntangled { delta } => SchemeConfig::new(0.0, delta),
            Self::EntangledProduct { gamma } => SchemeConfig::new(gamma, 0.0),
            Self::EntangledEntangled => Ok(SchemeConfig::maximal()),
        }
    }
}

/// Prisoners'-dilemma payoffs of two-parameter strategies under the four
/// entanglement placements (state/measurement product or entangled).
///
/// # Errors
///
/// [`Error::Mode`] if either strategy has ψ ≠ 0, [`Error::Range`] for an
/// out-of-range category angle.
pub fn measurement_category_payoffs(
    category: MeasurementCategory,
    sa: &StrategyParams,
    sb: &StrategyParams,
) -> Result<PayoffPair> {
    for s in [sa, sb] {
        if !s.is_two_param() {
            return Err(Error::Mode { psi: s.psi() });
        }
    }
    let cfg = category.config()?;
    let pm = CanonicalGame::PrisonersDilemma.matrix()?;
    Ok(payoff_closed_form(&cfg, sa, sb, &pm))
}

/// Payoffs when Alice plays the miracle move U(π/2, π/2, π) against Bob's
/// classical strategy (θ, 0, 0) in the maximally entangled prisoners'
/// dilemma:
///
/// ```text
/// ($_A, $_B) = (3 + 2 sin θ, (1 − sin θ)/2).
/// ```
///
/// Tests cross-check this curve against [`payoff_numeric`]
/// (`crate::scheme::payoff_numeric`) at γ = δ = π/2.
///
/// # Errors
///
/// [`Error::Range`] when θ ∉ [0, π].
pub fn miracle_payoffs(theta: f64) -> Result<PayoffPair> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Range {
            name: "theta",
            value: theta,
            range: "[0, π]",
        });
    }
    Ok(PayoffPair {
        a: 3.0 + 2.0 * theta.sin(),
        b: (1.0 - theta.sin()) / 2.0,
    })
}

/// The miracle-move strategy parameters, U(π/2, π/2, π) = (1/√2)[[i, −1], [1, −i]].
pub fn miracle_strategy() -> StrategyParams {
    StrategyParams::new(FRAC_PI_2, FRAC_PI_2, PI).expect("constants are in range")
}

/// Quantum prisoners'-dilemma payoff of the Eisert Q strategy, provided as
/// a named fixture: Q = U(0, π/2, 0) = diag(i, −i).
pub fn q_strategy() -> StrategyParams {
    StrategyParams::new(0.0, FRAC_PI_2, 0.0).expect("constants are in range")
}

/// Convenience: payoffs of the prisoners' dilemma under the noiseless
/// scheme, used by tests and the CLI.
///
/// # Errors
///
/// Propagates matrix construction failures (none for the fixed PD).
pub fn pd_payoffs(
    cfg: &SchemeConfig,
    sa: &StrategyParams,
    sb: &StrategyParams,
) -> Result<PayoffPair> {
    let pm = CanonicalGame::PrisonersDilemma.matrix()?;
    Ok(payoff_closed_form(cfg, sa, sb, &pm))
}

/// Internal helper exposing the generalized closed form at a category's
/// configuration — used by tests comparing against per-placement case formulas.
#[doc(hidden)]
pub fn category_payoff_single(
    category: MeasurementCategory,
    sa: &StrategyParams,
    sb: &StrategyParams,
    entries: &[f64; 4],
) -> Result<f64> {
    let cfg = category.config()?;
    Ok(generalized_payoff(
        cfg.gamma(),
        cfg.delta(),
        1.0,
        1.0,
        sa,
        sb,
        entries,
    ))
}
