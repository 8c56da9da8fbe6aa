//! The generalized two-parameter quantization scheme for 2×2 games.
//!
//! A referee prepares the entangled state
//!
//! ```text
//! |ψ_in⟩ = cos(γ/2)|00⟩ + i sin(γ/2)|11⟩,          γ ∈ [0, π/2],
//! ```
//!
//! each player applies a local unitary
//!
//! ```text
//! U(θ, φ, ψ) = cos(θ/2) R(φ) + sin(θ/2) C(ψ),
//! R(φ) = diag(e^{iφ}, e^{−iφ}),
//! C(ψ) = [[0, e^{iψ}], [−e^{−iψ}, 0]],
//! ```
//!
//! and the referee measures in the entangled basis
//!
//! ```text
//! |ψ_00⟩ = cos(δ/2)|00⟩ + i sin(δ/2)|11⟩,
//! |ψ_01⟩ = cos(δ/2)|01⟩ − i sin(δ/2)|10⟩,
//! |ψ_10⟩ = cos(δ/2)|10⟩ − i sin(δ/2)|01⟩,
//! |ψ_11⟩ = cos(δ/2)|11⟩ + i sin(δ/2)|00⟩,          δ ∈ [0, π/2],
//! ```
//!
//! paying the players the game-matrix entry of the observed outcome. Alice
//! owns the left tensor slot, Bob the right. δ = 0 recovers the
//! Marinatto–Weber scheme, γ = δ = π/2 the Eisert scheme, and γ = δ = 0 the
//! classical mixed extension with cooperation probability cos²(θ/2).
//!
//! [`payoff_numeric`] evaluates payoffs through the density-matrix pipeline
//! and serves as the crate-wide oracle; [`generalized_payoff`] is the
//! closed-form expansion of the same trace (with optional per-leg coherence
//! survival factors used by the noisy-channel and key-distribution modules)
//! and must agree with the oracle to machine precision.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::qmath::{
    apply_unitary, c, expectation, tensor, DensityMatrix, Ket, Operator, C,
};

/// The referee's two dials: initial-state entanglement γ and
/// measurement-basis entanglement δ, both in [0, π/2].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeConfig {
    gamma: f64,
    delta: f64,
}

impl SchemeConfig {
    /// Validates γ, δ ∈ [0, π/2].
    ///
    /// # Errors
    ///
    /// [`Error::Range`] for out-of-range or non-finite angles.
    pub fn new(gamma: f64, delta: f64) -> Result<Self> {
        check_range("gamma", gamma, 0.0, FRAC_PI_2)?;
        check_range("delta", delta, 0.0, FRAC_PI_2)?;
        Ok(Self { gamma, delta })
    }

    /// Initial-state entanglement angle γ.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Measurement-basis entanglement angle δ.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// γ = δ = 0: the classical mixed extension.
    pub fn classical() -> Self {
        Self {
            gamma: 0.0,
            delta: 0.0,
        }
    }

    /// γ = δ = π/2: the maximally entangled (Eisert) regime.
    pub fn maximal() -> Self {
        Self {
            gamma: FRAC_PI_2,
            delta: FRAC_PI_2,
        }
    }
}

fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if !value.is_finite() || value < lo - 1e-12 || value > hi + 1e-12 {
        return Err(Error::Range {
            name,
            value,
            range: "see docs",
        });
    }
    Ok(())
}

/// A player's strategy (θ, φ, ψ) with θ ∈ [0, π] and φ, ψ ∈ [−π, π].
///
/// At ψ = 0 the flip part acts as C|0⟩ = −|1⟩, C|1⟩ = |0⟩; strategies with
/// ψ = 0 form the two-parameter subset accepted by the two-parameter closed
/// forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StrategyParams {
    theta: f64,
    phi: f64,
    psi: f64,
}

impl StrategyParams {
    /// Validates the parameter ranges.
    ///
    /// # Errors
    ///
    /// [`Error::Range`] when θ ∉ [0, π] or φ, ψ ∉ [−π, π].
    pub fn new(theta: f64, phi: f64, psi: f64) -> Result<Self> {
        check_range("theta", theta, 0.0, PI)?;
        check_range("phi", phi, -PI, PI)?;
        check_range("psi", psi, -PI, PI)?;
        Ok(Self { theta, phi, psi })
    }

    /// A two-parameter strategy (ψ = 0).
    ///
    /// # Errors
    ///
    /// [`Error::Range`] as for [`StrategyParams::new`].
    pub fn two_param(theta: f64, phi: f64) -> Result<Self> {
        Self::new(theta, phi, 0.0)
    }

    /// A classical strategy (φ = ψ = 0): flip with amplitude sin(θ/2).
    ///
    /// # Errors
    ///
    /// [`Error::Range`] when θ ∉ [0, π].
    pub fn classical(theta: f64) -> Result<Self> {
        Self::new(theta, 0.0, 0.0)
    }

    /// Mixing angle θ.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Diagonal phase φ.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Flip phase ψ.
    pub fn psi(&self) -> f64 {
        self.psi
    }

    /// True when ψ = 0, i.e. the strategy lies in the two-parameter subset.
    pub fn is_two_param(&self) -> bool {
        self.psi == 0.0
    }
}

/// A 2×2 bimatrix game; entries are indexed by outcome 00, 01, 10, 11.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PayoffMatrix {
    /// Row player (Alice) payoffs for outcomes 00, 01, 10, 11.
    pub a: [f64; 4],
    /// Column player (Bob) payoffs for outcomes 00, 01, 10, 11.
    pub b: [f64; 4],
}

impl PayoffMatrix {
    /// Creates a bimatrix, rejecting non-finite entries.
    ///
    /// # Errors
    ///
    /// [`Error::NonFinite`] when any entry is NaN or infinite.
    pub fn new(a: [f64; 4], b: [f64; 4]) -> Result<Self> {
        if a.iter().chain(b.iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("payoff entry"));
        }
        Ok(Self { a, b })
    }
}

/// A pair (Alice, Bob) of expected payoffs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PayoffPair {
    /// Alice's expected payoff.
    pub a: f64,
    /// Bob's expected payoff.
    pub b: f64,
}

/// The referee's initial state cos(γ/2)|00⟩ + i sin(γ/2)|11⟩.
pub fn initial_state(cfg: &SchemeConfig) -> Ket {
    let half = cfg.gamma / 2.0;
    Ket::new(vec![
        c(half.cos(), 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, half.sin()),
    ])
    .expect("state is normalized by construction")
}

/// The strategy unitary U(θ, φ, ψ) = cos(θ/2) R(φ) + sin(θ/2) C(ψ).
pub fn strategy_unitary(s: &StrategyParams) -> Operator {
    let (ch, sh) = ((s.theta / 2.0).cos(), (s.theta / 2.0).sin());
    Operator::from_rows2([
        [
            C::from_polar(ch, s.phi),
            C::from_polar(sh, s.psi),
        ],
        [
            -C::from_polar(sh, -s.psi),
            C::from_polar(ch, -s.phi),
        ],
    ])
}

/// The pure flip C(ψ) = [[0, e^{iψ}], [−e^{−iψ}, 0]].
pub fn flip_operator(psi: f64) -> Operator {
    Operator::from_rows2([
        [c(0.0, 0.0), C::from_polar(1.0, psi)],
        [-C::from_polar(1.0, -psi), c(0.0, 0.0)],
    ])
}

/// The Marinatto–Weber tactic flip σ_x = [[0, 1], [1, 0]].
///
/// Differs from [`flip_operator`]`(0)` only by a column sign; the two flips
/// produce identical payoffs in the tactic-mixture game (asserted by tests).
pub fn marinatto_flip() -> Operator {
    Operator::from_rows2([
        [c(0.0, 0.0), c(1.0, 0.0)],
        [c(1.0, 0.0), c(0.0, 0.0)],
    ])
}

/// The four measurement kets |ψ_00⟩, |ψ_01⟩, |ψ_10⟩, |ψ_11⟩ (see module docs).
pub fn measurement_kets(delta: f64) -> Result<[Ket; 4]> {
    check_range("delta", delta, 0.0, FRAC_PI_2)?;
    let (cd, sd) = ((delta / 2.0).cos(), (delta / 2.0).sin());
    let zero = c(0.0, 0.0);
    let kets = [
        Ket::new(vec![c(cd, 0.0), zero, zero, c(0.0, sd)])?,
        Ket::new(vec![zero, c(cd, 0.0), c(0.0, -sd), zero])?,
        Ket::new(vec![zero, c(0.0, -sd), c(cd, 0.0), zero])?,
        Ket::new(vec![c(0.0, sd), zero, zero, c(cd, 0.0)])?,
    ];
    Ok(kets)
}

/// The four rank-one measurement projectors P_mn = |ψ_mn⟩⟨ψ_mn|.
///
/// The set is orthogonal and complete (Σ P_mn = 1) for every δ; tests assert
/// this on a δ grid.
///
/// # Errors
///
/// [`Error::Range`] when δ ∉ [0, π/2].
pub fn measurement_projectors(delta: f64) -> Result<[Operator; 4]> {
    let kets = measurement_kets(delta)?;
    Ok([
        kets[0].projector(),
        kets[1].projector(),
        kets[2].projector(),
        kets[3].projector(),
    ])
}

/// Which player's payoff entries to assemble into an operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Player {
    /// The row player (left tensor slot).
    Alice,
    /// The column player (right tensor slot).
    Bob,
}

/// The payoff observable Σ_mn $_mn P_mn for one player.
///
/// # Errors
///
/// [`Error::Range`] when δ ∉ [0, π/2].
pub fn payoff_operator(pm: &PayoffMatrix, delta: f64, player: Player) -> Result<Operator> {
    let projectors = measurement_projectors(delta)?;
    let values = match player {
        Player::Alice => &pm.a,
        Player::Bob => &pm.b,
    };
    let mut op = Operator::identity(4).scale(c(0.0, 0.0));
    for (proj, &v) in projectors.iter().zip(values.iter()) {
        op = op.add(&proj.scale(c(v, 0.0)))?;
    }
    Ok(op)
}

/// Outcome distribution (q_00, q_01, q_10, q_11) of a final two-qubit state.
///
/// # Errors
///
/// [`Error::Range`] when δ ∉ [0, π/2], [`Error::Dimension`] unless `rho`
/// is 4×4.
pub fn outcome_distribution(rho: &DensityMatrix, delta: f64) -> Result<[f64; 4]> {
    let projectors = measurement_projectors(delta)?;
    let mut q = [0.0; 4];
    for (slot, proj) in q.iter_mut().zip(projectors.iter()) {
        *slot = expectation(proj, rho)?;
    }
    Ok(q)
}

/// Expected payoffs by explicit density-matrix evolution — the crate oracle.
///
/// Pipeline: |ψ_in⟩⟨ψ_in| → (U_A ⊗ U_B) ρ (U_A ⊗ U_B)† → Tr(P ρ) per player.
///
/// # Errors
///
/// Propagates validation failures from the linear-algebra layer; none occur
/// for in-range inputs.
pub fn payoff_numeric(
    cfg: &SchemeConfig,
    sa: &StrategyParams,
    sb: &StrategyParams,
    pm: &PayoffMatrix,
) -> Result<PayoffPair> {
    let rho = DensityMatrix::from_ket(&initial_state(cfg));
    let u = tensor(&strategy_unitary(sa), &strategy_unitary(sb));
    let rho = apply_unitary(&u, &rho)?;
    let a = expectation(&payoff_operator(pm, cfg.delta, Player::Alice)?, &rho)?;
    let b = expectation(&payoff_operator(pm, cfg.delta, Player::Bob)?, &rho)?;
    Ok(PayoffPair { a, b })
}

/// Closed-form expected payoff for one player's entry vector `g`
/// (indexed 00, 01, 10, 11), with per-leg coherence survival factors.
///
/// `mu1` scales interference inherited from the initial-state coherence
/// (|00⟩⟨11| before the moves); `mu2` scales interference between outcome
/// amplitudes after the moves. `mu1 = mu2 = 1` is the noiseless scheme;
/// the correlated-dephasing and eavesdropping channels damp these factors.
///
/// With η = cos²(δ/2)cos²(γ/2) + sin²(δ/2)sin²(γ/2),
/// χ = cos²(δ/2)sin²(γ/2) + sin²(δ/2)cos²(γ/2), ξ = sin γ sin δ / 2:
///
/// ```text
/// $ = cos²(θ1/2)cos²(θ2/2)[η g00 + χ g11 + (g00−g11) μ1μ2 ξ cos 2(φ1+φ2)]
///   + sin²(θ1/2)sin²(θ2/2)[η g11 + χ g00 − (g00−g11) μ1μ2 ξ cos 2(ψ1+ψ2)]
///   + cos²(θ1/2)sin²(θ2/2)[η g01 + χ g10 + (g01−g10) μ1μ2 ξ cos 2(φ1−ψ2)]
///   + sin²(θ1/2)cos²(θ2/2)[η g10 + χ g01 − (g01−g10) μ1μ2 ξ cos 2(φ2−ψ1)]
///   + μ2 (g11−g00)/4 · sin θ1 sin θ2 sin δ · sin(φ1+φ2+ψ1+ψ2)
///   + μ2 (g10−g01)/4 · sin θ1 sin θ2 sin δ · sin(φ2+ψ2−φ1−ψ1)
///   + μ1 (g00+g11−g01−g10)/4 · sin θ1 sin θ2 sin γ · sin(φ1+φ2−ψ1−ψ2)
/// ```
///
/// Tests assert agreement with [`payoff_numeric`] (resp. the Kraus-channel
/// pipeline) to 1e−9 over dense random samples.
#[allow(clippy::too_many_arguments)]
pub fn generalized_payoff(
    gamma: f64,
    delta: f64,
    mu1: f64,
    mu2: f64,
    s1: &StrategyParams,
    s2: &StrategyParams,
    g: &[f64; 4],
) -> f64 {
    let (cg, sg) = ((gamma / 2.0).cos().powi(2), (gamma / 2.0).sin().powi(2));
    let (cd, sd) = ((delta / 2.0).cos().powi(2), (delta / 2.0).sin().powi(2));
    let eta = cd * cg + sd * sg;
    let chi = cd * sg + sd * cg;
    let xi = gamma.sin() * delta.sin() / 2.0;

    let (c1, s1sq) = ((s1.theta / 2.0).cos().powi(2), (s1.theta / 2.0).sin().powi(2));
    let (c2, s2sq) = ((s2.theta / 2.0).cos().powi(2), (s2.theta / 2.0).sin().powi(2));
    let (g00, g01, g10, g11) = (g[0], g[1], g[2], g[3]);
    let (phi1, psi1, phi2, psi2) = (s1.phi, s1.psi, s2.phi, s2.psi);
    let mu12 = mu1 * mu2;

    let t_cc = c1 * c2
        * (eta * g00 + chi * g11 + (g00 - g11) * mu12 * xi * (2.0 * (phi1 + phi2)).cos());
    let t_ss = s1sq * s2sq
        * (eta * g11 + chi * g00 - (g00 - g11) * mu12 * xi * (2.0 * (psi1 + psi2)).cos());
    let t_cs = c1 * s2sq
        * (eta * g01 + chi * g10 + (g01 - g10) * mu12 * xi * (2.0 * (phi1 - psi2)).cos());
    let t_sc = s1sq * c2
        * (eta * g10 + chi * g01 - (g01 - g10) * mu12 * xi * (2.0 * (phi2 - psi1)).cos());

    let cross = s1.theta.sin() * s2.theta.sin() / 4.0;
    let t_delta_sum =
        mu2 * (g11 - g00) * cross * delta.sin() * (phi1 + phi2 + psi1 + psi2).sin();
    let t_delta_diff =
        mu2 * (g10 - g01) * cross * delta.sin() * (phi2 + psi2 - phi1 - psi1).sin();
    let t_gamma =
        mu1 * (g00 + g11 - g01 - g10) * cross * gamma.sin() * (phi1 + phi2 - psi1 - psi2).sin();

    t_cc + t_ss + t_cs + t_sc + t_delta_sum + t_delta_diff + t_gamma
}

/// Closed-form payoffs for both players under the noiseless scheme
/// (three-parameter strategies allowed).
pub fn payoff_closed_form(
    cfg: &SchemeConfig,
    sa: &StrategyParams,
    sb: &StrategyParams,
    pm: &PayoffMatrix,
) -> PayoffPair {
    PayoffPair {
        a: generalized_payoff(cfg.gamma, cfg.delta, 1.0, 1.0, sa, sb, &pm.a),
        b: generalized_payoff(cfg.gamma, cfg.delta, 1.0, 1.0, sa, sb, &pm.b),
    }
}

/// Two-parameter closed form for a Battle-of-the-Sexes matrix
/// (diag(α, β), off-diagonal σ), evaluated term by term:
///
/// ```text
/// $_A = cos²(θ1/2)cos²(θ2/2)[η_δ sin²(γ/2) + ξ_δ cos²(γ/2) + χ_δ sin γ cos 2(φ1+φ2) − σ]
///     + sin²(θ1/2)sin²(θ2/2)[η_δ cos²(γ/2) + ξ_δ sin²(γ/2) − χ_δ sin γ − σ]
///     + ((α+β−2σ) sin γ − 2 χ_δ)/4 · sin θ1 sin θ2 sin(φ1+φ2) + σ,
/// ```
///
/// with ξ_δ = α cos²(δ/2) + β sin²(δ/2), η_δ = α sin²(δ/2) + β cos²(δ/2),
/// χ_δ = (α−β) sin δ / 2; Bob's form swaps ξ_δ ↔ η_δ, flips the sign of the
/// χ_δ terms and of the 2χ_δ in the last numerator.
///
/// # Errors
///
/// [`Error::Mode`] if either strategy has ψ ≠ 0.
pub fn bos_two_param_payoffs(
    cfg: &SchemeConfig,
    sa: &StrategyParams,
    sb: &StrategyParams,
    alpha: f64,
    beta: f64,
    sigma: f64,
) -> Result<PayoffPair> {
    for s in [sa, sb] {
        if !s.is_two_param() {
            return Err(Error::Mode { psi: s.psi });
        }
    }
    let (cg, sg) = ((cfg.gamma / 2.0).cos().powi(2), (cfg.gamma / 2.0).sin().powi(2));
    let (cd, sd) = ((cfg.delta / 2.0).cos().powi(2), (cfg.delta / 2.0).sin().powi(2));
    let xi_d = alpha * cd + beta * sd;
    let eta_d = alpha * sd + beta * cd;
    let chi_d = (alpha - beta) * cfg.delta.sin() / 2.0;
    let (c1, s1) = ((sa.theta / 2.0).cos().powi(2), (sa.theta / 2.0).sin().powi(2));
    let (c2, s2) = ((sb.theta / 2.0).cos().powi(2), (sb.theta / 2.0).sin().powi(2));
    let cross = sa.theta.sin() * sb.theta.sin() * (sa.phi + sb.phi).sin();
    let cos2phi = (2.0 * (sa.phi + sb.phi)).cos();
    let sin_g = cfg.gamma.sin();

    let eval = |xi: f64, eta: f64, chi: f64| -> f64 {
        c1 * c2 * (eta * sg + xi * cg + chi * sin_g * cos2phi - sigma)
            + s1 * s2 * (eta * cg + xi * sg - chi * sin_g - sigma)
            + ((alpha + beta - 2.0 * sigma) * sin_g - 2.0 * chi) / 4.0 * cross
            + sigma
    };
    Ok(PayoffPair {
        a: eval(xi_d, eta_d, chi_d),
        b: eval(eta_d, xi_d, -chi_d),
    })
}

/// Marinatto–Weber Battle-of-the-Sexes payoffs for the state
/// cos(γ/2)|00⟩ + i sin(γ/2)|11⟩ with identity probabilities p (Alice)
/// and q (Bob), evaluated in closed form.
///
/// Equals the δ = 0, φ = ψ = 0 reduction of the scheme with
/// p = cos²(θ_A/2), q = cos²(θ_B/2) (asserted by tests).
///
/// # Errors
///
/// [`Error::Range`] when p or q leave [0, 1].
pub fn marinatto_bos_payoffs(
    gamma: f64,
    p: f64,
    q: f64,
    alpha: f64,
    beta: f64,
    sigma: f64,
) -> Result<PayoffPair> {
    check_range("p", p, 0.0, 1.0)?;
    check_range("q", q, 0.0, 1.0)?;
    let a2 = (gamma / 2.0).cos().powi(2);
    let b2 = (gamma / 2.0).sin().powi(2);
    let omega = alpha + beta - 2.0 * sigma;
    let pay = |x: f64, y: f64| -> f64 {
        p * (q * omega - x * b2 - y * a2 + sigma) + q * (-x * b2 - y * a2 + sigma) + x * b2
            + y * a2
    };
    Ok(PayoffPair {
        a: pay(alpha, beta),
        b: pay(beta, alpha),
    })
}

/// Maximal-entanglement (γ = δ = π/2) two-parameter closed form for a
/// Battle-of-the-Sexes matrix:
///
/// ```text
/// $_A = (α−σ)[cos(θ1/2)cos(θ2/2)cos(φ1+φ2)]²
///     + (β−σ)[cos(θ1/2)cos(θ2/2)sin(φ1+φ2) + sin(θ1/2)sin(θ2/2)]² + σ,
/// ```
///
/// and $_B with α ↔ β exchanged in the two prefactors.
///
/// # Errors
///
/// [`Error::Mode`] if either strategy has ψ ≠ 0.
pub fn eisert_bos_payoffs(
    sa: &StrategyParams,
    sb: &StrategyParams,
    alpha: f64,
    beta: f64,
    sigma: f64,
) -> Result<PayoffPair> {
    for s in [sa, sb] {
        if !s.is_two_param() {
            return Err(Error::Mode { psi: s.psi });
        }
    }
    let cc = (sa.theta / 2.0).cos() * (sb.theta / 2.0).cos();
    let ss = (sa.theta / 2.0).sin() * (sb.theta / 2.0).sin();
    let sum = sa.phi + sb.phi;
    let diag = (cc * sum.cos()).powi(2);
    let off = (cc * sum.sin() + ss).powi(2);
    Ok(PayoffPair {
        a: (alpha - sigma) * diag + (beta - sigma) * off + sigma,
        b: (beta - sigma) * diag + (alpha - sigma) * off + sigma,
    })
}

/// Win probability of the quantum player in the PQ penny-flip game.
///
/// The coin starts at |0⟩ (heads); Q applies a Hadamard, the classical
/// player flips (σ_x) with probability `flip_prob`, Q applies a Hadamard
/// again and wins on measuring |0⟩. The value is 1 for every `flip_prob`
/// because |+⟩ is a fixed point of the flip — computed here through the
/// density pipeline, not asserted.
///
/// # Errors
///
/// [`Error::Range`] when `flip_prob` ∉ [0, 1].
pub fn penny_flip_quantum(flip_prob: f64) -> Result<f64> {
    check_range("flip_prob", flip_prob, 0.0, 1.0)?;
    let inv = 1.0 / 2.0_f64.sqrt();
    let hadamard = Operator::from_rows2([
        [c(inv, 0.0), c(inv, 0.0)],
        [c(inv, 0.0), c(-inv, 0.0)],
    ]);
    let flip = marinatto_flip();
    let rho = DensityMatrix::from_ket(&Ket::new(vec![c(1.0, 0.0), c(0.0, 0.0)])?);
    let rho = apply_unitary(&hadamard, &rho)?;
    // Classical mixed move: flip with probability flip_prob.
    let flipped = apply_unitary(&flip, &rho)?;
    let mixed = DensityMatrix::new(
        rho.operator()
            .scale(c(1.0 - flip_prob, 0.0))
            .add(&flipped.operator().scale(c(flip_prob, 0.0)))?,
    )?;
    let rho = apply_unitary(&hadamard, &mixed)?;
    let heads = Operator::from_rows2([
        [c(1.0, 0.0), c(0.0, 0.0)],
        [c(0.0, 0.0), c(0.0, 0.0)],
    ]);
    expectation(&heads, &rho)
}
