//! Dephasing noise on the referee's two transmission legs.
//!
//! The initial state travels from the referee to the players (leg 1) and
//! the acted-on state travels back for measurement (leg 2). Each leg is a
//! two-qubit dephasing channel with single-qubit error weight p and memory
//! μ interpolating between independent and fully correlated phase kicks:
//!
//! ```text
//! A_ij = √(p_i [(1−μ) p_j + μ δ_ij])  Ẑ_i ⊗ Ẑ_j,
//! Ẑ_0 = 1,  Ẑ_1 = σ_z,  p_0 = 1 − p/2,  p_1 = p/2.
//! ```
//!
//! The channel multiplies every interference term of the closed-form payoff
//! by the coherence survival factor
//!
//! ```text
//! μ_p = (1−μ)(1−p)² + μ,
//! ```
//!
//! leg 1 damping the initial-state (sin γ) terms and leg 2 the
//! measurement-basis (sin δ and ξ) terms. [`noisy_payoff_numeric`] runs the
//! full Kraus pipeline; [`noisy_payoff_closed_form`] plugs the two μ_p
//! factors into the generalized closed form. Tests assert the two agree to
//! 1e−9.

use crate::error::{Error, Result};
use crate::qmath::{
    apply_unitary, c, expectation, tensor, BlochVector, DensityMatrix, KrausSet, Operator,
};
use crate::scheme::{
    generalized_payoff, initial_state, payoff_operator, strategy_unitary, PayoffMatrix,
    PayoffPair, Player, SchemeConfig, StrategyParams,
};

/// Single-qubit dephasing with error weight p ∈ [0, 1].
///
/// Kraus operators √p₀ 1 and √p₁ σ_z with p₀ = 1 − p/2, p₁ = p/2; the
/// Bloch action shrinks the equatorial components by 1 − p and fixes z.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dephasing {
    p: f64,
}

impl Dephasing {
    /// Validates p ∈ [0, 1].
    ///
    /// # Errors
    ///
    /// [`Error::Range`] otherwise.
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Range {
                name: "p",
                value: p,
                range: "[0, 1]",
            });
        }
        Ok(Self { p })
    }

    /// Error weight p.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// The validated single-qubit Kraus set {√p₀ 1, √p₁ σ_z}.
    pub fn kraus_set(&self) -> KrausSet {
        let p0 = (1.0 - self.p / 2.0).sqrt();
        let p1 = (self.p / 2.0).sqrt();
        let id = Operator::identity(2).scale(c(p0, 0.0));
        let z = Operator::from_rows2([
            [c(p1, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(-p1, 0.0)],
        ]);
        KrausSet::new(vec![id, z]).expect("dephasing weights sum to one")
    }

    /// The affine Bloch-sphere action (x, y, z) ↦ ((1−p)x, (1−p)y, z).
    ///
    /// # Errors
    ///
    /// Propagates [`BlochVector::new`] failures (none: contraction keeps
    /// the ball invariant).
    pub fn bloch_transform(&self, r: &BlochVector) -> Result<BlochVector> {
        BlochVector::new((1.0 - self.p) * r.x, (1.0 - self.p) * r.y, r.z)
    }
}

/// The standard single-qubit noise channels, each parameterized by an
/// error weight p ∈ [0, 1].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SingleQubitChannel {
    /// Phase flips: equatorial Bloch shrink 1 − p.
    Dephasing {
        /// Error weight.
        p: f64,
    },
    /// Uniform Pauli errors {√(1−p) 1, √(p/3) σ_x, √(p/3) σ_y, √(p/3) σ_z}:
    /// isotropic Bloch shrink 1 − 4p/3.
    Depolarizing {
        /// Error weight.
        p: f64,
    },
    /// Energy relaxation toward |0⟩: equatorial shrink √(1−p),
    /// z ↦ (1−p) z + p.
    AmplitudeDamping {
        /// Decay probability.
        p: f64,
    },
}

impl SingleQubitChannel {
    fn p(&self) -> Result<f64> {
        let p = match *self {
            Self::Dephasing { p } | Self::Depolarizing { p } | Self::AmplitudeDamping { p } => p,
        };
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Range {
                name: "p",
                value: p,
                range: "[0, 1]",
            });
        }
        Ok(p)
    }

    /// The validated Kraus set of the channel.
    ///
    /// # Errors
    ///
    /// [`Error::Range`] when p ∉ [0, 1].
    pub fn kraus_set(&self) -> Result<KrausSet> {
        let p = self.p()?;
        let ops = match self {
            Self::Dephasing { .. } => return Ok(Dephasing::new(p)?.kraus_set()),
            Self::Depolarizing { .. } => {
                let w0 = (1.0 - p).sqrt();
                let w = (p / 3.0).sqrt();
                vec![
                    Operator::identity(2).scale(c(w0, 0.0)),
                    // σ_x, σ_y, σ_z.
                    Operator::from_rows2([[c(0.0, 0.0), c(w, 0.0)], [c(w, 0.0), c(0.0, 0.0)]]),
                    Operator::from_rows2([[c(0.0, 0.0), c(0.0, -w)], [c(0.0, w), c(0.0, 0.0)]]),
                    Operator::from_rows2([[c(w, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-w, 0.0)]]),
                ]
            }
            Self::AmplitudeDamping { .. } => vec![
                Operator::from_rows2([
                    [c(1.0, 0.0), c(0.0, 0.0)],
                    [c(0.0, 0.0), c((1.0 - p).sqrt(), 0.0)],
                ]),
                Operator::from_rows2([
                    [c(0.0, 0.0), c(p.sqrt(), 0.0)],
                    [c(0.0, 0.0), c(0.0, 0.0)],
                ]),
            ],
        };
        KrausSet::new(ops)
    }

    /// The affine Bloch-ball action of the channel; agrees with the Kraus
    /// path on every state (asserted by tests).
    ///
    /// # Errors
    ///
    /// [`Error::Range`] when p ∉ [0, 1].
    pub fn bloch_transform(&self, r: &BlochVector) -> Result<BlochVector> {
        let p = self.p()?;
        match self {
            Self::Dephasing { .. } => BlochVector::new((1.0 - p) * r.x, (1.0 - p) * r.y, r.z),
            Self::Depolarizing { .. } => {
                let f = (3.0 - 4.0 * p) / 3.0;
                BlochVector::new(f * r.x, f * r.y, f * r.z)
            }
            Self::AmplitudeDamping { .. } => {
                let eq = (1.0 - p).sqrt();
                BlochVector::new(eq * r.x, eq * r.y, (1.0 - p) * r.z + p)
            }
        }
    }
}

/// Two-qubit dephasing with memory: error weight p, correlation μ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelatedDephasing {
    p: f64,
    mu: f64,
}

impl CorrelatedDephasing {
    /// Validates p, μ ∈ [0, 1].
    ///
    /// # Errors
    ///
    /// [`Error::Range`] otherwise.
    pub fn new(p: f64, mu: f64) -> Result<Self> {
        for (name, v) in [("p", p), ("mu", mu)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Range {
                    name: if name == "p" { "p" } else { "mu" },
                    value: v,
                    range: "[0, 1]",
                });
            }
        }
        Ok(Self { p, mu })
    }

    /// Error weight p.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Memory parameter μ.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Coherence survival factor μ_p = (1−μ)(1−p)² + μ.
    pub fn mu_p(&self) -> f64 {
        (1.0 - self.mu) * (1.0 - self.p) * (1.0 - self.p) + self.mu
    }

    /// The merged six-operator Kraus set: the four uncorrelated operators
    /// √((1−μ) p_i p_j) Ẑ_i ⊗ Ẑ_j and the two correlated operators
    /// √(μ p_i) Ẑ_i ⊗ Ẑ_i.
    ///
    /// # Errors
    ///
    /// [`Error::Completeness`] cannot occur for validated parameters; the
    /// result type mirrors [`KrausSet::new`].
    pub fn kraus_set(&self) -> Result<KrausSet> {
        let weights = [1.0 - self.p / 2.0, self.p / 2.0];
        let z = [
            Operator::identity(2),
            Operator::from_rows2([
                [c(1.0, 0.0), c(0.0, 0.0)],
                [c(0.0, 0.0), c(-1.0, 0.0)],
            ]),
        ];
        let mut ops = Vec::with_capacity(6);
        for i in 0..2 {
            for j in 0..2 {
                let w = ((1.0 - self.mu) * weights[i] * weights[j]).sqrt();
                ops.push(tensor(&z[i], &z[j]).scale(c(w, 0.0)));
            }
        }
        for i in 0..2 {
            let w = (self.mu * weights[i]).sqrt();
            ops.push(tensor(&z[i], &z[i]).scale(c(w, 0.0)));
        }
        KrausSet::new(ops)
    }
}

/// Noise placement on the two transmission legs; `None` means a clean leg.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NoiseConfig {
    /// Referee → players leg (damps initial-state coherence).
    pub leg1: Option<CorrelatedDephasing>,
    /// Players → referee leg (damps measurement-basis interference).
    pub leg2: Option<CorrelatedDephasing>,
}

impl NoiseConfig {
    /// Coherence factor of leg 1 (1.0 when clean).
    pub fn mu1(&self) -> f64 {
        self.leg1.map_or(1.0, |ch| ch.mu_p())
    }

    /// Coherence factor of leg 2 (1.0 when clean).
    pub fn mu2(&self) -> f64 {
        self.leg2.map_or(1.0, |ch| ch.mu_p())
    }
}

/// Expected payoffs under dephasing noise via the full Kraus pipeline:
/// ρ_in → leg 1 → (U_A ⊗ U_B) → leg 2 → Tr(P ρ).
///
/// # Errors
///
/// Propagates linear-algebra validation failures; none occur for in-range
/// inputs.
pub fn noisy_payoff_numeric(
    cfg: &SchemeConfig,
    sa: &StrategyParams,
    sb: &StrategyParams,
    pm: &PayoffMatrix,
    noise: &NoiseConfig,
) -> Result<PayoffPair> {
    let mut rho = DensityMatrix::from_ket(&initial_state(cfg));
    if let Some(ch) = noise.leg1 {
        rho = ch.kraus_set()?.apply(&rho)?;
    }
    let u = tensor(&strategy_unitary(sa), &strategy_unitary(sb));
    rho = apply_unitary(&u, &rho)?;
    if let Some(ch) = noise.leg2 {
        rho = ch.kraus_set()?.apply(&rho)?;
    }
    let a = expectation(&payoff_operator(pm, cfg.delta(), Player::Alice)?, &rho)?;
    let b = expectation(&payoff_operator(pm, cfg.delta(), Player::Bob)?, &rho)?;
    Ok(PayoffPair { a, b })
}

/// Expected payoffs under dephasing noise from the closed form, with
/// μ₁ = μ_p(leg 1) on the sin γ interference term and μ₂ = μ_p(leg 2) on
/// the measurement-basis terms.
pub fn noisy_payoff_closed_form(
    cfg: &SchemeConfig,
    sa: &StrategyParams,
    sb: &StrategyParams,
    pm: &PayoffMatrix,
    noise: &NoiseConfig,
) -> PayoffPair {
    let (mu1, mu2) = (noise.mu1(), noise.mu2());
    PayoffPair {
        a: generalized_payoff(cfg.gamma(), cfg.delta(), mu1, mu2, sa, sb, &pm.a),
        b: generalized_payoff(cfg.gamma(), cfg.delta(), mu1, mu2, sa, sb, &pm.b),
    }
}

/// Payoffs when Alice is restricted to classical strategies (φ = ψ = 0)
/// while Bob keeps the full three-parameter set, with product measurement
/// (δ = 0) and dephasing on the incoming leg.
///
/// At θ_A = θ_B = π/2 the prisoners'-dilemma optimum over Bob's phases is
/// 9/4 + (μ_p/4) sin γ, attained at φ_B − ψ_B = −π/2, and the
/// Battle-of-the-Sexes (2, 1, 0) optimum is 3/4 + (3 μ_p/4) sin γ at
/// φ_B − ψ_B = +π/2 — the sign flips with the sign of the interference
/// coefficient g₀₀ + g₁₁ − g₀₁ − g₁₀ (tests assert both against a phase
/// scan).
///
/// # Errors
///
/// [`Error::Range`] when γ ∉ [0, π/2] or θ_A ∉ [0, π].
pub fn classical_alice_payoffs(
    gamma: f64,
    theta_a: f64,
    sb: &StrategyParams,
    pm: &PayoffMatrix,
    leg1: Option<CorrelatedDephasing>,
) -> Result<PayoffPair> {
    let cfg = SchemeConfig::new(gamma, 0.0)?;
    let sa = StrategyParams::classical(theta_a)?;
    let noise = NoiseConfig { leg1, leg2: None };
    Ok(noisy_payoff_closed_form(&cfg, &sa, sb, pm, &noise))
}

/// Payoffs in the maximally entangled scheme with identical correlated
/// dephasing (p, μ) on both legs.
///
/// # Errors
///
/// [`Error::Range`] for out-of-range p or μ.
pub fn symmetric_noise_payoffs(
    p: f64,
    mu: f64,
    sa: &StrategyParams,
    sb: &StrategyParams,
    pm: &PayoffMatrix,
) -> Result<PayoffPair> {
    let ch = CorrelatedDephasing::new(p, mu)?;
    let noise = NoiseConfig {
        leg1: Some(ch),
        leg2: Some(ch),
    };
    Ok(noisy_payoff_closed_form(
        &SchemeConfig::maximal(),
        sa,
        sb,
        pm,
        &noise,
    ))
}
