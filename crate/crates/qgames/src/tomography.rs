//! Single-qubit state estimation through game payoffs.
//!
//! An unknown qubit ρ is loaded into Bob's slot next to an ancilla |0⟩ in
//! Alice's slot, both players apply local operators
//!
//! ```text
//! U(θ, α) = cos(θ/2) diag(e^{iα}, e^{−iα}) + sin(θ/2) [[0, 1], [−1, 0]],
//! ```
//!
//! and the referee measures both qubits in the computational basis, paying
//! +1/−1 on Bob's outcome (Alice's payoff is +1 for outcomes ·0 and −1 for
//! ·1; zero-sum, so Bob receives the negation). Three public settings make
//! Alice's expected payoff equal the Stokes parameters of ρ:
//!
//! * S1: θ_A = θ_B = π/2, α_A = α_B = 0 → ⟨σ_x⟩,
//! * S2: θ_A = θ_B = π/2, α_A = 0, α_B = π/2 → ⟨σ_y⟩,
//! * S3: θ_A = θ_B = 0 → ⟨σ_z⟩,
//!
//! so a payoff table reconstructs the state. [`reconstruct`] supports exact
//! evaluation and finite sampling with 1/√m error bounds and projection of
//! the estimate back into the Bloch ball.

use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qmath::{
    apply_unitary, c, expectation, tensor, BlochVector, DensityMatrix, Ket, Operator, C,
};
use crate::scheme::PayoffPair;

/// Stokes parameters (S1, S2, S3) = (⟨σ_x⟩, ⟨σ_y⟩, ⟨σ_z⟩); S0 = 1 implied.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StokesVector {
    /// ⟨σ_x⟩.
    pub s1: f64,
    /// ⟨σ_y⟩.
    pub s2: f64,
    /// ⟨σ_z⟩.
    pub s3: f64,
}

impl StokesVector {
    /// Validates |S| ≤ 1 (within tolerance).
    ///
    /// # Errors
    ///
    /// [`Error::Range`] when the vector leaves the Bloch ball,
    /// [`Error::NonFinite`] for NaN/∞ components.
    pub fn new(s1: f64, s2: f64, s3: f64) -> Result<Self> {
        let b = BlochVector::new(s1, s2, s3)?;
        Ok(Self {
            s1: b.x,
            s2: b.y,
            s3: b.z,
        })
    }

    /// Euclidean length (purity radius).
    pub fn norm(&self) -> f64 {
        (self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3).sqrt()
    }
}

/// Stokes parameters of a single-qubit density matrix.
///
/// # Errors
///
/// [`Error::Dimension`] unless ρ is 2×2.
pub fn stokes_from_density(rho: &DensityMatrix) -> Result<StokesVector> {
    let b = BlochVector::from_density(rho)?;
    Ok(StokesVector {
        s1: b.x,
        s2: b.y,
        s3: b.z,
    })
}

/// The density matrix (1 + S·σ)/2 of a Stokes vector.
///
/// # Errors
///
/// [`Error::Range`] when |S| > 1.
pub fn density_from_stokes(s: &StokesVector) -> Result<DensityMatrix> {
    Ok(BlochVector::new(s.s1, s.s2, s.s3)?.to_density())
}

/// The three public measurement settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    /// θ = π/2, α_B = 0: reads ⟨σ_x⟩.
    S1,
    /// θ = π/2, α_B = π/2: reads ⟨σ_y⟩.
    S2,
    /// θ = 0: reads ⟨σ_z⟩.
    S3,
}

impl Setting {
    /// All settings in Stokes order.
    pub const ALL: [Setting; 3] = [Setting::S1, Setting::S2, Setting::S3];

    /// (θ_A, α_A, θ_B, α_B) of the setting.
    pub fn angles(&self) -> (f64, f64, f64, f64) {
        match self {
            Setting::S1 => (FRAC_PI_2, 0.0, FRAC_PI_2, 0.0),
            Setting::S2 => (FRAC_PI_2, 0.0, FRAC_PI_2, FRAC_PI_2),
            Setting::S3 => (0.0, 0.0, 0.0, 0.0),
        }
    }
}

/// The tomography operator U(θ, α) (see module docs).
fn tomography_unitary(theta: f64, alpha: f64) -> Operator {
    let (ch, sh) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    Operator::from_rows2([
        [C::from_polar(ch, alpha), c(sh, 0.0)],
        [c(-sh, 0.0), C::from_polar(ch, -alpha)],
    ])
}

/// Expected payoffs of one setting on the unknown state, via the density
/// pipeline. Alice's payoff equals the Stokes parameter the setting reads;
/// Bob's is its negation.
///
/// # Errors
///
/// [`Error::Dimension`] unless ρ is 2×2.
pub fn tomographic_payoff(setting: Setting, rho: &DensityMatrix) -> Result<PayoffPair> {
    if rho.dim() != 2 {
        return Err(Error::Dimension("tomography expects a single qubit".into()));
    }
    let ancilla = DensityMatrix::from_ket(&Ket::new(vec![c(1.0, 0.0), c(0.0, 0.0)])?);
    let joint = DensityMatrix::new(tensor(ancilla.operator(), rho.operator()))?;
    let (ta, aa, tb, ab) = setting.angles();
    let u = tensor(&tomography_unitary(ta, aa), &tomography_unitary(tb, ab));
    let evolved = apply_unitary(&u, &joint)?;
    // Payoff observable: +1 on Bob outcome 0, −1 on Bob outcome 1.
    let mut observable = Operator::identity(4).scale(c(0.0, 0.0));
    for m in 0..2 {
        for n in 0..2 {
            let sign = if n == 0 { 1.0 } else { -1.0 };
            let mut basis = vec![c(0.0, 0.0); 4];
            basis[2 * m + n] = c(1.0, 0.0);
            observable = observable.add(&Ket::new(basis)?.projector().scale(c(sign, 0.0)))?;
        }
    }
    let a = expectation(&observable, &evolved)?;
    Ok(PayoffPair { a, b: -a })
}

/// How [`reconstruct`] evaluates the three payoffs.
#[derive(Clone, Copy, Debug)]
pub enum SampleMode {
    /// Exact expectations (zero error bounds).
    Exact,
    /// `shots` ±1 samples per setting, with independent per-setting
    /// ChaCha streams derived from (seed, setting index).
    Sampled {
        /// ±1 samples per setting, ≥ 1.
        shots: u64,
        /// Master seed.
        seed: u64,
    },
}

/// Result of a reconstruction: the estimate and its per-setting error bounds.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    /// Estimated Stokes vector (projected into the Bloch ball).
    pub stokes: StokesVector,
    /// The reconstructed density matrix.
    pub density: DensityMatrix,
    /// 1/√shots error bounds per Stokes component (0 in exact mode).
    pub errors: [f64; 3],
}

/// Reconstructs a qubit from the three payoff settings.
///
/// In sampled mode each setting draws `shots` ±1 outcomes with success
/// probability (1 + S_k)/2 from its own RNG stream, so the settings may be
/// measured in any order without changing the result. If the raw estimate
/// leaves the Bloch ball it is radially projected back onto the surface.
///
/// # Errors
///
/// [`Error::Dimension`] unless ρ is 2×2, [`Error::EmptySample`] for
/// `shots` = 0.
pub fn reconstruct(rho: &DensityMatrix, mode: SampleMode) -> Result<Reconstruction> {
    let mut est = [0.0_f64; 3];
    let mut errors = [0.0_f64; 3];
    for (k, setting) in Setting::ALL.iter().enumerate() {
        let exact = tomographic_payoff(*setting, rho)?.a;
        match mode {
            SampleMode::Exact => est[k] = exact,
            SampleMode::Sampled { shots, seed } => {
                if shots == 0 {
                    return Err(Error::EmptySample("reconstruct needs shots ≥ 1"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(k as u64);
                let p_plus = ((1.0 + exact) / 2.0).clamp(0.0, 1.0);
                let mut sum = 0i64;
                for _ in 0..shots {
                    sum += if rng.gen_bool(p_plus) { 1 } else { -1 };
                }
                est[k] = sum as f64 / shots as f64;
                errors[k] = 1.0 / (shots as f64).sqrt();
            }
        }
    }
    let norm = (est[0] * est[0] + est[1] * est[1] + est[2] * est[2]).sqrt();
    if norm > 1.0 {
        for v in &mut est {
            *v /= norm;
        }
    }
    let stokes = StokesVector::new(est[0], est[1], est[2])?;
    let density = density_from_stokes(&stokes)?;
    Ok(Reconstruction {
        stokes,
        density,
        errors,
    })
}
