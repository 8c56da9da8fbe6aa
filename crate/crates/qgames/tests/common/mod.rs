//! Shared helpers for the integration tests: seeded random samplers and a
//! two-level fidelity.

#![allow(dead_code)]

use qgames::qmath::{BlochVector, DensityMatrix};
use qgames::scheme::{PayoffMatrix, SchemeConfig, StrategyParams};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Deterministic RNG for a test, keyed by an arbitrary label seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform three-parameter strategy: θ ∈ [0, π], φ, ψ ∈ [−π, π].
pub fn random_strategy(rng: &mut impl Rng) -> StrategyParams {
    StrategyParams::new(
        rng.gen_range(0.0..=PI),
        rng.gen_range(-PI..=PI),
        rng.gen_range(-PI..=PI),
    )
    .expect("sampled angles are in range")
}

/// A uniform two-parameter strategy: θ ∈ [0, π], φ ∈ [−π, π], ψ = 0.
pub fn random_two_param(rng: &mut impl Rng) -> StrategyParams {
    StrategyParams::two_param(rng.gen_range(0.0..=PI), rng.gen_range(-PI..=PI))
        .expect("sampled angles are in range")
}

/// A uniform scheme configuration: γ, δ ∈ [0, π/2].
pub fn random_config(rng: &mut impl Rng) -> SchemeConfig {
    SchemeConfig::new(
        rng.gen_range(0.0..=PI / 2.0),
        rng.gen_range(0.0..=PI / 2.0),
    )
    .expect("sampled angles are in range")
}

/// A payoff bi-matrix with entries uniform in [−5, 5].
pub fn random_matrix(rng: &mut impl Rng) -> PayoffMatrix {
    let mut draw = || {
        let mut g = [0.0; 4];
        for v in &mut g {
            *v = rng.gen_range(-5.0..=5.0);
        }
        g
    };
    let a = draw();
    let b = draw();
    PayoffMatrix::new(a, b).expect("finite entries")
}

/// A qubit state uniform over the solid Bloch ball.
pub fn random_qubit_state(rng: &mut impl Rng) -> DensityMatrix {
    loop {
        let x = rng.gen_range(-1.0..=1.0);
        let y = rng.gen_range(-1.0..=1.0);
        let z = rng.gen_range(-1.0..=1.0);
        if x * x + y * y + z * z <= 1.0 {
            return BlochVector::new(x, y, z)
                .expect("inside the ball")
                .to_density();
        }
    }
}

/// Uhlmann fidelity of two qubit states:
/// F = Tr(ρσ) + 2 √(det ρ · det σ).
pub fn qubit_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let det = |d: &DensityMatrix| {
        let m = d.operator();
        (m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)).re
    };
    let prod = rho
        .operator()
        .mul(sigma.operator())
        .expect("matching dimensions");
    let overlap = prod.trace().re;
    (overlap + 2.0 * (det(rho).max(0.0) * det(sigma).max(0.0)).sqrt()).clamp(0.0, 1.0)
}
