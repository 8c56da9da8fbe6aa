//! Quantized 2×2 games under a two-dial referee.
//!
//! The crate implements a generalized quantization scheme in which a
//! referee controls two entanglement dials — γ for the initial state and δ
//! for the measurement basis — and the players act with three-parameter
//! local unitaries. Special dial settings recover the classical mixed
//! extension (γ = δ = 0), the Marinatto–Weber scheme (δ = 0), and the
//! Eisert scheme (γ = δ = π/2).
//!
//! * [`qmath`] — validated dense complex linear algebra for 1–2 qubits.
//! * [`scheme`] — the quantization scheme: states, strategies, projectors,
//!   the density-matrix payoff oracle and its closed forms.
//! * [`games`] — canonical bimatrix fixtures, ε-Nash grid search, the
//!   Battle-of-the-Sexes state analysis and named payoff results.
//! * [`channels`] — correlated dephasing on the two transmission legs.
//! * [`qkd`] — key distribution with payoff-cell decoding and
//!   eavesdropper detection.
//! * [`tomography`] — single-qubit state estimation from game payoffs.
//!
//! Every closed form is tested against the explicit density-matrix
//! pipeline; the `qgames` binary exposes parameter sweeps, equilibrium
//! search, key-distribution sessions and tomography from the command line.

#![warn(missing_docs)]

pub mod channels;
pub mod error;
pub mod games;
pub mod qkd;
pub mod qmath;
pub mod scheme;
pub mod tomography;

pub use error::{Error, Result};
