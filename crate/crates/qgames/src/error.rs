//! Crate-wide error type.
//!
//! Every fallible constructor and operation returns [`Error`]; the variants
//! carry the numeric residual or offending value so callers can report *why*
//! a matrix failed validation, not just that it did.

use thiserror::Error;

/// Errors produced by state/operator validation and game evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands have incompatible dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix expected to be unitary is not (max |UU† − 1| exceeded tolerance).
    #[error("operator is not unitary (max |UU† − 1| entry = {residual:.3e})")]
    Unitarity {
        /// Worst entry residual.
        residual: f64,
    },

    /// A Kraus set does not resolve the identity (max |ΣAᵢ†Aᵢ − 1| exceeded tolerance).
    #[error("Kraus set incomplete (max |ΣA†A − 1| entry = {residual:.3e})")]
    Completeness {
        /// Worst entry residual.
        residual: f64,
    },

    /// A matrix expected to be Hermitian is not.
    #[error("matrix is not Hermitian (max |M − M†| entry = {residual:.3e})")]
    Hermiticity {
        /// Worst entry residual.
        residual: f64,
    },

    /// A density matrix has trace away from one or a negative eigenvalue.
    #[error("matrix is not a density operator: {0}")]
    Density(String),

    /// The expectation of a Hermitian observable came out with an imaginary part.
    #[error("expectation has imaginary residue {residual:.3e}")]
    ImaginaryResidue {
        /// Magnitude of the imaginary part.
        residual: f64,
    },

    /// A scalar parameter fell outside its documented range.
    #[error("parameter {name} = {value} outside {range}")]
    Range {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
        /// Human-readable admissible range.
        range: &'static str,
    },

    /// A three-parameter strategy was passed to a two-parameter payoff form.
    #[error("two-parameter payoff form requires ψ = 0 (got ψ = {psi})")]
    Mode {
        /// The non-zero flip phase.
        psi: f64,
    },

    /// A structural invariant of the input data does not hold.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// Decode cells are too close to separate reliably.
    #[error("decode cells overlap: minimum pairwise gap {gap:.3e} below floor {floor:.3e}")]
    Overlap {
        /// Smallest pairwise cell distance found.
        gap: f64,
        /// Minimum admissible distance.
        floor: f64,
    },

    /// An estimator was asked to average an empty sample.
    #[error("empty sample: {0}")]
    EmptySample(&'static str),

    /// A NaN or infinity appeared where a finite number was required.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
