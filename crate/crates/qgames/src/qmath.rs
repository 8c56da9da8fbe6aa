//! Dense complex linear algebra for one- and two-qubit systems.
//!
//! Everything downstream works with 2×2 and 4×4 matrices over `Complex64`,
//! so this module keeps a deliberately small surface: a validated
//! [`Operator`], a validated [`Ket`], a validated [`DensityMatrix`], Kraus
//! application and the partial trace. Validation thresholds follow the
//! crate-wide tolerances:
//!
//! * [`TAU_MAT`] — entrywise matrix comparisons (unitarity, Hermiticity),
//! * [`TAU_NORM`] — trace / norm checks,
//! * [`TAU_PSD`] — eigenvalue floor for positive semidefiniteness.
//!
//! Positivity is checked by embedding the Hermitian matrix `H = X + iY`
//! into the real symmetric matrix `[[X, −Y], [Y, X]]` (whose spectrum is
//! that of `H`, doubled) and running a cyclic Jacobi sweep — ample for
//! matrices of dimension ≤ 4 and free of external solver dependencies.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Shorthand for the scalar type used throughout the crate.
pub type C = Complex64;

/// Entrywise tolerance for matrix identities (unitarity, Hermiticity).
pub const TAU_MAT: f64 = 1e-9;
/// Tolerance for norms and traces.
pub const TAU_NORM: f64 = 1e-9;
/// Eigenvalue floor for positive-semidefiniteness checks.
pub const TAU_PSD: f64 = 1e-8;

/// Builds a complex scalar from its real and imaginary parts.
#[inline]
pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// A dense square complex matrix in row-major order.
///
/// The constructor rejects non-finite entries; all structural properties
/// (unitarity, Hermiticity, positivity) are checked by the operations that
/// require them rather than by the type itself.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    dim: usize,
    entries: Vec<C>,
}

impl Operator {
    /// Creates an operator from row-major entries.
    ///
    /// # Errors
    ///
    /// [`Error::Dimension`] if `entries.len() != dim * dim`, and
    /// [`Error::NonFinite`] if any entry is NaN or infinite.
    pub fn new(dim: usize, entries: Vec<C>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension(format!(
                "expected {}×{} = {} entries, got {}",
                dim,
                dim,
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("operator entry"));
        }
        Ok(Self { dim, entries })
    }

    /// Creates a 2×2 operator from nested rows.
    pub fn from_rows2(rows: [[C; 2]; 2]) -> Self {
        Self {
            dim: 2,
            entries: vec![rows[0][0], rows[0][1], rows[1][0], rows[1][1]],
        }
    }

    /// The identity operator of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![C::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = C::new(1.0, 0.0);
        }
        Self { dim, entries }
    }

    /// Matrix dimension (the matrix is `dim × dim`).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C {
        self.entries[i * self.dim + j]
    }

    /// Matrix product `self · rhs`.
    ///
    /// # Errors
    ///
    /// [`Error::Dimension`] when the dimensions differ.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::Dimension(format!(
                "cannot multiply {}×{0} by {1}×{1}",
                self.dim, rhs.dim
            )));
        }
        let n = self.dim;
        let mut entries = vec![C::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(Self { dim: n, entries })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![C::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j).conj();
            }
        }
        Self { dim: n, entries }
    }

    /// Entrywise sum.
    ///
    /// # Errors
    ///
    /// [`Error::Dimension`] when the dimensions differ.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::Dimension("operator sum of unequal dimensions".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    /// Scalar multiple `z · self`.
    pub fn scale(&self, z: C) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * z).collect(),
        }
    }

    /// Matrix trace.
    pub fn trace(&self) -> C {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise absolute difference to `rhs` (∞ if shapes differ).
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        if self.dim != rhs.dim {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from Hermiticity, max |M − M†|.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                r = r.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        r
    }

    /// Checks `U U† = 1` entrywise within [`TAU_MAT`].
    ///
    /// # Errors
    ///
    /// [`Error::Unitarity`] carrying the worst residual.
    pub fn check_unitary(&self) -> Result<()> {
        let prod = self.mul(&self.adjoint())?;
        let residual = prod.max_abs_diff(&Self::identity(self.dim));
        if residual > TAU_MAT {
            return Err(Error::Unitarity { residual });
        }
        Ok(())
    }

    /// Eigenvalues of a Hermitian operator, ascending.
    ///
    /// Uses the real-symmetric embedding `[[X, −Y], [Y, X]]` of `H = X + iY`
    /// followed by cyclic Jacobi rotations; the embedded spectrum doubles
    /// every eigenvalue, so adjacent pairs of the sorted result are collapsed.
    ///
    /// # Errors
    ///
    /// [`Error::Hermiticity`] if `self` is not Hermitian within [`TAU_MAT`].
    pub fn eigenvalues_hermitian(&self) -> Result<Vec<f64>> {
        let residual = self.hermiticity_residual();
        if residual > TAU_MAT {
            return Err(Error::Hermiticity { residual });
        }
        let n = self.dim;
        let m = 2 * n;
        // Embed: real block X at (0,0) and (n,n); Y at (n,0), −Y at (0,n).
        let mut a = vec![0.0_f64; m * m];
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                a[i * m + j] = z.re;
                a[(i + n) * m + (j + n)] = z.re;
                a[(i + n) * m + j] = z.im;
                a[i * m + (j + n)] = -z.im;
            }
        }
        let mut eigs = jacobi_eigenvalues(&mut a, m);
        eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
        // Doubled spectrum: take every second value.
        Ok(eigs.into_iter().step_by(2).collect())
    }
}

/// Cyclic Jacobi eigenvalue iteration on a real symmetric `n × n` matrix
/// stored row-major in `a`. Converges quadratically; `n ≤ 8` here.
fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Vec<f64> {
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let cos = 1.0 / (t * t + 1.0).sqrt();
                let sin = t * cos;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = cos * akp - sin * akq;
                    a[k * n + q] = sin * akp + cos * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = cos * apk - sin * aqk;
                    a[q * n + k] = sin * apk + cos * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// A normalized pure state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    amps: Vec<C>,
}

impl Ket {
    /// Creates a state vector, enforcing unit norm within [`TAU_NORM`].
    ///
    /// # Errors
    ///
    /// [`Error::NonFinite`] for NaN/∞ amplitudes and [`Error::Invariant`]
    /// when the norm deviates from one.
    pub fn new(amps: Vec<C>) -> Result<Self> {
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("ket amplitude"));
        }
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq.sqrt() - 1.0).abs() > TAU_NORM {
            return Err(Error::Invariant(format!(
                "ket norm {} differs from 1",
                norm_sq.sqrt()
            )));
        }
        Ok(Self { amps })
    }

    /// Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    /// Amplitude of basis state `i`.
    pub fn amp(&self, i: usize) -> C {
        self.amps[i]
    }

    /// Tensor product `self ⊗ rhs`.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut amps = Vec::with_capacity(self.dim() * rhs.dim());
        for a in &self.amps {
            for b in &rhs.amps {
                amps.push(a * b);
            }
        }
        Self { amps }
    }

    /// Inner product ⟨self|rhs⟩.
    pub fn inner(&self, rhs: &Self) -> C {
        self.amps
            .iter()
            .zip(&rhs.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Rank-one projector |ψ⟩⟨ψ|.
    pub fn projector(&self) -> Operator {
        let n = self.dim();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.amps[i] * self.amps[j].conj());
            }
        }
        Operator { dim: n, entries }
    }
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    op: Operator,
}

impl DensityMatrix {
    /// Validates and wraps an operator as a density matrix.
    ///
    /// # Errors
    ///
    /// [`Error::Hermiticity`] (within [`TAU_MAT`]), or [`Error::Density`]
    /// when the trace differs from one by more than [`TAU_NORM`] or an
    /// eigenvalue drops below −[`TAU_PSD`].
    pub fn new(op: Operator) -> Result<Self> {
        let residual = op.hermiticity_residual();
        if residual > TAU_MAT {
            return Err(Error::Hermiticity { residual });
        }
        let tr = op.trace();
        if (tr.re - 1.0).abs() > TAU_NORM || tr.im.abs() > TAU_NORM {
            return Err(Error::Density(format!("trace = {tr} instead of 1")));
        }
        let min_eig = op
            .eigenvalues_hermitian()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -TAU_PSD {
            return Err(Error::Density(format!("negative eigenvalue {min_eig:.3e}")));
        }
        Ok(Self { op })
    }

    /// The pure state |ψ⟩⟨ψ|.
    pub fn from_ket(psi: &Ket) -> Self {
        // A projector of a validated unit ket always passes validation.
        Self {
            op: psi.projector(),
        }
    }

    /// Underlying operator.
    pub fn operator(&self) -> &Operator {
        &self.op
    }

    /// Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.op.dim()
    }
}

/// Tensor (Kronecker) product of two operators.
pub fn tensor(a: &Operator, b: &Operator) -> Operator {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut entries = vec![C::new(0.0, 0.0); n * n];
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            for k in 0..nb {
                for l in 0..nb {
                    entries[(i * nb + k) * n + (j * nb + l)] = aij * b.get(k, l);
                }
            }
        }
    }
    Operator { dim: n, entries }
}

/// Conjugates a density matrix by a unitary: ρ ↦ U ρ U†.
///
/// # Errors
///
/// [`Error::Unitarity`] if `u` fails the [`TAU_MAT`] unitarity check, and
/// [`Error::Dimension`] on shape mismatch.
pub fn apply_unitary(u: &Operator, rho: &DensityMatrix) -> Result<DensityMatrix> {
    u.check_unitary()?;
    let op = u.mul(rho.operator())?.mul(&u.adjoint())?;
    // Unitary conjugation preserves all density-matrix properties; skip
    // the (eigenvalue) re-validation and keep exactly what the algebra gave.
    Ok(DensityMatrix { op })
}

/// A validated set of Kraus operators resolving the identity.
#[derive(Clone, Debug)]
pub struct KrausSet {
    ops: Vec<Operator>,
}

impl KrausSet {
    /// Validates completeness ΣAᵢ†Aᵢ = 1 within [`TAU_MAT`].
    ///
    /// # Errors
    ///
    /// [`Error::Completeness`] with the worst entry residual,
    /// [`Error::Dimension`] for mixed dimensions or an empty set.
    pub fn new(ops: Vec<Operator>) -> Result<Self> {
        let dim = match ops.first() {
            Some(op) => op.dim(),
            None => return Err(Error::Dimension("empty Kraus set".into())),
        };
        let mut sum = Operator::identity(dim).scale(C::new(0.0, 0.0));
        for op in &ops {
            if op.dim() != dim {
                return Err(Error::Dimension("mixed dimensions in Kraus set".into()));
            }
            sum = sum.add(&op.adjoint().mul(op)?)?;
        }
        let residual = sum.max_abs_diff(&Operator::identity(dim));
        if residual > TAU_MAT {
            return Err(Error::Completeness { residual });
        }
        Ok(Self { ops })
    }

    /// The Kraus operators.
    pub fn operators(&self) -> &[Operator] {
        &self.ops
    }

    /// Applies the channel ρ ↦ Σ Aᵢ ρ Aᵢ†.
    ///
    /// # Errors
    ///
    /// [`Error::Dimension`] when the channel and state dimensions differ.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let dim = rho.dim();
        let mut out = Operator::identity(dim).scale(C::new(0.0, 0.0));
        for a in &self.ops {
            out = out.add(&a.mul(rho.operator())?.mul(&a.adjoint())?)?;
        }
        // A complete Kraus set maps density matrices to density matrices;
        // numerical drift is bounded by the completeness tolerance.
        Ok(DensityMatrix { op: out })
    }
}

/// Real expectation value Tr(M ρ) of a Hermitian observable.
///
/// # Errors
///
/// [`Error::Hermiticity`] when `m` is not Hermitian within [`TAU_MAT`],
/// [`Error::ImaginaryResidue`] when the trace retains an imaginary part
/// above [`TAU_NORM`], and [`Error::Dimension`] on shape mismatch.
pub fn expectation(m: &Operator, rho: &DensityMatrix) -> Result<f64> {
    let residual = m.hermiticity_residual();
    if residual > TAU_MAT {
        return Err(Error::Hermiticity { residual });
    }
    let tr = m.mul(rho.operator())?.trace();
    if tr.im.abs() > TAU_NORM {
        return Err(Error::ImaginaryResidue { residual: tr.im.abs() });
    }
    Ok(tr.re)
}

/// Which tensor factor [`partial_trace`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Keep {
    /// Keep the first (left) qubit, trace out the second.
    First,
    /// Keep the second (right) qubit, trace out the first.
    Second,
}

/// Partial trace of a two-qubit density matrix down to one qubit.
///
/// # Errors
///
/// [`Error::Dimension`] unless `rho` is 4×4.
pub fn partial_trace(rho: &DensityMatrix, keep: Keep) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::Dimension(format!(
            "partial trace expects a 4×4 density matrix, got {}×{0}",
            rho.dim()
        )));
    }
    let full = rho.operator();
    let mut entries = vec![C::new(0.0, 0.0); 4];
    for i in 0..2 {
        for j in 0..2 {
            let mut s = C::new(0.0, 0.0);
            for k in 0..2 {
                let (row, col) = match keep {
                    Keep::First => (2 * i + k, 2 * j + k),
                    Keep::Second => (2 * k + i, 2 * k + j),
                };
                s += full.get(row, col);
            }
            entries[2 * i + j] = s;
        }
    }
    Ok(DensityMatrix {
        op: Operator { dim: 2, entries },
    })
}

/// A single-qubit Bloch vector (r_x, r_y, r_z) with |r| ≤ 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector {
    /// ⟨σ_x⟩ component.
    pub x: f64,
    /// ⟨σ_y⟩ component.
    pub y: f64,
    /// ⟨σ_z⟩ component.
    pub z: f64,
}

impl BlochVector {
    /// Creates a Bloch vector, enforcing |r| ≤ 1 + [`TAU_NORM`].
    ///
    /// # Errors
    ///
    /// [`Error::Range`] when the vector leaves the Bloch ball, and
    /// [`Error::NonFinite`] for NaN/∞ components.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite("Bloch component"));
        }
        let r = (x * x + y * y + z * z).sqrt();
        if r > 1.0 + TAU_NORM {
            return Err(Error::Range {
                name: "|r|",
                value: r,
                range: "[0, 1]",
            });
        }
        Ok(Self { x, y, z })
    }

    /// Euclidean length of the vector.
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// The density matrix ρ = (1 + r·σ)/2.
    pub fn to_density(&self) -> DensityMatrix {
        let op = Operator::from_rows2([
            [c(0.5 * (1.0 + self.z), 0.0), c(0.5 * self.x, -0.5 * self.y)],
            [c(0.5 * self.x, 0.5 * self.y), c(0.5 * (1.0 - self.z), 0.0)],
        ]);
        DensityMatrix { op }
    }

    /// Reads the Bloch vector of a single-qubit density matrix.
    ///
    /// # Errors
    ///
    /// [`Error::Dimension`] unless `rho` is 2×2.
    pub fn from_density(rho: &DensityMatrix) -> Result<Self> {
        if rho.dim() != 2 {
            return Err(Error::Dimension("Bloch vector needs a 2×2 density".into()));
        }
        let r = rho.operator();
        let x = 2.0 * r.get(0, 1).re;
        let y = -2.0 * r.get(0, 1).im;
        let z = (r.get(0, 0) - r.get(1, 1)).re;
        // Validation of rho guarantees |r| ≤ 1 up to tolerance.
        Ok(Self { x, y, z })
    }
}

/// The pure qubit state cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩ as a density matrix.
///
/// # Errors
///
/// [`Error::Range`] when θ ∉ [0, π].
pub fn pure_qubit(theta: f64, phi: f64) -> Result<DensityMatrix> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::Range {
            name: "theta",
            value: theta,
            range: "[0, π]",
        });
    }
    let ket = Ket::new(vec![
        c((theta / 2.0).cos(), 0.0),
        C::from_polar((theta / 2.0).sin(), phi),
    ])?;
    Ok(DensityMatrix::from_ket(&ket))
}
