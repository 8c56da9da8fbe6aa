//! Key distribution over the maximally entangled game (γ = δ = π/2).
//!
//! Alice encodes each key symbol as one of four strategy triples; Bob
//! responds with a random classical operator θ_B ∈ {0, π}; the referee
//! announces per-copy outcomes, from which Bob forms the empirical payoff
//! pair and decodes by nearest cell of the publicly known decode bi-matrix.
//! An eavesdropper probing Alice's qubit is a phase-damping channel
//!
//! ```text
//! {√p |0⟩⟨0|,  √p |1⟩⟨1|,  √(1−p) 1}
//! ```
//!
//! acting after her move; it shifts every decode cell by damping the
//! measurement-basis interference with μ_p = 1 − p, which Bob detects as a
//! statistically significant deviation from the clean cells.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qmath::{apply_unitary, c, tensor, DensityMatrix, KrausSet, Operator};
use crate::scheme::{
    generalized_payoff, initial_state, outcome_distribution, strategy_unitary, SchemeConfig,
    StrategyParams,
};

/// Minimum pairwise cell separation below which decoding is refused.
pub const MIN_CELL_GAP: f64 = 1e-6;

/// Default detection threshold in units of the per-cell standard error.
pub const DEFAULT_THRESHOLD: f64 = 4.0;

/// The four key symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    /// Identity strategy (0, 0, 0).
    M1,
    /// (π/3, π/2, π/2).
    M2,
    /// (π/2, π/2, π/2).
    M3,
    /// Full flip (π, π, π).
    M4,
}

impl Symbol {
    /// All symbols in codebook order.
    pub const ALL: [Symbol; 4] = [Symbol::M1, Symbol::M2, Symbol::M3, Symbol::M4];

    /// Codebook index 0..4.
    pub fn index(&self) -> usize {
        match self {
            Symbol::M1 => 0,
            Symbol::M2 => 1,
            Symbol::M3 => 2,
            Symbol::M4 => 3,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.index() + 1)
    }
}

/// Bob's public classical operator for one transmission.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BobOp {
    /// θ_B = 0 (identity).
    Zero,
    /// θ_B = π (flip).
    Pi,
}

impl BobOp {
    /// Column index in the decode bi-matrix.
    pub fn column(&self) -> usize {
        match self {
            BobOp::Zero => 0,
            BobOp::Pi => 1,
        }
    }

    /// The strategy (θ_B, 0, 0).
    pub fn strategy(&self) -> StrategyParams {
        let theta = match self {
            BobOp::Zero => 0.0,
            BobOp::Pi => PI,
        };
        StrategyParams::classical(theta).expect("θ_B ∈ {0, π}")
    }
}

impl fmt::Display for BobOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BobOp::Zero => write!(f, "0"),
            BobOp::Pi => write!(f, "pi"),
        }
    }
}

/// Alice's symbol-to-strategy codebook.
#[derive(Clone, Copy, Debug)]
pub struct SymbolCodebook {
    entries: [StrategyParams; 4],
}

impl SymbolCodebook {
    /// The standard codebook (0,0,0), (π/3,π/2,π/2), (π/2,π/2,π/2), (π,π,π).
    pub fn standard() -> Self {
        let mk = |t: f64, f: f64, p: f64| StrategyParams::new(t, f, p).expect("in range");
        Self {
            entries: [
                mk(0.0, 0.0, 0.0),
                mk(FRAC_PI_3, FRAC_PI_2, FRAC_PI_2),
                mk(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2),
                mk(PI, PI, PI),
            ],
        }
    }

    /// Strategy triple of a symbol.
    pub fn strategy(&self, s: Symbol) -> &StrategyParams {
        &self.entries[s.index()]
    }
}

/// The public payoff coding used to fold outcome counts into a cell
/// estimate — the prisoners'-dilemma entries.
#[derive(Clone, Copy, Debug)]
pub struct CodingMatrix {
    /// Alice-component values for outcomes 00, 01, 10, 11.
    pub a: [f64; 4],
    /// Bob-component values for outcomes 00, 01, 10, 11.
    pub b: [f64; 4],
}

impl CodingMatrix {
    /// The (3, 0, 5, 1)/(3, 5, 0, 1) coding.
    pub fn standard() -> Self {
        Self {
            a: [3.0, 0.0, 5.0, 1.0],
            b: [3.0, 5.0, 0.0, 1.0],
        }
    }
}

/// A decode cell: the expected (Alice, Bob)-component pair.
pub type Cell = (f64, f64);

/// The 4 × 2 decode bi-matrix (symbol × Bob column) plus the minimum
/// pairwise in-column cell gap.
#[derive(Clone, Copy, Debug)]
pub struct DecodeMatrix {
    cells: [[Cell; 2]; 4],
    min_gap: f64,
}

impl DecodeMatrix {
    /// Cell for a symbol under a Bob column.
    pub fn cell(&self, s: Symbol, op: BobOp) -> Cell {
        self.cells[s.index()][op.column()]
    }

    /// Smallest Euclidean distance between two cells of the same column.
    pub fn min_gap(&self) -> f64 {
        self.min_gap
    }
}

/// Closed-form decode bi-matrix under eavesdropping strength `eve_p`.
///
/// Each cell is the generalized payoff at γ = δ = π/2 with measurement-basis
/// coherence damped by μ_p = 1 − p (the eavesdropper acts after Alice's
/// move, so the initial-state term survives intact). Tests cross-check
/// every cell against the Kraus pipeline and against hand-derived
/// bi-matrices at p ∈ {0, 1/4, 1/2, 1}.
///
/// # Errors
///
/// [`Error::Range`] when `eve_p` ∉ [0, 1]; [`Error::Overlap`] when two
/// same-column cells fall within [`MIN_CELL_GAP`].
pub fn decode_matrix(
    cb: &SymbolCodebook,
    cm: &CodingMatrix,
    eve_p: f64,
) -> Result<DecodeMatrix> {
    if !(0.0..=1.0).contains(&eve_p) {
        return Err(Error::Range {
            name: "eve_p",
            value: eve_p,
            range: "[0, 1]",
        });
    }
    let mu2 = 1.0 - eve_p;
    let mut cells = [[(0.0, 0.0); 2]; 4];
    for sym in Symbol::ALL {
        for op in [BobOp::Zero, BobOp::Pi] {
            let (sa, sb) = (cb.strategy(sym), op.strategy());
            let a = generalized_payoff(FRAC_PI_2, FRAC_PI_2, 1.0, mu2, sa, &sb, &cm.a);
            let b = generalized_payoff(FRAC_PI_2, FRAC_PI_2, 1.0, mu2, sa, &sb, &cm.b);
            cells[sym.index()][op.column()] = (a, b);
        }
    }
    let mut min_gap = f64::INFINITY;
    for col in 0..2 {
        for (i, row_i) in cells.iter().enumerate() {
            let (xi, yi) = row_i[col];
            for row_j in cells.iter().skip(i + 1) {
                let (xj, yj) = row_j[col];
                min_gap = min_gap.min(((xi - xj).powi(2) + (yi - yj).powi(2)).sqrt());
            }
        }
    }
    if min_gap < MIN_CELL_GAP {
        return Err(Error::Overlap {
            gap: min_gap,
            floor: MIN_CELL_GAP,
        });
    }
    Ok(DecodeMatrix { cells, min_gap })
}

/// The eavesdropper's Kraus set on Alice's qubit, extended to both qubits.
///
/// Operators √p |0⟩⟨0| ⊗ 1, √p |1⟩⟨1| ⊗ 1, and √(1−p) 1 ⊗ 1 model a
/// measure-with-probability-p attack in the computational basis, which
/// dephases the transmitted qubit with coherence survival 1 − p.
///
/// # Errors
///
/// [`Error::Range`] when p ∉ [0, 1].
pub fn eve_kraus(p: f64) -> Result<KrausSet> {
    let id = Operator::identity(2);
    let proj0 = Operator::from_rows2([
        [c(p.sqrt(), 0.0), c(0.0, 0.0)],
        [c(0.0, 0.0), c(0.0, 0.0)],
    ]);
    let proj1 = Operator::from_rows2([
        [c(0.0, 0.0), c(0.0, 0.0)],
        [c(0.0, 0.0), c(p.sqrt(), 0.0)],
    ]);
    let free = Operator::identity(2).scale(c((1.0 - p).sqrt(), 0.0));
    KrausSet::new(vec![
        tensor(&proj0, &id),
        tensor(&proj1, &id),
        tensor(&free, &id),
    ])
}

/// Exact outcome distribution of one transmission.
///
/// # Errors
///
/// [`Error::Range`] when `eve_p` ∉ [0, 1].
pub fn transmission_distribution(
    strategy: &StrategyParams,
    bob: BobOp,
    eve_p: f64,
) -> Result<[f64; 4]> {
    if !(0.0..=1.0).contains(&eve_p) {
        return Err(Error::Range {
            name: "eve_p",
            value: eve_p,
            range: "[0, 1]",
        });
    }
    let cfg = SchemeConfig::maximal();
    let mut rho = DensityMatrix::from_ket(&initial_state(&cfg));
    // Alice's move, then the eavesdropper, then Bob's move (the latter two
    // commute — they act on different qubits).
    let u_a = tensor(&strategy_unitary(strategy), &Operator::identity(2));
    rho = apply_unitary(&u_a, &rho)?;
    if eve_p > 0.0 {
        rho = eve_kraus(eve_p)?.apply(&rho)?;
    }
    let u_b = tensor(&Operator::identity(2), &strategy_unitary(&bob.strategy()));
    rho = apply_unitary(&u_b, &rho)?;
    outcome_distribution(&rho, FRAC_PI_2)
}

/// Samples `n` measurement outcomes of one transmission.
///
/// # Errors
///
/// [`Error::Range`] when `eve_p` ∉ [0, 1], [`Error::EmptySample`] when
/// n = 0.
pub fn transmit_symbol(
    cb: &SymbolCodebook,
    symbol: Symbol,
    bob: BobOp,
    eve_p: f64,
    n: u64,
    rng: &mut impl Rng,
) -> Result<[u64; 4]> {
    if n == 0 {
        return Err(Error::EmptySample("transmit_symbol needs n ≥ 1"));
    }
    let q = transmission_distribution(cb.strategy(symbol), bob, eve_p)?;
    let mut counts = [0_u64; 4];
    for _ in 0..n {
        let draw: f64 = rng.gen();
        let mut acc = 0.0;
        let mut outcome = 3;
        for (k, &prob) in q.iter().enumerate() {
            acc += prob;
            if draw < acc {
                outcome = k;
                break;
            }
        }
        counts[outcome] += 1;
    }
    Ok(counts)
}

/// Empirical cell estimate from outcome counts.
///
/// # Errors
///
/// [`Error::EmptySample`] when the counts sum to zero.
pub fn estimate_cell(counts: &[u64; 4], cm: &CodingMatrix) -> Result<Cell> {
    let n: u64 = counts.iter().sum();
    if n == 0 {
        return Err(Error::EmptySample("estimate_cell needs at least one count"));
    }
    let n = n as f64;
    let mut a = 0.0;
    let mut b = 0.0;
    for ((&cnt, &va), &vb) in counts.iter().zip(&cm.a).zip(&cm.b) {
        a += cnt as f64 * va;
        b += cnt as f64 * vb;
    }
    Ok((a / n, b / n))
}

/// Per-component standard error of the cell estimate for an exact
/// per-copy distribution `q` and `n` copies.
pub fn cell_sigma(q: &[f64; 4], cm: &CodingMatrix, n: u64) -> (f64, f64) {
    let var = |vals: &[f64; 4]| -> f64 {
        let mean: f64 = (0..4).map(|k| q[k] * vals[k]).sum();
        let second: f64 = (0..4).map(|k| q[k] * vals[k] * vals[k]).sum();
        (second - mean * mean).max(0.0)
    };
    let n = n as f64;
    ((var(&cm.a) / n).sqrt(), (var(&cm.b) / n).sqrt())
}

/// Mean and standard errors of the interception statistic: each fully
/// intercepted copy contributes the cell pair (3, 3) or (5, 0) with
/// probability 1/2 (outcomes 00 and 10 of the coding matrix).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterceptStats {
    /// Expected estimate, (4, 3/2) for the standard coding.
    pub mean: Cell,
    /// Standard errors of the two components at sample size n.
    pub sigma: Cell,
}

/// Statistics of the per-copy full-interception model.
///
/// # Errors
///
/// [`Error::EmptySample`] when n = 0.
pub fn intercept_statistics(cm: &CodingMatrix, n: u64) -> Result<InterceptStats> {
    if n == 0 {
        return Err(Error::EmptySample("intercept_statistics needs n ≥ 1"));
    }
    let mean = (
        (cm.a[0] + cm.a[2]) / 2.0,
        (cm.b[0] + cm.b[2]) / 2.0,
    );
    let root_n = (n as f64).sqrt();
    let sigma = (
        (cm.a[0] - cm.a[2]).abs() / 2.0 / root_n,
        (cm.b[0] - cm.b[2]).abs() / 2.0 / root_n,
    );
    Ok(InterceptStats { mean, sigma })
}

/// One Monte-Carlo draw of the per-copy interception estimate at sample
/// size n; converges to [`intercept_statistics`] as n grows.
///
/// # Errors
///
/// [`Error::EmptySample`] when n = 0.
pub fn intercept_sample(cm: &CodingMatrix, n: u64, rng: &mut impl Rng) -> Result<Cell> {
    if n == 0 {
        return Err(Error::EmptySample("intercept_sample needs n ≥ 1"));
    }
    let mut a = 0.0;
    let mut b = 0.0;
    for _ in 0..n {
        if rng.gen_bool(0.5) {
            a += cm.a[0];
            b += cm.b[0];
        } else {
            a += cm.a[2];
            b += cm.b[2];
        }
    }
    Ok((a / n as f64, b / n as f64))
}

/// Session parameters.
#[derive(Clone, Copy, Debug)]
pub struct SessionConfig {
    /// Copies transmitted per key symbol.
    pub shots_per_symbol: u64,
    /// Master seed; symbol i uses the ChaCha stream (seed, i).
    pub seed: u64,
    /// Detection threshold in per-cell standard errors.
    pub threshold: f64,
}

impl SessionConfig {
    /// n copies, a seed, and the default 4σ threshold.
    pub fn new(shots_per_symbol: u64, seed: u64) -> Self {
        Self {
            shots_per_symbol,
            seed,
            threshold: DEFAULT_THRESHOLD,
        }
    }
}

/// Per-symbol session record.
#[derive(Clone, Copy, Debug)]
pub struct SymbolRecord {
    /// The symbol Alice sent.
    pub sent: Symbol,
    /// Bob's public operator.
    pub bob: BobOp,
    /// Outcome counts (00, 01, 10, 11).
    pub counts: [u64; 4],
    /// Empirical cell estimate.
    pub est: Cell,
    /// Decoded symbol; `None` is the ambiguity symbol ⊥.
    pub decoded: Option<Symbol>,
    /// Whether the deviation from the nearest clean cell exceeded the
    /// detection threshold.
    pub detected: bool,
}

impl SymbolRecord {
    /// Transcript line: `symbol, bob_op, [counts], est_a, est_b, decoded, detected`.
    pub fn to_line(&self) -> String {
        let decoded = match self.decoded {
            Some(s) => s.to_string(),
            None => "⊥".to_string(),
        };
        format!(
            "{}, {}, [{} {} {} {}], {:.6}, {:.6}, {}, {}",
            self.sent,
            self.bob,
            self.counts[0],
            self.counts[1],
            self.counts[2],
            self.counts[3],
            self.est.0,
            self.est.1,
            decoded,
            self.detected
        )
    }
}

/// A full session transcript.
#[derive(Clone, Debug)]
pub struct SessionTranscript {
    /// One record per transmitted key symbol, in order.
    pub records: Vec<SymbolRecord>,
}

impl SessionTranscript {
    /// Whether any symbol tripped the eavesdropping detector.
    pub fn detected(&self) -> bool {
        self.records.iter().any(|r| r.detected)
    }

    /// The decoded key (None entries are ⊥).
    pub fn decoded_key(&self) -> Vec<Option<Symbol>> {
        self.records.iter().map(|r| r.decoded).collect()
    }

    /// The transcript serialized one line per symbol.
    pub fn to_lines(&self) -> String {
        self.records
            .iter()
            .map(SymbolRecord::to_line)
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Runs a key-distribution session.
///
/// For each key symbol: a per-symbol ChaCha stream (seed, index) drives
/// Bob's coin and the outcome sampling; the estimate is decoded by nearest
/// clean cell in Bob's column, reported as ⊥ when at least two cells sit
/// within one standard error componentwise, and flagged as eavesdropping
/// when the deviation from the nearest cell exceeds `threshold` standard
/// errors in either component.
///
/// # Errors
///
/// [`Error::Range`] when `eve_p` ∉ [0, 1]; [`Error::EmptySample`] when
/// `shots_per_symbol` = 0; [`Error::Overlap`] if the clean decode matrix
/// degenerates.
pub fn run_session(
    key: &[Symbol],
    cfg: &SessionConfig,
    eve_p: f64,
    cb: &SymbolCodebook,
    cm: &CodingMatrix,
) -> Result<SessionTranscript> {
    let clean = decode_matrix(cb, cm, 0.0)?;
    // Per-cell standard errors of the clean per-copy distributions.
    let mut sigmas = [[(0.0, 0.0); 2]; 4];
    for sym in Symbol::ALL {
        for op in [BobOp::Zero, BobOp::Pi] {
            let q = transmission_distribution(cb.strategy(sym), op, 0.0)?;
            sigmas[sym.index()][op.column()] = cell_sigma(&q, cm, cfg.shots_per_symbol);
        }
    }
    let mut records = Vec::with_capacity(key.len());
    for (i, &sent) in key.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(i as u64);
        let bob = if rng.gen_bool(0.5) {
            BobOp::Zero
        } else {
            BobOp::Pi
        };
        let counts = transmit_symbol(cb, sent, bob, eve_p, cfg.shots_per_symbol, &mut rng)?;
        let est = estimate_cell(&counts, cm)?;

        // Nearest clean cell in Bob's column.
        let mut nearest = Symbol::M1;
        let mut best = f64::INFINITY;
        let mut ambiguous = 0_u32;
        for sym in Symbol::ALL {
            let cell = clean.cell(sym, bob);
            let d = ((est.0 - cell.0).powi(2) + (est.1 - cell.1).powi(2)).sqrt();
            if d < best {
                best = d;
                nearest = sym;
            }
            let (sa, sb_) = sigmas[sym.index()][bob.column()];
            if (est.0 - cell.0).abs() <= sa.max(1e-9) && (est.1 - cell.1).abs() <= sb_.max(1e-9)
            {
                ambiguous += 1;
            }
        }
        let cell = clean.cell(nearest, bob);
        let (sa, sb_) = sigmas[nearest.index()][bob.column()];
        let detected = (est.0 - cell.0).abs() > cfg.threshold * sa + 1e-9
            || (est.1 - cell.1).abs() > cfg.threshold * sb_ + 1e-9;
        let decoded = if ambiguous >= 2 { None } else { Some(nearest) };
        records.push(SymbolRecord {
            sent,
            bob,
            counts,
            est,
            decoded,
            detected,
        });
    }
    Ok(SessionTranscript { records })
}
