//! Command-line front end: parameter sweeps, equilibrium search,
//! key-distribution sessions, and tomography demos.
//!
//! Angles are given in units of π by default (`--gamma 0.5` means π/2);
//! pass `--radians` for raw radians. A `--config` file of `key=value`
//! lines supplies defaults for any long flag; explicit flags win.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use qgames::channels::{noisy_payoff_closed_form, noisy_payoff_numeric, CorrelatedDephasing, NoiseConfig};
use qgames::games::{nash_search_grid, CanonicalGame, SearchGrid};
use qgames::qkd::{
    run_session, CodingMatrix, SessionConfig, Symbol, SymbolCodebook, DEFAULT_THRESHOLD,
};
use qgames::qmath::pure_qubit;
use qgames::scheme::{PayoffMatrix, SchemeConfig, StrategyParams};
use qgames::tomography::{reconstruct, stokes_from_density, SampleMode};

#[derive(Parser)]
#[command(name = "qgames", about = "Quantized 2x2 games: sweeps, equilibria, QKD, tomography")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GameArg {
    Pd,
    Chicken,
    Bos,
    Pennies,
}

impl GameArg {
    fn matrix(self) -> qgames::Result<PayoffMatrix> {
        let game = match self {
            GameArg::Pd => CanonicalGame::PrisonersDilemma,
            GameArg::Chicken => CanonicalGame::Chicken,
            GameArg::Bos => CanonicalGame::bos_default(),
            GameArg::Pennies => CanonicalGame::MatchingPennies,
        };
        game.matrix()
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Parser)]
struct CommonArgs {
    /// Optional key=value config file supplying flag defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Interpret angles as raw radians instead of units of π.
    #[arg(long)]
    radians: bool,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Payoff sweep over a strategy grid, with closed-form/oracle residuals.
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Game fixture.
        #[arg(long, value_enum)]
        game: Option<GameArg>,
        /// Initial-state entanglement γ.
        #[arg(long)]
        gamma: Option<f64>,
        /// Measurement-basis entanglement δ.
        #[arg(long)]
        delta: Option<f64>,
        /// Grid points per strategy parameter.
        #[arg(long)]
        grid: Option<usize>,
        /// Dephasing weight applied to both transmission legs.
        #[arg(long)]
        p: Option<f64>,
        /// Dephasing memory applied to both transmission legs.
        #[arg(long)]
        mu: Option<f64>,
    },
    /// ε-Nash grid search over two-parameter strategies.
    Nash {
        #[command(flatten)]
        common: CommonArgs,
        /// Game fixture.
        #[arg(long, value_enum)]
        game: Option<GameArg>,
        /// Initial-state entanglement γ.
        #[arg(long)]
        gamma: Option<f64>,
        /// Measurement-basis entanglement δ.
        #[arg(long)]
        delta: Option<f64>,
        /// Grid points per strategy parameter.
        #[arg(long)]
        grid: Option<usize>,
        /// Best-response tolerance.
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Run a key-distribution session and print the transcript.
    Qkd {
        #[command(flatten)]
        common: CommonArgs,
        /// Copies transmitted per key symbol.
        #[arg(long)]
        n: Option<u64>,
        /// Eavesdropping strength p ∈ [0, 1].
        #[arg(long)]
        p: Option<f64>,
        /// Master seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Detection threshold in standard errors.
        #[arg(long)]
        threshold: Option<f64>,
        /// Key as comma-separated symbols (m1..m4); random when omitted.
        #[arg(long)]
        key: Option<String>,
        /// Random key length when --key is omitted.
        #[arg(long)]
        key_len: Option<usize>,
    },
    /// Reconstruct a pure qubit cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩ from payoffs.
    Tomo {
        #[command(flatten)]
        common: CommonArgs,
        /// Polar angle θ of the state.
        #[arg(long)]
        theta: Option<f64>,
        /// Azimuth φ of the state.
        #[arg(long)]
        phi: Option<f64>,
        /// ±1 samples per setting; 0 means exact evaluation.
        #[arg(long)]
        shots: Option<u64>,
        /// Master seed for sampling.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load_config(path: &Option<PathBuf>) -> Result<HashMap<String, String>, String> {
    let mut map = HashMap::new();
    if let Some(path) = path {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {} is not key=value", lineno + 1))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    Ok(map)
}

fn merge<T: std::str::FromStr>(
    flag: Option<T>,
    cfg: &HashMap<String, String>,
    key: &str,
    default: T,
) -> Result<T, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match cfg.get(key) {
        Some(raw) => raw
            .parse()
            .map_err(|_| format!("config key {key} has invalid value {raw}")),
        None => Ok(default),
    }
}

/// Converts a user angle to radians (identity under --radians).
fn angle(value: f64, radians: bool) -> f64 {
    if radians {
        value
    } else {
        value * std::f64::consts::PI
    }
}

/// 12-significant-digit float formatting for CSV output.
fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => {
            let mut file =
                fs::File::create(path).map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            file.write_all(text.as_bytes())
                .and_then(|()| file.write_all(b"\n"))
                .map_err(|e| format!("write failed: {e}"))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    theta_a: f64,
    phi_a: f64,
    theta_b: f64,
    phi_b: f64,
    payoff_a: f64,
    payoff_b: f64,
    residual: f64,
}

fn run_sweep(
    common: &CommonArgs,
    game: Option<GameArg>,
    gamma: Option<f64>,
    delta: Option<f64>,
    grid: Option<usize>,
    p: Option<f64>,
    mu: Option<f64>,
) -> Result<(), String> {
    let cfgmap = load_config(&common.config)?;
    let game = merge_game(game, &cfgmap)?;
    let gamma = angle(merge(gamma, &cfgmap, "gamma", 0.5)?, common.radians);
    let delta = angle(merge(delta, &cfgmap, "delta", 0.5)?, common.radians);
    let grid = merge(grid, &cfgmap, "grid", 5_usize)?;
    let p = merge(p, &cfgmap, "p", 0.0)?;
    let mu = merge(mu, &cfgmap, "mu", 0.0)?;
    if grid < 2 {
        return Err("grid must be at least 2".into());
    }
    let pm = game.matrix().map_err(|e| e.to_string())?;
    let cfg = SchemeConfig::new(gamma, delta).map_err(|e| e.to_string())?;
    let noise = if p > 0.0 {
        let ch = CorrelatedDephasing::new(p, mu).map_err(|e| e.to_string())?;
        NoiseConfig {
            leg1: Some(ch),
            leg2: Some(ch),
        }
    } else {
        NoiseConfig::default()
    };

    let thetas: Vec<f64> = (0..grid)
        .map(|i| std::f64::consts::PI * i as f64 / (grid - 1) as f64)
        .collect();
    let phis: Vec<f64> = (0..grid)
        .map(|i| std::f64::consts::FRAC_PI_2 * i as f64 / (grid - 1) as f64)
        .collect();

    let mut rows = Vec::new();
    for &ta in &thetas {
        for &fa in &phis {
            for &tb in &thetas {
                for &fb in &phis {
                    let sa = StrategyParams::two_param(ta, fa).map_err(|e| e.to_string())?;
                    let sb = StrategyParams::two_param(tb, fb).map_err(|e| e.to_string())?;
                    let closed = noisy_payoff_closed_form(&cfg, &sa, &sb, &pm, &noise);
                    let numeric = noisy_payoff_numeric(&cfg, &sa, &sb, &pm, &noise)
                        .map_err(|e| e.to_string())?;
                    let residual = (closed.a - numeric.a)
                        .abs()
                        .max((closed.b - numeric.b).abs());
                    rows.push(SweepRow {
                        theta_a: ta,
                        phi_a: fa,
                        theta_b: tb,
                        phi_b: fb,
                        payoff_a: closed.a,
                        payoff_b: closed.b,
                        residual,
                    });
                }
            }
        }
    }
    let format = common.format.unwrap_or(FormatArg::Csv);
    let text = match format {
        FormatArg::Csv => {
            let mut out =
                String::from("theta_a,phi_a,theta_b,phi_b,payoff_a,payoff_b,residual");
            for r in &rows {
                out.push('\n');
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}",
                    sig12(r.theta_a),
                    sig12(r.phi_a),
                    sig12(r.theta_b),
                    sig12(r.phi_b),
                    sig12(r.payoff_a),
                    sig12(r.payoff_b),
                    sig12(r.residual)
                ));
            }
            out
        }
        FormatArg::Json => serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?,
    };
    emit(common, &text)
}

fn merge_game(flag: Option<GameArg>, cfg: &HashMap<String, String>) -> Result<GameArg, String> {
    if let Some(g) = flag {
        return Ok(g);
    }
    match cfg.get("game").map(String::as_str) {
        None => Ok(GameArg::Pd),
        Some("pd") => Ok(GameArg::Pd),
        Some("chicken") => Ok(GameArg::Chicken),
        Some("bos") => Ok(GameArg::Bos),
        Some("pennies") => Ok(GameArg::Pennies),
        Some(other) => Err(format!("unknown game {other}")),
    }
}

#[derive(Serialize)]
struct NashRow {
    theta_a: f64,
    phi_a: f64,
    theta_b: f64,
    phi_b: f64,
    payoff_a: f64,
    payoff_b: f64,
}

fn run_nash(
    common: &CommonArgs,
    game: Option<GameArg>,
    gamma: Option<f64>,
    delta: Option<f64>,
    grid: Option<usize>,
    eps: Option<f64>,
) -> Result<(), String> {
    let cfgmap = load_config(&common.config)?;
    let game = merge_game(game, &cfgmap)?;
    let gamma = angle(merge(gamma, &cfgmap, "gamma", 0.5)?, common.radians);
    let delta = angle(merge(delta, &cfgmap, "delta", 0.5)?, common.radians);
    let grid = merge(grid, &cfgmap, "grid", 25_usize)?;
    let eps = merge(eps, &cfgmap, "eps", 1e-6)?;
    let pm = game.matrix().map_err(|e| e.to_string())?;
    let cfg = SchemeConfig::new(gamma, delta).map_err(|e| e.to_string())?;
    let profiles = nash_search_grid(&cfg, &pm, &SearchGrid::two_param(grid), eps)
        .map_err(|e| e.to_string())?;
    let rows: Vec<NashRow> = profiles
        .iter()
        .map(|p| NashRow {
            theta_a: p.sa.theta(),
            phi_a: p.sa.phi(),
            theta_b: p.sb.theta(),
            phi_b: p.sb.phi(),
            payoff_a: p.payoffs.a,
            payoff_b: p.payoffs.b,
        })
        .collect();
    let format = common.format.unwrap_or(FormatArg::Json);
    let text = match format {
        FormatArg::Json => serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?,
        FormatArg::Csv => {
            let mut out = String::from("theta_a,phi_a,theta_b,phi_b,payoff_a,payoff_b");
            for r in &rows {
                out.push('\n');
                out.push_str(&format!(
                    "{},{},{},{},{},{}",
                    sig12(r.theta_a),
                    sig12(r.phi_a),
                    sig12(r.theta_b),
                    sig12(r.phi_b),
                    sig12(r.payoff_a),
                    sig12(r.payoff_b)
                ));
            }
            out
        }
    };
    emit(common, &text)
}

fn parse_key(raw: &str) -> Result<Vec<Symbol>, String> {
    raw.split(',')
        .map(|tok| match tok.trim() {
            "m1" => Ok(Symbol::M1),
            "m2" => Ok(Symbol::M2),
            "m3" => Ok(Symbol::M3),
            "m4" => Ok(Symbol::M4),
            other => Err(format!("unknown symbol {other}")),
        })
        .collect()
}

fn run_qkd(
    common: &CommonArgs,
    n: Option<u64>,
    p: Option<f64>,
    seed: Option<u64>,
    threshold: Option<f64>,
    key: Option<String>,
    key_len: Option<usize>,
) -> Result<(), String> {
    let cfgmap = load_config(&common.config)?;
    let n = merge(n, &cfgmap, "n", 100_u64)?;
    let p = merge(p, &cfgmap, "p", 0.0)?;
    let seed = merge(seed, &cfgmap, "seed", 1_u64)?;
    let threshold = merge(threshold, &cfgmap, "threshold", DEFAULT_THRESHOLD)?;
    let key_len = merge(key_len, &cfgmap, "key_len", 12_usize)?;
    let key = match key.or_else(|| cfgmap.get("key").cloned()) {
        Some(raw) => parse_key(&raw)?,
        None => {
            // Random key from a dedicated stream so symbol streams stay untouched.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(u64::MAX);
            (0..key_len)
                .map(|_| Symbol::ALL[rng.gen_range(0..4)])
                .collect()
        }
    };
    let session = SessionConfig {
        shots_per_symbol: n,
        seed,
        threshold,
    };
    let transcript = run_session(
        &key,
        &session,
        p,
        &SymbolCodebook::standard(),
        &CodingMatrix::standard(),
    )
    .map_err(|e| e.to_string())?;
    let mut text = transcript.to_lines();
    text.push_str(&format!(
        "\n# eavesdropping detected: {}",
        transcript.detected()
    ));
    emit(common, &text)
}

#[derive(Serialize)]
struct TomoReport {
    true_stokes: [f64; 3],
    estimated_stokes: [f64; 3],
    error_bounds: [f64; 3],
}

fn run_tomo(
    common: &CommonArgs,
    theta: Option<f64>,
    phi: Option<f64>,
    shots: Option<u64>,
    seed: Option<u64>,
) -> Result<(), String> {
    let cfgmap = load_config(&common.config)?;
    let theta = angle(merge(theta, &cfgmap, "theta", 0.5)?, common.radians);
    let phi = angle(merge(phi, &cfgmap, "phi", 0.25)?, common.radians);
    let shots = merge(shots, &cfgmap, "shots", 10_000_u64)?;
    let seed = merge(seed, &cfgmap, "seed", 1_u64)?;
    let rho = pure_qubit(theta, phi).map_err(|e| e.to_string())?;
    let truth = stokes_from_density(&rho).map_err(|e| e.to_string())?;
    let mode = if shots == 0 {
        SampleMode::Exact
    } else {
        SampleMode::Sampled { shots, seed }
    };
    let rec = reconstruct(&rho, mode).map_err(|e| e.to_string())?;
    let report = TomoReport {
        true_stokes: [truth.s1, truth.s2, truth.s3],
        estimated_stokes: [rec.stokes.s1, rec.stokes.s2, rec.stokes.s3],
        error_bounds: rec.errors,
    };
    let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    emit(common, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Sweep {
            common,
            game,
            gamma,
            delta,
            grid,
            p,
            mu,
        } => run_sweep(&common, game, gamma, delta, grid, p, mu),
        Cmd::Nash {
            common,
            game,
            gamma,
            delta,
            grid,
            eps,
        } => run_nash(&common, game, gamma, delta, grid, eps),
        Cmd::Qkd {
            common,
            n,
            p,
            seed,
            threshold,
            key,
            key_len,
        } => run_qkd(&common, n, p, seed, threshold, key, key_len),
        Cmd::Tomo {
            common,
            theta,
            phi,
            shots,
            seed,
        } => run_tomo(&common, theta, phi, shots, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
