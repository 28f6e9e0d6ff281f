//! Library side of the `hbe` command: argument model, dispatch, and
//! rendering. The binary only parses arguments, sizes the thread pool and
//! calls [`run`].

mod commands;
mod render;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hbe_core::catalog::{Catalog, CatalogOptions};
use hbe_core::exact::{harmonic2_exact, ExactParam};
use hbe_core::numeric::harmonic2_num;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker threads used by sweeps.
pub const THREADS_ENV: &str = "HBE_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hbe_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumKind {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "V", alias = "v")]
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Lhs,
    Rhs,
    Both,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "hbe", version, about = "Exact and numeric checks of harmonic sums with inverse central binomials")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Zero all timing fields so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Admit half-integer m in the second-order identity (runs the trigamma
    /// gate first).
    #[arg(long, global = true)]
    pub half_integer_order2: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the identity registry.
    List,
    /// Exact verification over a grid of points.
    Verify(VerifyArgs),
    /// Evaluate a power sum or one side of an identity.
    Eval(EvalArgs),
    /// Fit the polynomial shape of V_d(n) or U_d(n).
    Fit(FitArgs),
    /// Time direct summation against closed forms or recursions.
    Bench(BenchArgs),
    /// Random real-parameter checks and finite-difference checks.
    Numeric(NumericArgs),
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Identity ids (repeat or comma-separate); `all` selects the registry.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub identity: Vec<String>,
    #[arg(long, default_value_t = 50)]
    pub n_max: u64,
    /// Parameters as `p/2`, integers or decimals like `2.5`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub m: Vec<String>,
    /// Without `--m`, parametric identities use every admitted m with
    /// `-1 <= 2m <= this`.
    #[arg(long, default_value_t = 20, allow_hyphen_values = true)]
    pub twice_m_max: i64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum, conflicts_with = "identity")]
    pub sum: Option<SumKind>,
    #[arg(long, requires = "sum")]
    pub d: Option<u32>,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub identity: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, value_enum, default_value_t = Side::Both)]
    pub side: Side,
}

#[derive(Debug, Clone, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_enum, default_value_t = SumKind::V)]
    pub sum: SumKind,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Identity to time; ignored when `--sum` is given.
    #[arg(long, default_value = "I-cb0")]
    pub identity: String,
    #[arg(long, value_enum)]
    pub sum: Option<SumKind>,
    #[arg(long, default_value_t = 3)]
    pub d: u32,
    /// Parameter for parametric identities.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub m: String,
    /// Grid is `n_min, 2 n_min, 4 n_min, ...` capped by this value.
    #[arg(long, default_value_t = 5000)]
    pub n_max: u64,
    #[arg(long, default_value_t = 10)]
    pub n_min: u64,
}

#[derive(Debug, Clone, Args)]
pub struct NumericArgs {
    /// Real-parameter identity ids; `all` selects every one.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub identity: Vec<String>,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    #[arg(long, default_value_t = 15)]
    pub n_max: u64,
    #[arg(long, default_value_t = hbe_core::numeric::DEFAULT_TOL)]
    pub tol: f64,
    /// Fixed real parameters instead of random ones.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub m: Vec<f64>,
    /// Step for the finite-difference checks.
    #[arg(long, default_value_t = 1e-6)]
    pub h: f64,
}

/// Reads [`THREADS_ENV`] and sizes the global rayon pool.
pub fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

/// Largest relative deviation between the half-integer order-2 harmonic
/// closed form and trigamma at `m = 1/2 ..= 19/2`.
pub fn half_integer_gate() -> CliResult<f64> {
    let mut worst: f64 = 0.0;
    for k in 0..10 {
        let m = ExactParam::half(k)?;
        let exact = harmonic2_exact(m).to_f64();
        let num = harmonic2_num(m.to_f64())?;
        worst = worst.max((exact - num).abs() / exact.abs());
    }
    Ok(worst)
}

pub const GATE_TOL: f64 = 1e-10;

/// The catalog the flags ask for.
pub fn catalog_for(cfg: &RunConfig) -> CliResult<Catalog> {
    if !cfg.half_integer_order2 {
        return Ok(Catalog::standard());
    }
    let worst = half_integer_gate()?;
    if worst > GATE_TOL {
        return Err(CliError::Usage(format!(
            "half-integer order-2 harmonic gate failed: rel err {worst:e} > {GATE_TOL:e}"
        )));
    }
    Ok(Catalog::with_options(CatalogOptions { thm51_half_integers: true }))
}

/// Executes one command, writing results to `out` and diagnostics to
/// stderr. Returns the process exit code.
pub fn run(cfg: &RunConfig, catalog: &Catalog, out: &mut dyn Write) -> i32 {
    match commands::dispatch(cfg, catalog, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_MISMATCH,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
