use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zeta_approx::{ApproxMethod, ApproxOptions64, DEFAULT_ALPHA_GUARD, DEFAULT_K};

use crate::ranks::RankSet;

#[derive(Debug, Parser)]
#[command(
    name = "zeta-approx",
    version,
    about = "Truncated Zeta (Zipf) distribution: exact and closed-form evaluation, sampling, error sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability mass at selected ranks (CSV `rank,pmf`).
    Pmf {
        #[command(flatten)]
        dist: DistArgs,
        #[command(flatten)]
        method: MethodArgs,
        /// Ranks, e.g. `1-10,50` (default: every rank)
        #[arg(long)]
        ranks: Option<RankSet>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cumulative distribution at selected ranks (CSV `rank,cdf`); exact method only.
    Cdf {
        #[command(flatten)]
        dist: DistArgs,
        #[command(flatten)]
        method: MethodArgs,
        #[arg(long)]
        ranks: Option<RankSet>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Raw moment E[X^m] (CSV `order,moment`); exact method only.
    Moment {
        #[command(flatten)]
        dist: DistArgs,
        #[command(flatten)]
        method: MethodArgs,
        /// Moment order m >= 1
        #[arg(long, default_value_t = 1)]
        order: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Random ranks, one per line.
    Sample {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Relative error of the closed forms over an (n, alpha) grid
    /// (CSV `method,k,n,alpha,epsilon`).
    ErrorSweep(SweepArgs),
    /// Mean time per normalizing-constant evaluation (CSV `method,n,ns_per_eval`).
    Bench {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "exact,integral,avg-integral,trapezoidal"
        )]
        methods: Vec<MethodName>,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        iterations: usize,
        #[command(flatten)]
        guard: GuardArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct DistArgs {
    /// Zipf exponent alpha >= 0
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Number of species
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct MethodArgs {
    #[arg(long, value_enum, default_value_t = MethodName::Exact)]
    pub method: MethodName,
    /// Trapezoidal k, 2 <= k <= n
    #[arg(long, default_value_t = DEFAULT_K)]
    pub k: usize,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Debug, Args)]
pub struct GuardArgs {
    /// Half-width of the refused band around alpha = 1
    #[arg(long, default_value_t = DEFAULT_ALPHA_GUARD)]
    pub alpha_guard: f64,
    /// Evaluate the alpha -> 1 limit inside the guard band instead of failing
    #[arg(long)]
    pub allow_alpha_one: bool,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Output file (default: standard output)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.1)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 2.0)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 0.01)]
    pub alpha_step: f64,
    #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
    pub n_list: Vec<usize>,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "integral,avg-integral,trapezoidal"
    )]
    pub methods: Vec<MethodName>,
    #[arg(long, default_value_t = DEFAULT_K)]
    pub k: usize,
    /// Grid points with |alpha - 1| < this are skipped
    #[arg(long, default_value_t = 0.05)]
    pub guard_exclusion: f64,
    #[command(flatten)]
    pub guard: GuardArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodName {
    Exact,
    Integral,
    AvgIntegral,
    Trapezoidal,
}

impl MethodName {
    pub fn with_k(self, k: usize) -> ApproxMethod {
        match self {
            MethodName::Exact => ApproxMethod::Exact,
            MethodName::Integral => ApproxMethod::Integral,
            MethodName::AvgIntegral => ApproxMethod::AverageIntegral,
            MethodName::Trapezoidal => ApproxMethod::Trapezoidal(k),
        }
    }
}

impl MethodArgs {
    pub fn method(&self) -> ApproxMethod {
        self.method.with_k(self.k)
    }
}

impl GuardArgs {
    pub fn options(&self) -> ApproxOptions64 {
        ApproxOptions64::default()
            .with_guard(self.alpha_guard)
            .with_limit_branch(self.allow_alpha_one)
    }
}
