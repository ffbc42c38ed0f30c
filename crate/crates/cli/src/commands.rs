use std::fmt::Write as _;
use std::hint::black_box;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use zeta_approx::{
    run_sweep, ApproxMethod, ApproxOptions64, SweepGrid64, TruncatedZeta64, ZipfParams64,
};

use crate::cli::{Command, GuardArgs, OutArgs, SweepArgs};
use crate::ranks::RankSet;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] zeta_approx::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Model(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Floats are written with 17 significant digits so they round-trip.
fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn options(guard: &GuardArgs) -> Result<ApproxOptions64> {
    if !(guard.alpha_guard.is_finite() && guard.alpha_guard >= 0.0) {
        return Err(CliError::Usage(format!(
            "--alpha-guard must be finite and >= 0, got {}",
            guard.alpha_guard
        )));
    }
    Ok(guard.options())
}

fn exact_only(method: ApproxMethod, what: &str) -> Result<()> {
    if method != ApproxMethod::Exact {
        return Err(CliError::Usage(format!(
            "{what} supports only --method exact, got {}",
            method.name()
        )));
    }
    Ok(())
}

fn rank_list(ranks: &Option<RankSet>, n: usize) -> Result<Vec<usize>> {
    match ranks {
        None => Ok((1..=n).collect()),
        Some(set) if set.max() > n => {
            Err(zeta_approx::Error::RankOutOfRange { r: set.max(), n }.into())
        }
        Some(set) => Ok(set.expand().collect()),
    }
}

/// Computes the full output of `command`; nothing is written on error.
pub fn render(command: &Command) -> Result<String> {
    let mut buf = String::new();
    match command {
        Command::Pmf {
            dist,
            method,
            ranks,
            ..
        } => {
            let params = ZipfParams64::new(dist.alpha, dist.n)?;
            let opts = options(&method.guard)?;
            let method = method.method();
            let ranks = rank_list(ranks, params.n())?;
            let norm = opts.approx_sum(&params, method)?;
            buf.push_str("rank,pmf\n");
            for r in ranks {
                let _ = writeln!(buf, "{r},{}", real(params.weight(r) / norm));
            }
        }
        Command::Cdf {
            dist,
            method,
            ranks,
            ..
        } => {
            options(&method.guard)?;
            exact_only(method.method(), "cdf")?;
            let z = TruncatedZeta64::from_alpha_n(dist.alpha, dist.n)?;
            let ranks = rank_list(ranks, z.n())?;
            buf.push_str("rank,cdf\n");
            for r in ranks {
                let _ = writeln!(buf, "{r},{}", real(z.cdf(r)?));
            }
        }
        Command::Moment {
            dist,
            method,
            order,
            ..
        } => {
            options(&method.guard)?;
            exact_only(method.method(), "moment")?;
            let z = TruncatedZeta64::from_alpha_n(dist.alpha, dist.n)?;
            let m = z.moment(*order)?;
            let _ = writeln!(buf, "order,moment\n{order},{}", real(m));
        }
        Command::Sample {
            dist, count, seed, ..
        } => {
            if *count == 0 {
                return Err(CliError::Usage("--count must be at least 1".into()));
            }
            let z = TruncatedZeta64::from_alpha_n(dist.alpha, dist.n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            buf.reserve(count * 4);
            for _ in 0..*count {
                let _ = writeln!(buf, "{}", z.sample(&mut rng));
            }
        }
        Command::ErrorSweep(args) => sweep(args, &mut buf)?,
        Command::Bench {
            dist,
            methods,
            k,
            iterations,
            guard,
            ..
        } => {
            if *iterations == 0 {
                return Err(CliError::Usage("--iterations must be at least 1".into()));
            }
            let params = ZipfParams64::new(dist.alpha, dist.n)?;
            let opts = options(guard)?;
            let methods: Vec<ApproxMethod> = methods.iter().map(|m| m.with_k(*k)).collect();
            for &m in &methods {
                opts.approx_sum(&params, m)?;
            }
            buf.push_str("method,n,ns_per_eval\n");
            for m in methods {
                let start = Instant::now();
                for _ in 0..*iterations {
                    black_box(opts.approx_sum(black_box(&params), m)?);
                }
                let ns = start.elapsed().as_nanos() as f64 / *iterations as f64;
                let _ = writeln!(buf, "{},{},{}", m.name(), params.n(), real(ns));
            }
        }
    }
    Ok(buf)
}

fn sweep(args: &SweepArgs, buf: &mut String) -> Result<()> {
    if args.methods.is_empty() {
        return Err(CliError::Usage(
            "--methods must name at least one method".into(),
        ));
    }
    if args.methods.contains(&crate::cli::MethodName::Exact) {
        return Err(CliError::Usage(
            "error-sweep does not accept the exact method".into(),
        ));
    }
    let grid = SweepGrid64 {
        alpha_min: args.alpha_min,
        alpha_max: args.alpha_max,
        alpha_step: args.alpha_step,
        n_values: args.n_list.clone(),
        methods: args.methods.iter().map(|m| m.with_k(args.k)).collect(),
        guard_exclusion: args.guard_exclusion,
        options: options(&args.guard)?,
    };
    let records = run_sweep(&grid)?;
    buf.push_str("method,k,n,alpha,epsilon\n");
    for rec in records {
        let k = rec.method.k().map(|k| k.to_string()).unwrap_or_default();
        let _ = writeln!(
            buf,
            "{},{k},{},{},{}",
            rec.method.name(),
            rec.n,
            real(rec.alpha),
            real(rec.epsilon)
        );
    }
    Ok(())
}

pub fn out_args(command: &Command) -> &OutArgs {
    match command {
        Command::Pmf { out, .. }
        | Command::Cdf { out, .. }
        | Command::Moment { out, .. }
        | Command::Sample { out, .. }
        | Command::Bench { out, .. } => out,
        Command::ErrorSweep(args) => &args.out,
    }
}

pub fn emit(out: &OutArgs, text: &str) -> Result<()> {
    match out.out.as_deref() {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}
