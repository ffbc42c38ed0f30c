//! Relative error of the closed-form approximations against the exact sum,
//! and batch sweeps over `(n, alpha)` grids.
//!
//! The error of every approximate PMF is independent of the rank:
//! `P_approx(r) / P(r) - 1 = S(n, alpha) / A(n, alpha) - 1` where `A` is the
//! approximate normalizing constant.

use rayon::prelude::*;

use crate::approx::{ApproxMethod, ApproxOptions};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::zeta::{exact_partial_sum, ZipfParams, MAX_SPECIES};

/// One point of an error sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRecord<T> {
    pub n: usize,
    pub alpha: T,
    pub method: ApproxMethod,
    pub epsilon: T,
}

/// Signed relative error of `method` at `params`, using default options.
pub fn relative_error<T: Real>(params: &ZipfParams<T>, method: ApproxMethod) -> Result<T> {
    relative_error_with(params, method, &ApproxOptions::default())
}

pub fn relative_error_with<T: Real>(
    params: &ZipfParams<T>,
    method: ApproxMethod,
    opts: &ApproxOptions<T>,
) -> Result<T> {
    relative_error_given_sum(params, method, exact_partial_sum(params), opts)
}

/// Relative error from the closed-form error expressions, given a precomputed
/// exact sum:
///
/// * integral: `(1-alpha) S / ((n+1)^(1-alpha) - 1) - 1`
/// * average integral: `2(1-alpha) S / ((n+1)^(1-alpha) + n^(1-alpha) - (1+alpha)) - 1`
/// * trapezoidal: `S / (n^-alpha (1/2 + n/(1-alpha)) + k^-alpha (1/2 - k/(1-alpha)) + sum_{i<k} i^-alpha) - 1`
///
/// Inside the limit band the generic `S / A - 1` is used instead.
pub fn relative_error_given_sum<T: Real>(
    params: &ZipfParams<T>,
    method: ApproxMethod,
    exact: T,
    opts: &ApproxOptions<T>,
) -> Result<T> {
    let alpha = params.alpha();
    if method == ApproxMethod::Exact {
        return Err(Error::ExactHasNoError);
    }
    if let ApproxMethod::Trapezoidal(k) = method {
        return Ok(exact / opts.trapezoidal_denominator(params, k)? - T::one());
    }
    if opts.in_limit_band(alpha)? {
        return Ok(exact / opts.approx_sum(params, method)? - T::one());
    }
    let e = T::one() - alpha;
    let n = T::from_count(params.n());
    let n1 = n + T::one();
    let ratio = match method {
        ApproxMethod::Integral => e * exact / (n1.powf(e) - T::one()),
        ApproxMethod::AverageIntegral => {
            T::lit(2.0) * e * exact / (n1.powf(e) + n.powf(e) - (T::one() + alpha))
        }
        ApproxMethod::Exact | ApproxMethod::Trapezoidal(_) => unreachable!(),
    };
    Ok(ratio - T::one())
}

/// The same error measured on the PMF at rank `r`:
/// `(P_approx(r) - P(r)) / P(r)`.
pub fn relative_error_at_rank<T: Real>(
    r: usize,
    params: &ZipfParams<T>,
    method: ApproxMethod,
    opts: &ApproxOptions<T>,
) -> Result<T> {
    if method == ApproxMethod::Exact {
        return Err(Error::ExactHasNoError);
    }
    let approx = opts.approx_pmf(r, params, method)?;
    let exact = opts.approx_pmf(r, params, ApproxMethod::Exact)?;
    Ok((approx - exact) / exact)
}

/// Axes of an error sweep: an inclusive `alpha` range, a list of species
/// counts and a list of methods.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid<T> {
    pub alpha_min: T,
    pub alpha_max: T,
    pub alpha_step: T,
    pub n_values: Vec<usize>,
    pub methods: Vec<ApproxMethod>,
    /// Points with `|alpha - 1| < guard_exclusion` are skipped.
    pub guard_exclusion: T,
    pub options: ApproxOptions<T>,
}

impl<T: Real> SweepGrid<T> {
    /// `alpha` in `[0.1, 2.0]` by 0.01, `n` in {100, 1000, 10000}, skipping
    /// `(0.95, 1.05)`.
    pub fn figures(methods: Vec<ApproxMethod>) -> Self {
        Self {
            alpha_min: T::lit(0.1),
            alpha_max: T::lit(2.0),
            alpha_step: T::lit(0.01),
            n_values: vec![100, 1000, 10_000],
            methods,
            guard_exclusion: T::lit(0.05),
            options: ApproxOptions::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidGrid(msg.to_owned()));
        let finite = [
            self.alpha_min,
            self.alpha_max,
            self.alpha_step,
            self.guard_exclusion,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return bad("alpha bounds, step and guard exclusion must be finite");
        }
        if self.alpha_min <= T::zero() {
            return bad("alpha_min must be > 0");
        }
        if self.alpha_step <= T::zero() {
            return bad("alpha_step must be > 0");
        }
        if self.alpha_max < self.alpha_min {
            return bad("alpha_max must be >= alpha_min");
        }
        if self.guard_exclusion < self.options.alpha_guard {
            return bad("guard_exclusion must be >= the alpha guard");
        }
        if self.n_values.iter().any(|&n| n == 0 || n > MAX_SPECIES) {
            return bad("every n must satisfy 1 <= n <= 2^31 - 1");
        }
        if self.methods.contains(&ApproxMethod::Exact) {
            return bad("the exact method has no error to sweep");
        }
        Ok(())
    }

    /// Grid values of `alpha` in ascending order, guard band removed.
    pub fn alphas(&self) -> Vec<T> {
        // slack absorbs the rounding of alpha_min + i * step
        let slack = self.alpha_step * T::lit(1e-6);
        let span = (self.alpha_max - self.alpha_min + slack) / self.alpha_step;
        let steps = span.floor().to_usize().unwrap_or(0);
        (0..=steps)
            .map(|i| self.alpha_min + T::from_count(i) * self.alpha_step)
            .filter(|&a| (a - T::one()).abs() >= self.guard_exclusion - slack)
            .collect()
    }
}

/// Evaluates every `(method, n, alpha)` combination of the grid.
///
/// Records come back ordered by method (grid order), then ascending `n`, then
/// ascending `alpha`. Exact sums are computed once per `(n, alpha)` and in
/// parallel; the output does not depend on thread scheduling.
pub fn run_sweep<T: Real>(grid: &SweepGrid<T>) -> Result<Vec<ErrorRecord<T>>> {
    grid.validate()?;
    let mut ns = grid.n_values.clone();
    ns.sort_unstable();
    ns.dedup();
    let alphas = grid.alphas();

    let points: Vec<(ZipfParams<T>, T)> = ns
        .iter()
        .flat_map(|&n| alphas.iter().map(move |&a| (n, a)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, a)| {
            let params = ZipfParams::new(a, n)?;
            Ok((params, exact_partial_sum(&params)))
        })
        .collect::<Result<_>>()?;

    if points.is_empty() || grid.methods.is_empty() {
        return Err(Error::EmptyGrid);
    }

    let jobs: Vec<(ApproxMethod, &(ZipfParams<T>, T))> = grid
        .methods
        .iter()
        .flat_map(|&m| points.iter().map(move |p| (m, p)))
        .collect();

    jobs.into_par_iter()
        .map(|(method, (params, exact))| {
            Ok(ErrorRecord {
                n: params.n(),
                alpha: params.alpha(),
                method,
                epsilon: relative_error_given_sum(params, method, *exact, &grid.options)?,
            })
        })
        .collect()
}
