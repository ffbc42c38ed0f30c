//! Closed-form approximations of the truncated Zeta partial sum `S(n, alpha)`
//! and the approximate probability mass functions built on them.
//!
//! All three closed forms are O(1) in `n` (the trapezoidal form adds `k - 1`
//! exact leading terms). They share a removable-looking but genuine
//! singularity at `alpha = 1`; see [`ApproxOptions`].

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{CompensatedSum, Real};
use crate::zeta::{exact_partial_sum, ZipfParams};

/// Default half-width of the band around `alpha = 1` where the closed forms
/// are refused.
pub const DEFAULT_ALPHA_GUARD: f64 = 1e-8;

/// Default number of leading terms parameter for the trapezoidal form.
pub const DEFAULT_K: usize = 2;

/// How the normalizing constant is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproxMethod {
    /// Direct summation.
    Exact,
    /// `integral_1^{n+1} x^-alpha dx`, always below the sum.
    Integral,
    /// Mean of the lower and upper integral bounds.
    AverageIntegral,
    /// Trapezoidal rule on `[k, n]` plus the first `k - 1` exact terms.
    Trapezoidal(usize),
}

impl ApproxMethod {
    /// Name used on the command line and in CSV output.
    pub fn name(&self) -> &'static str {
        match self {
            ApproxMethod::Exact => "exact",
            ApproxMethod::Integral => "integral",
            ApproxMethod::AverageIntegral => "avg-integral",
            ApproxMethod::Trapezoidal(_) => "trapezoidal",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self {
            ApproxMethod::Trapezoidal(k) => Some(*k),
            _ => None,
        }
    }

    /// Whether the result is independent of `n` in cost.
    pub fn is_closed_form(&self) -> bool {
        !matches!(self, ApproxMethod::Exact)
    }
}

impl fmt::Display for ApproxMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxMethod::Trapezoidal(k) => write!(f, "trapezoidal(k={k})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Handling of the `alpha = 1` singularity.
///
/// Inside `|alpha - 1| <= alpha_guard` every closed form fails with
/// [`Error::AlphaNearOne`] unless `allow_alpha_one` is set, in which case the
/// analytic limit is substituted: `(b^(1-alpha) - a^(1-alpha)) / (1-alpha)`
/// becomes `ln(b / a)`. The limit branch is an extension beyond the original
/// formulas, which only cover `alpha != 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxOptions<T> {
    pub alpha_guard: T,
    pub allow_alpha_one: bool,
}

impl<T: Real> Default for ApproxOptions<T> {
    fn default() -> Self {
        Self {
            alpha_guard: T::lit(DEFAULT_ALPHA_GUARD),
            allow_alpha_one: false,
        }
    }
}

impl<T: Real> ApproxOptions<T> {
    pub fn with_limit_branch(mut self, allow: bool) -> Self {
        self.allow_alpha_one = allow;
        self
    }

    pub fn with_guard(mut self, guard: T) -> Self {
        self.alpha_guard = guard;
        self
    }

    /// `Ok(true)` when the limit branch must be used, `Ok(false)` for the
    /// ordinary formulas.
    pub fn in_limit_band(&self, alpha: T) -> Result<bool> {
        if (alpha - T::one()).abs() > self.alpha_guard {
            return Ok(false);
        }
        if self.allow_alpha_one {
            Ok(true)
        } else {
            Err(Error::AlphaNearOne {
                alpha: alpha.to_f64().unwrap_or(f64::NAN),
                guard: self.alpha_guard.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    /// `integral_a^b x^-alpha dx` for `1 <= a <= b`.
    fn power_integral(&self, a: T, b: T, alpha: T) -> Result<T> {
        if self.in_limit_band(alpha)? {
            return Ok((b / a).ln());
        }
        let e = T::one() - alpha;
        Ok((b.powf(e) - a.powf(e)) / e)
    }

    /// `((n+1)^(1-alpha) - 1) / (1-alpha)`.
    pub fn integral_sum(&self, params: &ZipfParams<T>) -> Result<T> {
        let n = T::from_count(params.n());
        self.power_integral(T::one(), n + T::one(), params.alpha())
    }

    /// `1 + (n^(1-alpha) - 1) / (1-alpha)`, the approximation from above.
    pub fn upper_integral_sum(&self, params: &ZipfParams<T>) -> Result<T> {
        let n = T::from_count(params.n());
        Ok(T::one() + self.power_integral(T::one(), n, params.alpha())?)
    }

    /// `((n+1)^(1-alpha) + n^(1-alpha) - (1+alpha)) / (2(1-alpha))`.
    pub fn average_integral_sum(&self, params: &ZipfParams<T>) -> Result<T> {
        let alpha = params.alpha();
        let n = T::from_count(params.n());
        let two = T::lit(2.0);
        if self.in_limit_band(alpha)? {
            return Ok(((n + T::one()).ln() + T::one() + n.ln()) / two);
        }
        let e = T::one() - alpha;
        Ok(((n + T::one()).powf(e) + n.powf(e) - (T::one() + alpha)) / (two * e))
    }

    /// `integral_k^n x^-alpha dx + sum_{i<k} i^-alpha + (k^-alpha + n^-alpha)/2`.
    ///
    /// At `k = n` the integral vanishes and the result is the exact sum.
    pub fn trapezoidal_sum(&self, params: &ZipfParams<T>, k: usize) -> Result<T> {
        check_k(params, k)?;
        let alpha = params.alpha();
        let kf = T::from_count(k);
        let nf = T::from_count(params.n());
        let half = T::lit(0.5);
        let mut acc = leading_terms(k, alpha);
        if self.in_limit_band(alpha)? {
            acc.add((nf / kf).ln());
        } else {
            let e = T::one() - alpha;
            acc.add(nf.powf(e) / e);
            acc.add(-(kf.powf(e) / e));
        }
        acc.add(params.weight(k) * half);
        acc.add(params.weight(params.n()) * half);
        Ok(acc.value())
    }

    /// Denominator of the trapezoidal PMF in its expanded form,
    /// `n^-alpha (1/2 + n/(1-alpha)) + k^-alpha (1/2 - k/(1-alpha)) + sum_{i<k} i^-alpha`.
    ///
    /// Algebraically identical to [`trapezoidal_sum`](Self::trapezoidal_sum);
    /// kept as an independent route for cross-checks.
    pub fn trapezoidal_denominator(&self, params: &ZipfParams<T>, k: usize) -> Result<T> {
        check_k(params, k)?;
        let alpha = params.alpha();
        if self.in_limit_band(alpha)? {
            return self.trapezoidal_sum(params, k);
        }
        let e = T::one() - alpha;
        let half = T::lit(0.5);
        let kf = T::from_count(k);
        let nf = T::from_count(params.n());
        let n_w = params.weight(params.n());
        let k_w = params.weight(k);
        let mut acc = leading_terms(k, alpha);
        acc.add(n_w * half);
        acc.add(n_w * (nf / e));
        acc.add(k_w * half);
        acc.add(-(k_w * (kf / e)));
        Ok(acc.value())
    }

    /// Normalizing constant under `method`.
    pub fn approx_sum(&self, params: &ZipfParams<T>, method: ApproxMethod) -> Result<T> {
        match method {
            ApproxMethod::Exact => Ok(exact_partial_sum(params)),
            ApproxMethod::Integral => self.integral_sum(params),
            ApproxMethod::AverageIntegral => self.average_integral_sum(params),
            ApproxMethod::Trapezoidal(k) => self.trapezoidal_sum(params, k),
        }
    }

    /// `r^-alpha / approx_sum(params, method)`.
    pub fn approx_pmf(&self, r: usize, params: &ZipfParams<T>, method: ApproxMethod) -> Result<T> {
        params.check_rank(r)?;
        Ok(params.weight(r) / self.approx_sum(params, method)?)
    }
}

/// `sum_{i=1}^{k-1} i^-alpha`, largest index first, left open for more terms.
fn leading_terms<T: Real>(k: usize, alpha: T) -> CompensatedSum<T> {
    (1..k)
        .rev()
        .map(|i| T::from_count(i).powf(-alpha))
        .collect()
}

fn check_k<T: Real>(params: &ZipfParams<T>, k: usize) -> Result<()> {
    if k < 2 || k > params.n() {
        return Err(Error::InvalidK { k, n: params.n() });
    }
    Ok(())
}

pub fn integral_sum<T: Real>(params: &ZipfParams<T>) -> Result<T> {
    ApproxOptions::default().integral_sum(params)
}

pub fn upper_integral_sum<T: Real>(params: &ZipfParams<T>) -> Result<T> {
    ApproxOptions::default().upper_integral_sum(params)
}

pub fn average_integral_sum<T: Real>(params: &ZipfParams<T>) -> Result<T> {
    ApproxOptions::default().average_integral_sum(params)
}

pub fn trapezoidal_sum<T: Real>(params: &ZipfParams<T>, k: usize) -> Result<T> {
    ApproxOptions::default().trapezoidal_sum(params, k)
}

pub fn approx_sum<T: Real>(params: &ZipfParams<T>, method: ApproxMethod) -> Result<T> {
    ApproxOptions::default().approx_sum(params, method)
}

pub fn approx_pmf<T: Real>(r: usize, params: &ZipfParams<T>, method: ApproxMethod) -> Result<T> {
    ApproxOptions::default().approx_pmf(r, params, method)
}
