//! The truncated Zeta distribution on `{1, ..., n}` with exact normalization.

use std::sync::OnceLock;

use rand::distr::Distribution;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{CompensatedSum, Real};
use crate::zeta::{exact_partial_sum, power_sum, ZipfParams};

/// `P[X = r] = r^-alpha / S(n, alpha)` for `r = 1..=n`.
///
/// Immutable once built. The cumulative table backing `cdf`, `quantile` and
/// sampling is computed on first use (O(n) memory) and shared afterwards; the
/// value can be sent to and shared between threads freely.
#[derive(Debug, Clone)]
pub struct TruncatedZeta<T> {
    params: ZipfParams<T>,
    norm: T,
    cumulative: OnceLock<Vec<T>>,
}

impl<T: Real> TruncatedZeta<T> {
    pub fn new(params: ZipfParams<T>) -> Self {
        let norm = exact_partial_sum(&params);
        Self {
            params,
            norm,
            cumulative: OnceLock::new(),
        }
    }

    pub fn from_alpha_n(alpha: T, n: usize) -> Result<Self> {
        Ok(Self::new(ZipfParams::new(alpha, n)?))
    }

    pub fn params(&self) -> &ZipfParams<T> {
        &self.params
    }

    /// Cached `S(n, alpha)`.
    pub fn norm(&self) -> T {
        self.norm
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn pmf(&self, r: usize) -> Result<T> {
        self.params.check_rank(r)?;
        Ok(self.params.weight(r) / self.norm)
    }

    /// `S(r, alpha) / S(n, alpha)`.
    pub fn cdf(&self, r: usize) -> Result<T> {
        self.params.check_rank(r)?;
        Ok(self.table()[r - 1])
    }

    /// Smallest rank `r` with `cdf(r) >= u`. `u = 1` maps to `n`.
    pub fn quantile(&self, u: T) -> Result<usize> {
        if !(u >= T::zero() && u <= T::one()) {
            return Err(Error::InvalidProbability(u.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(self.search(u))
    }

    /// Draws one rank by inverting a uniform variate on `[0, 1)`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        self.search(T::lit(u))
    }

    /// `E[X^m] = S(n, alpha - m) / S(n, alpha)` for `m >= 1`.
    pub fn moment(&self, m: u32) -> Result<T> {
        if m == 0 {
            return Err(Error::InvalidMomentOrder);
        }
        let shifted = self.params.alpha() - T::from_u32(m).expect("moment order representable");
        Ok(power_sum(self.params.n(), shifted) / self.norm)
    }

    fn search(&self, u: T) -> usize {
        let table = self.table();
        let idx = table.partition_point(|&c| c < u);
        (idx + 1).min(table.len())
    }

    fn table(&self) -> &[T] {
        self.cumulative.get_or_init(|| {
            let mut acc = CompensatedSum::new();
            (1..=self.params.n())
                .map(|r| {
                    acc.add(self.params.weight(r));
                    acc.value() / self.norm
                })
                .collect()
        })
    }
}

impl<T: Real> Distribution<usize> for TruncatedZeta<T> {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        TruncatedZeta::sample(self, rng)
    }
}
