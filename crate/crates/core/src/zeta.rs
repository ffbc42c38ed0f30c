//! Exact truncated Zeta partial sums and the harmonic-number closed form.
//!
//! `exact_partial_sum` is the ground truth every approximation and every
//! error figure in this crate is measured against. It is a direct O(n)
//! summation, compensated, accumulated from the smallest term upwards.

use crate::error::{Error, Result};
use crate::scalar::{CompensatedSum, Real};

/// Largest supported number of species (`2^31 - 1`).
pub const MAX_SPECIES: usize = i32::MAX as usize;

/// Euler–Mascheroni constant to 16 significant digits
/// (OEIS A001620: 0.57721566490153286060...).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Zipf exponent `alpha` and number of species `n`.
///
/// Ranks `r` used with these parameters range over `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZipfParams<T> {
    alpha: T,
    n: usize,
}

impl<T: Real> ZipfParams<T> {
    /// `alpha = 0` is accepted as the degenerate uniform case; every closed
    /// form is exact there.
    pub fn new(alpha: T, n: usize) -> Result<Self> {
        if !alpha.is_finite() || alpha < T::zero() {
            return Err(Error::InvalidAlpha(alpha.to_f64().unwrap_or(f64::NAN)));
        }
        if n == 0 || n > MAX_SPECIES {
            return Err(Error::InvalidN {
                n: n as u64,
                max: MAX_SPECIES as u64,
            });
        }
        Ok(Self { alpha, n })
    }

    #[inline]
    pub fn alpha(&self) -> T {
        self.alpha
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `r^-alpha`, the unnormalized mass of rank `r`.
    #[inline]
    pub fn weight(&self, r: usize) -> T {
        T::from_count(r).powf(-self.alpha)
    }

    pub(crate) fn check_rank(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.n {
            return Err(Error::RankOutOfRange { r, n: self.n });
        }
        Ok(())
    }
}

/// `S(n, alpha) = sum_{i=1}^{n} i^-alpha`.
pub fn exact_partial_sum<T: Real>(params: &ZipfParams<T>) -> T {
    power_sum(params.n, params.alpha)
}

/// `sum_{i=1}^{n} i^-exponent` for any finite exponent, including the
/// negative exponents that appear in moments.
///
/// Terms are accumulated in ascending magnitude: from `i = n` down to 1 when
/// the exponent is non-negative, upwards otherwise.
pub fn power_sum<T: Real>(n: usize, exponent: T) -> T {
    let neg = -exponent;
    let term = |i: usize| T::from_count(i).powf(neg);
    let acc: CompensatedSum<T> = if exponent >= T::zero() {
        (1..=n).rev().map(term).collect()
    } else {
        (1..=n).map(term).collect()
    };
    acc.value()
}

/// `gamma + ln(n) + 1/(2n)`, the closed-form estimate of the harmonic number
/// `H_n = S(n, 1)`. Requires `n >= 1`.
pub fn harmonic_approx<T: Real>(n: usize) -> T {
    assert!(n >= 1, "harmonic_approx requires n >= 1");
    let nf = T::from_count(n);
    T::lit(EULER_GAMMA) + nf.ln() + (T::lit(2.0) * nf).recip()
}
