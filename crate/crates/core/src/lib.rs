//! Truncated Zeta (Zipf) distribution with closed-form approximations of its
//! normalizing constant.
//!
//! The truncated Zeta distribution puts mass `r^-alpha / S(n, alpha)` on rank
//! `r = 1..=n`, where `S(n, alpha) = sum_{i=1}^{n} i^-alpha` has no closed
//! form. This crate provides
//!
//! * the exact partial sum, compensated and O(n) ([`zeta`]),
//! * three O(1) approximations of it: the integral, the average of a lower and
//!   an upper integral, and a trapezoidal-rule form that keeps `k - 1` exact
//!   leading terms ([`approx`]),
//! * the distribution itself with PMF, CDF, quantile, moments and an inversion
//!   sampler ([`dist`]),
//! * relative-error evaluation and parameter sweeps ([`analysis`]).
//!
//! Everything is generic over the floating point scalar ([`Real`]); the `f64`
//! aliases below cover the common case.
//!
//! ```
//! use zeta_approx::{ApproxMethod, TruncatedZeta64, ZipfParams64};
//!
//! let params = ZipfParams64::new(0.8, 1000).unwrap();
//! let exact = TruncatedZeta64::new(params).pmf(1).unwrap();
//! let fast = zeta_approx::approx_pmf(1, &params, ApproxMethod::Trapezoidal(2)).unwrap();
//! assert!((fast / exact - 1.0).abs() < 1e-2);
//! ```

pub mod analysis;
pub mod approx;
pub mod dist;
pub mod error;
pub mod scalar;
pub mod zeta;

pub use analysis::{
    relative_error, relative_error_at_rank, relative_error_given_sum, relative_error_with,
    run_sweep, ErrorRecord, SweepGrid,
};
pub use approx::{
    approx_pmf, approx_sum, average_integral_sum, integral_sum, trapezoidal_sum,
    upper_integral_sum, ApproxMethod, ApproxOptions, DEFAULT_ALPHA_GUARD, DEFAULT_K,
};
pub use dist::TruncatedZeta;
pub use error::{Error, Result};
pub use scalar::{CompensatedSum, Real};
pub use zeta::{
    exact_partial_sum, harmonic_approx, power_sum, ZipfParams, EULER_GAMMA, MAX_SPECIES,
};

pub type ZipfParams64 = ZipfParams<f64>;
pub type ZipfParams32 = ZipfParams<f32>;
pub type TruncatedZeta64 = TruncatedZeta<f64>;
pub type TruncatedZeta32 = TruncatedZeta<f32>;
pub type ApproxOptions64 = ApproxOptions<f64>;
pub type ErrorRecord64 = ErrorRecord<f64>;
pub type SweepGrid64 = SweepGrid<f64>;
