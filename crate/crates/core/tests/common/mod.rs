#![allow(dead_code)]

/// Distance between two finite doubles in units in the last place.
pub fn ulps(a: f64, b: f64) -> u64 {
    assert!(a.is_finite() && b.is_finite(), "{a} vs {b}");
    if a == b {
        return 0;
    }
    let key = |x: f64| {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    };
    key(a).abs_diff(key(b))
}

pub fn assert_ulps(a: f64, b: f64, max: u64) {
    let d = ulps(a, b);
    assert!(d <= max, "{a:e} and {b:e} are {d} ulps apart (max {max})");
}

pub fn assert_rel(actual: f64, expected: f64, tol: f64) {
    let rel = ((actual - expected) / expected).abs();
    assert!(
        rel <= tol,
        "{actual:e} vs {expected:e}: relative error {rel:e} > {tol:e}"
    );
}

/// Independent reference for `sum_{i=1}^{n} i^-alpha`: pairwise summation of
/// terms computed with `exp(-alpha ln i)`, no compensation.
pub fn pairwise_partial_sum(n: usize, alpha: f64) -> f64 {
    fn rec(lo: usize, hi: usize, alpha: f64) -> f64 {
        if hi - lo < 8 {
            (lo..=hi).map(|i| (-alpha * (i as f64).ln()).exp()).sum()
        } else {
            let mid = lo + (hi - lo) / 2;
            rec(lo, mid, alpha) + rec(mid + 1, hi, alpha)
        }
    }
    rec(1, n, alpha)
}
