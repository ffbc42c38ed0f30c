mod common;

use common::{assert_ulps, ulps};
use proptest::prelude::*;
use zeta_approx::{
    approx_pmf, average_integral_sum, exact_partial_sum, harmonic_approx, integral_sum,
    relative_error, relative_error_at_rank, run_sweep, trapezoidal_sum, upper_integral_sum,
    ApproxMethod, ApproxOptions64, ErrorRecord64, SweepGrid64, TruncatedZeta64, ZipfParams64,
};

const BAND: f64 = 1e-8;
const EPS: f64 = f64::EPSILON;

fn p(alpha: f64, n: usize) -> ZipfParams64 {
    ZipfParams64::new(alpha, n).unwrap()
}

/// alpha in (0, 3] away from the singular band at 1.
fn alpha_off_one() -> impl Strategy<Value = f64> {
    (1e-3f64..=3.0).prop_filter("outside guard band", |a| (a - 1.0).abs() > 1e-6)
}

/// alpha where the closed forms are well conditioned.
fn alpha_well_away() -> impl Strategy<Value = f64> {
    (1e-3f64..=3.0).prop_filter("well conditioned", |a| (a - 1.0).abs() >= 0.2)
}

/// Ratio of the largest intermediate `x^(1-alpha) / (1-alpha)` term to the
/// result; rounding in those terms is amplified by this factor when they cancel.
fn cancellation_scale(alpha: f64, points: &[f64], result: f64) -> f64 {
    let e = 1.0 - alpha;
    let largest = points
        .iter()
        .map(|x| (x.powf(e) / e).abs())
        .fold(0.0, f64::max);
    (largest / result.abs()).max(1.0)
}

/// `|a - b| <= ulps * eps * max(|b|, largest cancelling term)`.
fn assert_conditioned(a: f64, b: f64, ulps: f64, scale: f64) {
    let tol = ulps * EPS * scale * b.abs();
    assert!(
        (a - b).abs() <= tol,
        "{a:e} vs {b:e} differ by {:e} > {tol:e}",
        (a - b).abs()
    );
}

fn reduced_k2_pmf(r: usize, alpha: f64, n: usize) -> f64 {
    let nf = n as f64;
    let e = 1.0 - alpha;
    (r as f64).powf(-alpha)
        / (nf.powf(-alpha) * (0.5 + nf / e) + 2f64.powf(-alpha) * (0.5 - 2.0 / e) + 1.0)
}

fn closed_methods() -> impl Strategy<Value = ApproxMethod> {
    prop_oneof![
        Just(ApproxMethod::Integral),
        Just(ApproxMethod::AverageIntegral),
        (2usize..=10).prop_map(ApproxMethod::Trapezoidal),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sum_at_alpha_zero_is_n(n in 1usize..50_000) {
        prop_assert_eq!(exact_partial_sum(&p(0.0, n)), n as f64);
    }

    #[test]
    fn sum_of_one_term_is_one(alpha in 0.0f64..20.0) {
        prop_assert_eq!(exact_partial_sum(&p(alpha, 1)), 1.0);
    }

    #[test]
    fn incremental_consistency(n in 1usize..5000, alpha in 0.0f64..4.0) {
        let next = exact_partial_sum(&p(alpha, n + 1));
        let step = exact_partial_sum(&p(alpha, n)) + ((n + 1) as f64).powf(-alpha);
        prop_assert!(ulps(next, step) <= 2, "{} vs {}", next, step);
    }

    #[test]
    fn sum_decreases_in_alpha(n in 2usize..5000, a in 0.0f64..3.0, gap in 1e-6f64..1.0) {
        prop_assert!(exact_partial_sum(&p(a, n)) > exact_partial_sum(&p(a + gap, n)));
    }

    #[test]
    fn sum_nondecreasing_in_n(n in 1usize..5000, alpha in 0.0f64..4.0) {
        prop_assert!(exact_partial_sum(&p(alpha, n + 1)) >= exact_partial_sum(&p(alpha, n)));
    }

    // The omitted -1/(12 n^2) term keeps n = 10..=15 above 1e-4; see
    // `harmonic_closed_form_threshold`.
    #[test]
    fn harmonic_closed_form_quality(n in 16usize..200_000) {
        let exact = exact_partial_sum(&p(1.0, n));
        prop_assert!((harmonic_approx::<f64>(n) - exact).abs() / exact < 1e-4);
    }

    #[test]
    fn integrals_bracket_the_sum(alpha in alpha_off_one(), n in 2usize..=10_000) {
        let params = p(alpha, n);
        let s = exact_partial_sum(&params);
        prop_assert!(integral_sum(&params).unwrap() < s);
        prop_assert!(s < upper_integral_sum(&params).unwrap());
    }

    #[test]
    fn all_forms_exact_at_alpha_zero(n in 2usize..100_000, k in 2usize..50) {
        let params = p(0.0, n);
        let nf = n as f64;
        assert_ulps(integral_sum(&params).unwrap(), nf, 2);
        assert_ulps(upper_integral_sum(&params).unwrap(), nf, 2);
        assert_ulps(average_integral_sum(&params).unwrap(), nf, 2);
        assert_ulps(trapezoidal_sum(&params, k.min(n)).unwrap(), nf, 2);
    }

    #[test]
    fn trapezoidal_exact_at_k_equal_n(alpha in alpha_off_one(), n in 2usize..3000) {
        let params = p(alpha, n);
        assert_ulps(trapezoidal_sum(&params, n).unwrap(), exact_partial_sum(&params), 4);
    }

    #[test]
    fn refinement_in_k(alpha in alpha_off_one(), n in 10usize..=10_000) {
        let params = p(alpha, n);
        let s = exact_partial_sum(&params);
        let errs: Vec<f64> = [2, 3, 5, 10]
            .iter()
            .map(|&k| (trapezoidal_sum(&params, k).unwrap() - s).abs())
            .collect();
        prop_assert!(errs.windows(2).all(|w| w[1] <= w[0]), "{:?}", errs);
    }

    #[test]
    fn averaging_identity(alpha in alpha_well_away(), n in 1usize..=10_000) {
        let params = p(alpha, n);
        let mean = (integral_sum(&params).unwrap() + upper_integral_sum(&params).unwrap()) / 2.0;
        assert_ulps(average_integral_sum(&params).unwrap(), mean, 4);
    }

    #[test]
    fn averaging_identity_near_one(alpha in alpha_off_one(), n in 1usize..=10_000) {
        let params = p(alpha, n);
        let avg = average_integral_sum(&params).unwrap();
        let mean = (integral_sum(&params).unwrap() + upper_integral_sum(&params).unwrap()) / 2.0;
        let scale = cancellation_scale(alpha, &[n as f64 + 1.0, n as f64], avg);
        assert_conditioned(avg, mean, 4.0, scale);
    }

    #[test]
    fn trapezoidal_k2_reduced_form(alpha in alpha_well_away(), n in 2usize..=10_000, r_frac in 0.0f64..1.0) {
        let params = p(alpha, n);
        let r = 1 + ((n - 1) as f64 * r_frac) as usize;
        assert_ulps(
            approx_pmf(r, &params, ApproxMethod::Trapezoidal(2)).unwrap(),
            reduced_k2_pmf(r, alpha, n),
            8,
        );
    }

    #[test]
    fn trapezoidal_k2_reduced_form_near_one(alpha in alpha_off_one(), n in 2usize..=10_000) {
        let params = p(alpha, n);
        let pmf = approx_pmf(1, &params, ApproxMethod::Trapezoidal(2)).unwrap();
        let scale = cancellation_scale(alpha, &[n as f64, 2.0], pmf.recip());
        assert_conditioned(pmf, reduced_k2_pmf(1, alpha, n), 8.0, scale);
    }

    #[test]
    fn trapezoidal_expanded_denominator(alpha in alpha_well_away(), n in 2usize..=10_000, k in 2usize..=10) {
        let params = p(alpha, n);
        let k = k.min(n);
        let opts = ApproxOptions64::default();
        // two independently rounded routes, each a few ulps from the true value
        assert_ulps(
            opts.trapezoidal_sum(&params, k).unwrap(),
            opts.trapezoidal_denominator(&params, k).unwrap(),
            8,
        );
    }

    #[test]
    fn trapezoidal_expanded_denominator_near_one(alpha in alpha_off_one(), n in 2usize..=10_000, k in 2usize..=10) {
        let params = p(alpha, n);
        let k = k.min(n);
        let opts = ApproxOptions64::default();
        let sum = opts.trapezoidal_sum(&params, k).unwrap();
        let expanded = opts.trapezoidal_denominator(&params, k).unwrap();
        let scale = cancellation_scale(alpha, &[n as f64, k as f64], sum);
        assert_conditioned(sum, expanded, 8.0, scale);
    }

    #[test]
    fn pmf_normalized(alpha in 0.0f64..4.0, n in 1usize..3000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        let total: f64 = (1..=n).map(|r| z.pmf(r).unwrap()).sum();
        prop_assert!((total - 1.0).abs() <= n as f64 * 4.0 * EPS);
    }

    #[test]
    fn pmf_strictly_decreasing(alpha in 1e-3f64..4.0, n in 2usize..2000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        for r in 1..n {
            prop_assert!(z.pmf(r + 1).unwrap() < z.pmf(r).unwrap());
        }
    }

    #[test]
    fn zipf_constancy(alpha in 0.0f64..4.0, n in 1usize..2000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        let first = z.pmf(1).unwrap();
        for r in 2..=n {
            let scaled = (r as f64).powf(alpha) * z.pmf(r).unwrap();
            assert_ulps(scaled, first, 4);
        }
    }

    #[test]
    fn error_independent_of_rank(alpha in alpha_off_one(), n in 2usize..2000, method in closed_methods()) {
        prop_assume!(method.k().is_none_or(|k| k <= n));
        let params = p(alpha, n);
        let z = TruncatedZeta64::new(params);
        let base = approx_pmf(1, &params, method).unwrap() / z.pmf(1).unwrap();
        for r in 2..=n {
            let ratio = approx_pmf(r, &params, method).unwrap() / z.pmf(r).unwrap();
            assert_ulps(ratio, base, 8);
        }
    }

    #[test]
    fn cdf_monotone_and_complete(alpha in 0.0f64..4.0, n in 1usize..3000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        let cdf: Vec<f64> = (1..=n).map(|r| z.cdf(r).unwrap()).collect();
        prop_assert!(cdf.windows(2).all(|w| w[0] <= w[1]));
        assert_ulps(cdf[n - 1], 1.0, 4);
    }

    #[test]
    fn quantile_inverts_cdf(alpha in 0.0f64..3.0, n in 1usize..2000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        for r in 1..=n {
            prop_assert_eq!(z.quantile(z.cdf(r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn cdf_of_quantile_covers_u(alpha in 0.0f64..3.0, n in 1usize..2000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        for i in 0..=1000 {
            let u = i as f64 / 1000.0;
            let q = z.quantile(u).unwrap();
            prop_assert!((1..=n).contains(&q));
            if u < 1.0 {
                prop_assert!(z.cdf(q).unwrap() >= u);
            }
            prop_assert!(q == 1 || z.cdf(q - 1).unwrap() < u);
        }
    }

    #[test]
    fn first_moment_two_routes(alpha in 0.0f64..4.0, n in 1usize..3000) {
        let z = TruncatedZeta64::new(p(alpha, n));
        let closed = exact_partial_sum(&p(alpha, n)) ;
        let via_sums = zeta_approx::power_sum(n, alpha - 1.0) / closed;
        assert_ulps(z.moment(1).unwrap(), via_sums, 8);
        let direct: f64 = (1..=n).map(|r| r as f64 * z.pmf(r).unwrap()).sum();
        prop_assert!((direct / z.moment(1).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn error_definition_consistency(alpha in alpha_off_one(), n in 2usize..=10_000, method in closed_methods()) {
        prop_assume!(method.k().is_none_or(|k| k <= n));
        let params = p(alpha, n);
        let formula = relative_error(&params, method).unwrap();
        let approx = zeta_approx::approx_sum(&params, method).unwrap();
        let ratio = exact_partial_sum(&params) / approx - 1.0;
        let nf = n as f64;
        let scale = cancellation_scale(alpha, &[nf + 1.0, nf, method.k().unwrap_or(1) as f64], approx);
        // the trapezoidal error formula uses the expanded denominator, a second rounding route
        let budget = if method.k().is_some() { 8.0 } else { 4.0 };
        prop_assert!((formula - ratio).abs() <= budget * EPS * scale, "{:e} vs {:e}", formula, ratio);
        let opts = ApproxOptions64::default();
        let at_rank = relative_error_at_rank(1 + n / 3, &params, method, &opts).unwrap();
        prop_assert!((ratio - at_rank).abs() <= 8.0 * EPS, "{:e} vs {:e}", ratio, at_rank);
        prop_assert!((formula - at_rank).abs() <= (budget + 8.0) * EPS * scale);
    }

    #[test]
    fn integral_error_positive(alpha in alpha_off_one(), n in 2usize..=10_000) {
        prop_assert!(relative_error(&p(alpha, n), ApproxMethod::Integral).unwrap() > 0.0);
    }

    #[test]
    fn limit_branch_continuous(n in 2usize..10_000, method in closed_methods(), side in prop::bool::ANY) {
        prop_assume!(method.k().is_none_or(|k| k <= n));
        let opts = ApproxOptions64::default().with_limit_branch(true);
        let at_one = opts.approx_sum(&p(1.0, n), method).unwrap();
        let off = if side { 1.0 + 1e-6 } else { 1.0 - 1e-6 };
        let near = opts.approx_sum(&p(off, n), method).unwrap();
        prop_assert!((near / at_one - 1.0).abs() < 1e-4);
        prop_assert!(BAND < 1e-6);
    }
}

#[test]
fn harmonic_closed_form_threshold() {
    let rel = |n: usize| {
        let exact = exact_partial_sum(&p(1.0, n));
        (harmonic_approx::<f64>(n) - exact).abs() / exact
    };
    assert!((rel(10) - 2.842e-4).abs() < 1e-7);
    assert!(rel(15) > 1e-4);
    assert!((16..=5000).all(|n| rel(n) < 1e-4));
}

fn figure_sweep(methods: Vec<ApproxMethod>) -> Vec<ErrorRecord64> {
    run_sweep(&SweepGrid64::figures(methods)).unwrap()
}

fn lookup(recs: &[ErrorRecord64], method: ApproxMethod, n: usize) -> Vec<&ErrorRecord64> {
    recs.iter()
        .filter(|r| r.method == method && r.n == n)
        .collect()
}

#[test]
fn error_shrinks_with_n() {
    let methods = vec![
        ApproxMethod::Integral,
        ApproxMethod::Trapezoidal(2),
        ApproxMethod::Trapezoidal(3),
        ApproxMethod::Trapezoidal(5),
        ApproxMethod::Trapezoidal(10),
    ];
    let recs = figure_sweep(methods.clone());
    for m in methods {
        let small = lookup(&recs, m, 100);
        let mid = lookup(&recs, m, 1000);
        let large = lookup(&recs, m, 10_000);
        for ((a, b), c) in small.iter().zip(&mid).zip(&large) {
            assert_eq!(a.alpha, c.alpha);
            assert!(
                c.epsilon.abs() <= b.epsilon.abs() && b.epsilon.abs() <= a.epsilon.abs(),
                "{m} at alpha {}: {:e} {:e} {:e}",
                a.alpha,
                a.epsilon,
                b.epsilon,
                c.epsilon
            );
        }
    }
}

#[test]
fn error_grows_with_alpha_below_one() {
    let recs = figure_sweep(vec![ApproxMethod::Integral, ApproxMethod::AverageIntegral]);
    for m in [ApproxMethod::Integral, ApproxMethod::AverageIntegral] {
        for n in [100, 1000, 10_000] {
            let errs: Vec<f64> = lookup(&recs, m, n)
                .iter()
                .filter(|r| r.alpha <= 0.9 + 1e-9)
                .map(|r| r.epsilon.abs())
                .collect();
            assert_eq!(errs.len(), 81);
            assert!(errs.windows(2).all(|w| w[0] <= w[1]), "{m} n={n}");
        }
    }
}

#[test]
fn trapezoidal_dominates_averaged_dominates_integral() {
    let methods = vec![
        ApproxMethod::Integral,
        ApproxMethod::AverageIntegral,
        ApproxMethod::Trapezoidal(2),
    ];
    let recs = figure_sweep(methods);
    let per = recs.len() / 3;
    for i in 0..per {
        let (int, ave, trap) = (&recs[i], &recs[per + i], &recs[2 * per + i]);
        assert_eq!((int.n, int.alpha), (trap.n, trap.alpha));
        assert!(
            trap.epsilon.abs() < ave.epsilon.abs() && ave.epsilon.abs() < int.epsilon.abs(),
            "n={} alpha={}",
            int.n,
            int.alpha
        );
    }
}

#[test]
fn integral_error_positive_on_grid() {
    let recs = figure_sweep(vec![ApproxMethod::Integral]);
    assert!(recs.iter().all(|r| r.epsilon > 0.0));
}

#[test]
fn sweep_records_are_finite() {
    let recs = figure_sweep(vec![ApproxMethod::Trapezoidal(5)]);
    assert!(recs.iter().all(|r| r.epsilon.is_finite()));
}
