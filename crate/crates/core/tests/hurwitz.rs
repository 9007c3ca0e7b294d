use std::f64::consts::PI;

use proptest::prelude::*;
use zetaix::hurwitz::*;
use zetaix::numerics::gamma::gamma;
use zetaix::numerics::{bernoulli_poly, harmonic};
use zetaix::oracle::{oracle_hurwitz, oracle_hurwitz_deriv, OracleConfig};
use zetaix::polylog::{polylog_series, Sign};
use zetaix::riemann::riemann_zeta;
use zetaix::{ComplexValue, ZetaError};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn oracle(s: f64, x: f64) -> ComplexValue {
    oracle_hurwitz(s, x, &OracleConfig::default()).unwrap().value
}

fn oracle_d(s: f64, x: f64) -> ComplexValue {
    oracle_hurwitz_deriv(s, x, &OracleConfig::default()).unwrap().value
}

fn close(a: ComplexValue, b: ComplexValue, rel: f64) -> bool {
    (a - b).norm() <= rel * b.norm().max(1.0)
}

// Li_k(w) = Σ w^j/j^k for 0 < w < 1.
fn li_pos(k: i32, w: f64) -> f64 {
    (1..2000).map(|j| w.powi(j) / (j as f64).powi(k)).sum()
}

#[test]
fn f_and_g_examples() {
    let c = cfg();
    let fg = f_and_g(-0.5, 0.3, &c).unwrap();
    let expect = -PI * (0.6 * PI).sqrt() / gamma(1.5);
    assert!((fg.im_f - expect).abs() < 1e-14 * expect.abs());
    assert_eq!(fg.im_f, fg.im_g);

    let fg = f_and_g(0.5, 0.5, &c).unwrap();
    let li = polylog_series(0.5, 0.5, Sign::Minus, &c).unwrap();
    let resid = fg.re_g + 2.0 * li.value.re - fg.re_f;
    assert!(resid.abs() <= 2.0 * li.error_estimate + 1e-14 * fg.re_f.abs(), "{resid:e}");

    // Re F(−2+ε, 1/2) tends to μ²(H₂ − ln μ) + 2 Σ_{k even, k≠2} ζ(3−k) μ^k/k!, μ = π.
    let mu = PI;
    let mut limit = mu * mu * (harmonic(2) - mu.ln());
    let mut pow = 1.0;
    for k in 0..120 {
        if k > 0 {
            pow *= mu / k as f64;
        }
        if k % 2 == 0 && k != 2 {
            limit += 2.0 * riemann_zeta(0, 3.0 - k as f64).unwrap() * pow;
        }
    }
    let gap = |eps: f64| (f_and_g(-2.0 + eps, 0.5, &c).unwrap().re_f - limit).abs();
    let (g3, g4) = (gap(1e-3), gap(1e-4));
    assert!(g3 < 1e-2 * limit.abs(), "{g3}");
    assert!(g4 < 0.2 * g3, "{g4} vs {g3}");
}

#[test]
fn generic_examples() {
    let c = cfg();
    let v = hurwitz_generic(2.5, 0.3, &c).unwrap();
    assert_eq!(v.path, Path::GenericRight);
    assert!(close(v.value, oracle(2.5, 0.3), 1e-9));
    let v = hurwitz_generic(-0.5, 0.5, &c).unwrap();
    assert_eq!(v.path, Path::GenericLeft);
    assert!(close(v.value, oracle(-0.5, 0.5), 1e-8));
    assert!(matches!(
        hurwitz_generic(-1.999_999, 0.5, &c),
        Err(ZetaError::SnapRefused { nearest: -2, .. })
    ));
    assert!(hurwitz_generic(0.5, 1.0, &c).is_err());
    assert!(hurwitz_generic(0.5, 0.0, &c).is_err());
}

#[test]
fn generic_derivative_examples() {
    let c = cfg();
    for &(s, x) in &[(0.5, 0.5), (2.5, 0.3)] {
        let v = hurwitz_deriv_generic(s, x, &c).unwrap();
        assert!(close(v.value, oracle_d(s, x), 1e-6), "s={s}");
    }
    // Im part against the slope of the generic value itself.
    let (s, x, h) = (-1.25, 0.8, 1e-3);
    let f = |d: f64| hurwitz_generic(s + d * h, x, &c).unwrap().value;
    let fd = (f(-2.0) - f(-1.0) * 8.0 + f(1.0) * 8.0 - f(2.0)) / (12.0 * h);
    let v = hurwitz_deriv_generic(s, x, &c).unwrap().value;
    assert!((v.im - fd.im).abs() < 1e-8 * fd.im.abs().max(1.0));
    assert!((v.re - fd.re).abs() < 1e-8 * fd.re.abs().max(1.0));
}

#[test]
fn negative_integer_examples() {
    let c = cfg();
    let v = hurwitz_neg_int(0, 0.3, &c).unwrap();
    assert_eq!(v.path, Path::NegEven);
    assert!((v.value - ComplexValue::new(0.5, -0.3)).norm() < 1e-15);
    let v = hurwitz_neg_int(1, 0.5, &c).unwrap();
    assert_eq!(v.path, Path::NegOdd);
    assert!((v.value - ComplexValue::new(0.125 - 1.0 / 12.0, 0.25)).norm() < 1e-15);
    let v = hurwitz_neg_int(2, 0.5, &c).unwrap();
    assert!((v.value.re + 0.125).abs() < 1e-15);
}

#[test]
fn negative_integer_derivative_examples() {
    let c = cfg();
    let v = hurwitz_deriv_neg_int(0, 0.5, &c).unwrap().value;
    let expect = (PI / 2.0) * -0.5 - 0.5 * 0.5f64.ln() - 0.5 * (1.0 - (-PI).exp()).ln();
    assert!((v.re - expect).abs() < 1e-13, "{} vs {expect}", v.re);

    // The Li₂ term enters with a minus sign; the oracle decides.
    let x: f64 = 0.3;
    let v = hurwitz_deriv_neg_int(1, x, &c).unwrap().value;
    let re_m1 = x * x / 2.0 - 1.0 / 12.0;
    let expect = -(PI / 2.0) * re_m1 - (x / 2.0) * x.ln() - li_pos(2, (-2.0 * PI * x).exp()) / (4.0 * PI);
    assert!((v.im - expect).abs() < 1e-13, "{} vs {expect}", v.im);
    assert!((v.im - oracle_d(-1.0, x).im).abs() < 1e-6);

    let v = hurwitz_deriv_neg_int(2, 0.5, &c).unwrap().value;
    assert!(close(v, oracle_d(-2.0, 0.5), 1e-6));
}

#[test]
fn positive_integer_examples() {
    let c = cfg();
    let x: f64 = 0.5;
    let v = hurwitz_pos_int(2, x, &c).unwrap();
    assert_eq!(v.path, Path::PosEven);
    let w = (-PI).exp();
    let closed = -PI * PI * 2.0 * w / (1.0 - w).powi(2) - 2.0;
    assert!((v.value.re - closed).abs() < 1e-13);
    // Σ_{k≥0} Re (k + ix)^{−2} with the exact integral tail N/(N² + x²).
    let f = |k: f64| (k * k - x * x) / (k * k + x * x).powi(2);
    let n = 1000.0;
    let df = |k: f64| (f(k + 1e-3) - f(k - 1e-3)) / 2e-3;
    let direct: f64 =
        (0..1000).map(|k| f(k as f64)).sum::<f64>() + n / (n * n + x * x) + f(n) / 2.0 - df(n) / 12.0;
    assert!((v.value.re - direct).abs() < 1e-9, "{} vs {direct}", v.value.re);
    assert!(close(v.value, oracle(2.0, x), 1e-9));

    let v = hurwitz_pos_int(3, 0.5, &c).unwrap();
    assert_eq!(v.path, Path::PosOdd);
    assert!(close(v.value, oracle(3.0, 0.5), 1e-9));
    assert!(hurwitz_pos_int(1, 0.5, &c).is_err());
}

#[test]
fn positive_integer_derivative_examples() {
    let c = cfg();
    for &(n, x) in &[(2u32, 0.5), (3, 0.3), (4, 0.7), (5, 0.2)] {
        let v = hurwitz_deriv_pos_int(n, x, &c).unwrap().value;
        assert!(close(v, oracle_d(n as f64, x), 1e-6), "n={n} x={x}");
    }
}

#[test]
fn dispatch_examples() {
    let c = cfg();
    let v = evaluate(EvalPoint::new(-2.000_000_1, 0.5, 0), &c).unwrap();
    assert_eq!(v.path, Path::NegEven);
    assert_eq!(v.value, hurwitz_neg_int(2, 0.5, &c).unwrap().value);
    assert!(matches!(
        evaluate(EvalPoint::new(1.000_000_1, 0.5, 0), &c),
        Err(ZetaError::Pole | ZetaError::PoleProximity { .. })
    ));
    let v = evaluate(EvalPoint::new(0.5, 0.5, 1), &c).unwrap();
    assert_eq!(v.path, Path::GenericLeft);
    let v = evaluate(EvalPoint::new(3.000_000_2, 0.5, 1), &c).unwrap();
    assert_eq!(v.path, Path::PosOdd);
    assert!(evaluate(EvalPoint::new(0.5, 0.5, 2), &c).is_err());
    assert!(evaluate(EvalPoint::new(0.5, 1.5, 0), &c).is_err());
}

#[test]
fn adesi_zerbini_endpoints() {
    let c = cfg();
    for m in 0..=2u32 {
        for &x in &[0.25, 0.75] {
            let even = hurwitz_deriv_neg_int(2 * m, x, &c).unwrap().value.re;
            assert!((even - oracle_d(-2.0 * m as f64, x).re).abs() < 1e-6, "m={m} x={x}");
            let odd = hurwitz_deriv_neg_int(2 * m + 1, x, &c).unwrap().value.im;
            assert!((odd - oracle_d(-2.0 * m as f64 - 1.0, x).im).abs() < 1e-6, "m={m} x={x}");
        }
    }
}

#[test]
fn vanishing_combinations_small() {
    for m in 1..=3 {
        for &x in &[0.2, 0.5, 0.8] {
            let (g, f) = vanishing_combinations(m, x).unwrap();
            assert!(g.abs() <= 1e-12 && f.abs() <= 1e-12, "m={m} x={x}: {g:e} {f:e}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bernoulli_polynomial_values(n in 0u32..=10, x in 0.01f64..0.99) {
        let v = hurwitz_neg_int(n, x, &cfg()).unwrap().value;
        let b = -bernoulli_poly(n as usize + 1, ComplexValue::new(0.0, x)).unwrap() / (n as f64 + 1.0);
        prop_assert!((v.re - b.re).abs() <= 1e-10 * b.re.abs().max(1e-2));
        prop_assert!((v.im - b.im).abs() <= 1e-10 * b.im.abs().max(1e-2));
    }

    #[test]
    fn generic_matches_oracle(s in -4.0f64..5.0, x in 0.1f64..0.9) {
        prop_assume!((s - s.round()).abs() > 1e-3);
        let v = hurwitz_generic(s, x, &cfg()).unwrap().value;
        let o = oracle(s, x);
        prop_assert!((v - o).norm() <= 1e-8 * o.norm(), "{v} vs {o}");
    }

    #[test]
    fn derivative_is_slope(s in -4.0f64..5.0, x in 0.1f64..0.9) {
        prop_assume!((s - s.round()).abs() > 0.02 && (s - 1.0).abs() > 0.3);
        let c = cfg();
        let h = 1e-3;
        let f = |d: f64| hurwitz_generic(s + d * h, x, &c).unwrap().value;
        let fd = (f(-2.0) - f(-1.0) * 8.0 + f(1.0) * 8.0 - f(2.0)) / (12.0 * h);
        let v = hurwitz_deriv_generic(s, x, &c).unwrap().value;
        prop_assert!((v - fd).norm() <= 1e-6 * fd.norm().max(1.0), "{v} vs {fd}");
    }

    #[test]
    fn snap_routes_to_closed_form(n in -8i32..=8, x in 0.05f64..0.95, d in -9e-7f64..9e-7, deriv in 0u8..=1) {
        prop_assume!(n != 1);
        let v = evaluate(EvalPoint::new(n as f64 + d, x, deriv), &cfg()).unwrap();
        let exact = evaluate(EvalPoint::new(n as f64, x, deriv), &cfg()).unwrap();
        prop_assert_eq!(v.value, exact.value);
        prop_assert!(matches!(v.path, Path::NegEven | Path::NegOdd | Path::PosEven | Path::PosOdd));
    }

    #[test]
    fn evaluation_is_deterministic(s in -6.0f64..6.0, x in 0.05f64..0.95) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let a = evaluate(EvalPoint::new(s, x, 0), &cfg());
        let b = evaluate(EvalPoint::new(s, x, 0), &cfg());
        prop_assert_eq!(a.map(|r| r.value), b.map(|r| r.value));
    }
}
