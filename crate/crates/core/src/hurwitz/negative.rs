//! Closed forms at s = −n, n ≥ 0.
//!
//! Values are polynomials in x with Bernoulli coefficients (they equal
//! −B_{n+1}(ix)/(n+1)). Derivatives add a log x term, a positive-order
//! Li(e^{−2πx}) and a ζ_R' coefficient series.

use std::f64::consts::PI;

use super::config::check_x;
use super::{EvalConfig, EvalOutcome, Path, LN_2PI};
use crate::numerics::{bernoulli_number, factorial, harmonic, EULER_GAMMA};
use crate::polylog::{polylog_direct, CoeffSeries};
use crate::{ComplexValue, Result, ZetaError};

/// Largest n with every Bernoulli coefficient inside the cached table.
const NEG_CAP: u32 = 59;

fn sign(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_n(n: u32) -> Result<()> {
    if n > NEG_CAP {
        return Err(ZetaError::Domain(format!("s=-{n} below -{NEG_CAP}")));
    }
    Ok(())
}

/// ζ_H(−n, ix) and a rounding bound.
fn neg_value(n: u32, x: f64) -> Result<(ComplexValue, f64)> {
    let m = n / 2;
    let mut mag = 0.0;
    let v = if n.is_multiple_of(2) {
        // Re = (−1)^m x^{2m}/2
        // Im = (2m)! Σ_{j<m} (−1)^{j+1} B_{2(m−j)} x^{2j+1}/([2(m−j)]!(2j+1)!) + (−1)^{m+1} x^{2m+1}/(2m+1)
        let re = sign(m) * x.powi(2 * m as i32) / 2.0;
        let f2m = factorial(2 * m as usize);
        let mut im = sign(m + 1) * x.powi(2 * m as i32 + 1) / (2 * m + 1) as f64;
        mag += im.abs();
        for j in 0..m {
            let k = 2 * (m - j) as usize;
            let t = sign(j + 1) * f2m * bernoulli_number(k)? * x.powi(2 * j as i32 + 1)
                / (factorial(k) * factorial(2 * j as usize + 1));
            im += t;
            mag += t.abs();
        }
        ComplexValue::new(re, im)
    } else {
        // Re = (2m+1)! Σ_{j≤m} (−1)^{j+1} B_{2(m−j+1)} x^{2j}/([2(m−j+1)]!(2j)!) + (−1)^m x^{2m+2}/(2(m+1))
        // Im = (−1)^m x^{2m+1}/2
        let f = factorial(2 * m as usize + 1);
        let mut re = sign(m) * x.powi(2 * m as i32 + 2) / (2 * (m + 1)) as f64;
        mag += re.abs();
        for j in 0..=m {
            let k = 2 * (m - j + 1) as usize;
            let t = sign(j + 1) * f * bernoulli_number(k)? * x.powi(2 * j as i32)
                / (factorial(k) * factorial(2 * j as usize));
            re += t;
            mag += t.abs();
        }
        let im = sign(m) * x.powi(2 * m as i32 + 1) / 2.0;
        ComplexValue::new(re, im)
    };
    Ok((v, 4.0 * f64::EPSILON * (mag + v.norm())))
}

/// ζ_H(−n, ix) for n ≥ 0.
///
/// ```
/// use zetaix::hurwitz::{hurwitz_neg_int, EvalConfig};
/// let v = hurwitz_neg_int(0, 0.3, &EvalConfig::default()).unwrap().value;
/// assert_eq!((v.re, v.im), (0.5, -0.3));
/// ```
pub fn hurwitz_neg_int(n: u32, x: f64, _cfg: &EvalConfig) -> Result<EvalOutcome> {
    check_x(x)?;
    check_n(n)?;
    let (value, err) = neg_value(n, x)?;
    let path = if n.is_multiple_of(2) { Path::NegEven } else { Path::NegOdd };
    Ok(EvalOutcome { value, path, error_estimate: err })
}

/// ∂_s ζ_H(s, ix) at s = −n, n ≥ 0.
///
/// With μ = 2πx and ζ = ζ_H(−n, ix), for n = 2m:
///
/// * Re = (π/2) Im ζ + (−1)^{m+1} (x^{2m}/2) ln x + (−1)^m (2m)!/(2(2π)^{2m}) Li_{2m+1}(e^{−μ})
/// * Im = Im ζ (ln 2π + γ − H_{2m}) + (−1)^{m+1} (π/2) x^{2m}
///   + (−1)^{m+1} (2m)!/(π(2π)^{2m}) Σ_k ζ_R'(2m−2k) μ^{2k+1}/(2k+1)!
///
/// and for n = 2m+1:
///
/// * Re = Re ζ (ln 2π + γ − H_{2m+1}) + (−1)^m (π/2) x^{2m+1}
///   + (−1)^m (2m+1)!/(π(2π)^{2m+1}) Σ_k ζ_R'(2m+2−2k) μ^{2k}/(2k)!
/// * Im = −(π/2) Re ζ + (−1)^{m+1} (x^{2m+1}/2) ln x + (−1)^{m+1} (2m+1)!/(2(2π)^{2m+1}) Li_{2m+2}(e^{−μ})
pub fn hurwitz_deriv_neg_int(n: u32, x: f64, cfg: &EvalConfig) -> Result<EvalOutcome> {
    check_x(x)?;
    check_n(n)?;
    cfg.validate()?;
    let (z, zerr) = neg_value(n, x)?;
    let m = n / 2;
    let mu = 2.0 * PI * x;
    let two_pi_n = (2.0 * PI).powi(n as i32);
    let fact = factorial(n as usize);
    let shift = LN_2PI + EULER_GAMMA - harmonic(n as u64);
    let li = polylog_direct(n as f64 + 1.0, x, 0, cfg)?;
    let xn = x.powi(n as i32);
    let (re, im, series_err) = if n.is_multiple_of(2) {
        let series = CoeffSeries::new(1, (2 * m) as f64, 2, 1).sum(mu, cfg)?;
        let re = 0.5 * PI * z.im
            + sign(m + 1) * 0.5 * xn * x.ln()
            + sign(m) * fact / (2.0 * two_pi_n) * li.value.re;
        let im = z.im * shift
            + sign(m + 1) * 0.5 * PI * xn
            + sign(m + 1) * fact / (PI * two_pi_n) * series.value.re;
        (re, im, fact / (PI * two_pi_n) * series.error_estimate)
    } else {
        let series = CoeffSeries::new(1, (2 * m + 2) as f64, 2, 0).sum(mu, cfg)?;
        let re = z.re * shift + sign(m) * 0.5 * PI * xn + sign(m) * fact / (PI * two_pi_n) * series.value.re;
        let im = -0.5 * PI * z.re
            + sign(m + 1) * 0.5 * xn * x.ln()
            + sign(m + 1) * fact / (2.0 * two_pi_n) * li.value.re;
        (re, im, fact / (PI * two_pi_n) * series.error_estimate)
    };
    let value = ComplexValue::new(re, im);
    let err = series_err
        + fact / two_pi_n * li.error_estimate
        + zerr * (shift.abs() + PI)
        + 8.0 * f64::EPSILON * value.norm();
    let path = if n.is_multiple_of(2) { Path::NegEven } else { Path::NegOdd };
    Ok(EvalOutcome { value, path, error_estimate: err })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bernoulli_poly;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn value_examples() {
        let v = hurwitz_neg_int(1, 0.5, &cfg()).unwrap();
        assert!((v.value.re - (0.125 - 1.0 / 12.0)).abs() < 1e-16);
        assert_eq!(v.value.im, 0.25);
        assert_eq!(v.path, Path::NegOdd);
        let v = hurwitz_neg_int(2, 0.5, &cfg()).unwrap();
        assert_eq!(v.value.re, -0.125);
        assert_eq!(v.path, Path::NegEven);
        assert!(hurwitz_neg_int(60, 0.5, &cfg()).is_err());
        assert!(hurwitz_neg_int(2, 1.0, &cfg()).is_err());
    }

    #[test]
    fn values_are_bernoulli_polynomials() {
        for n in 0..=20u32 {
            for &x in &[0.1, 0.45, 0.9] {
                let v = hurwitz_neg_int(n, x, &cfg()).unwrap().value;
                let b = -bernoulli_poly(n as usize + 1, ComplexValue::new(0.0, x)).unwrap() / (n + 1) as f64;
                assert!((v - b).norm() < 1e-13 * b.norm().max(1e-3), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn derivative_at_zero() {
        // Re ∂ζ_H(0, i/2) = (π/2)(−1/2) − (1/2) ln(1/2) + (1/2) Li_1(e^{−π})
        let x = 0.5;
        let d = hurwitz_deriv_neg_int(0, x, &cfg()).unwrap().value;
        let li1 = -(-(-PI).exp()).ln_1p();
        let want = -PI / 4.0 - 0.5 * x.ln() + 0.5 * li1;
        assert!((d.re - want).abs() < 1e-15);
    }

    #[test]
    fn derivative_at_minus_one_imaginary() {
        // Im ∂ζ_H(−1, 0.3i) = −(π/2) Re ζ_H(−1, 0.3i) − (0.3/2) ln 0.3 − Li_2(e^{−0.6π})/(4π)
        let x = 0.3;
        let z = hurwitz_neg_int(1, x, &cfg()).unwrap().value;
        let d = hurwitz_deriv_neg_int(1, x, &cfg()).unwrap().value;
        let w = (-0.6 * PI).exp();
        let li2: f64 = (1..200).map(|k| w.powi(k) / (k * k) as f64).sum();
        let want = -0.5 * PI * z.re - 0.5 * x * x.ln() - li2 / (4.0 * PI);
        assert!((d.im - want).abs() < 1e-15, "{} {}", d.im, want);
    }
}
