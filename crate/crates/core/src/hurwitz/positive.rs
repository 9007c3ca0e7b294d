//! Closed forms at s = n ≥ 2.
//!
//! At even n the combination G(n, x) vanishes and at odd n the combination
//! F(n, x) does, because Li_{−k}(w) = (−1)^{k+1} Li_{−k}(1/w) for k ≥ 1. The
//! surviving combination is a rational function of e^{−2πx}; the other part
//! comes out of the Γ/trig limit as a ζ_R' series.

use std::f64::consts::PI;

use super::config::check_x;
use super::{EvalConfig, EvalOutcome, Path, LN_2PI};
use crate::numerics::{factorial, harmonic, EULERIAN_CAP, EULER_GAMMA};
use crate::polylog::{polylog_direct, polylog_neg_int, CoeffSeries};
use crate::{ComplexValue, Result, ZetaError};

fn sign(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(ZetaError::Domain(format!("positive fast path needs n >= 2, got {n}")));
    }
    if n > 170 {
        return Err(ZetaError::Domain(format!("s={n} above 170")));
    }
    Ok(())
}

/// Li_{−k}(e^{−2πx}), closed form while the Eulerian table reaches.
fn li_neg(k: u32, x: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    if (k as usize) <= EULERIAN_CAP {
        let v = polylog_neg_int(k as usize, (-2.0 * PI * x).exp())?;
        Ok((v, 4.0 * (k + 1) as f64 * f64::EPSILON * v.abs()))
    } else {
        let r = polylog_direct(-(k as f64), x, 0, cfg)?;
        Ok((r.value.re, r.error_estimate))
    }
}

/// Reconstructed G(2m, x) and F(2m+1, x) from the closed-form polylogarithms.
///
/// Both vanish identically for m ≥ 1; the return values are the residuals.
pub fn vanishing_combinations(m: u32, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    if m == 0 {
        return Err(ZetaError::Domain("m must be at least 1".into()));
    }
    let mu = 2.0 * PI * x;
    let (up, down) = (mu.exp(), (-mu).exp());
    let odd = (2 * m - 1) as usize;
    let even = (2 * m) as usize;
    let g = polylog_neg_int(odd, up)? - polylog_neg_int(odd, down)?;
    let f = polylog_neg_int(even, up)? + polylog_neg_int(even, down)?;
    Ok((g, f))
}

struct Common {
    m: u32,
    mu: f64,
    two_pi_2m: f64,
    shift: f64,
}

fn common(n: u32, x: f64) -> Common {
    let m = n / 2;
    Common {
        m,
        mu: 2.0 * PI * x,
        two_pi_2m: (2.0 * PI).powi(2 * m as i32),
        shift: LN_2PI + EULER_GAMMA - harmonic(n as u64 - 1),
    }
}

// Value at s = n plus its error estimate.
fn pos_value(n: u32, x: f64, cfg: &EvalConfig) -> Result<(ComplexValue, f64)> {
    let c = common(n, x);
    let m = c.m;
    if n.is_multiple_of(2) {
        // Re = (−1)^m (2π)^{2m}/(4(2m−1)!) F(2m,x) + (−1)^m x^{−2m}/2, F = 2 Li_{1−2m}(e^{−μ})
        // Im = (−1)^{m+1} (2π)^{2m}/(π(2m−1)!) Σ ζ_R'(−2(m+k)) μ^{2k+1}/(2k+1)!
        let fm = factorial(2 * m as usize - 1);
        let (li, li_err) = li_neg(2 * m - 1, x, cfg)?;
        let f_val = 2.0 * li;
        let a = c.two_pi_2m / (4.0 * fm);
        let tail = sign(m) * 0.5 * x.powi(-(n as i32));
        let re = sign(m) * a * f_val + tail;
        let b = c.two_pi_2m / (PI * fm);
        let series = CoeffSeries::new(1, -2.0 * m as f64, 2, 1).sum(c.mu, cfg)?;
        let im = sign(m + 1) * b * series.value.re;
        let v = ComplexValue::new(re, im);
        let err = 2.0 * a * li_err + b * series.error_estimate + 4.0 * f64::EPSILON * (tail.abs() + v.norm());
        Ok((v, err))
    } else {
        // Re = (−1)^m 2(2π)^{2m}/(2m)! Σ ζ_R'(−2(m+k)) μ^{2k}/(2k)!
        // Im = (−1)^m (2π)^{2m+1}/(4(2m)!) G(2m+1,x) + (−1)^{m+1} x^{−2m−1}/2, G = −2 Li_{−2m}(e^{−μ})
        let fm = factorial(2 * m as usize);
        let b = 2.0 * c.two_pi_2m / fm;
        let series = CoeffSeries::new(1, -2.0 * m as f64, 2, 0).sum(c.mu, cfg)?;
        let re = sign(m) * b * series.value.re;
        let (li, li_err) = li_neg(2 * m, x, cfg)?;
        let g_val = -2.0 * li;
        let a = c.two_pi_2m * 2.0 * PI / (4.0 * fm);
        let tail = sign(m + 1) * 0.5 * x.powi(-(n as i32));
        let im = sign(m) * a * g_val + tail;
        let v = ComplexValue::new(re, im);
        let err = 2.0 * a * li_err + b * series.error_estimate + 4.0 * f64::EPSILON * (tail.abs() + v.norm());
        Ok((v, err))
    }
}

/// ζ_H(n, ix) for integer n ≥ 2.
///
/// ```
/// use zetaix::hurwitz::{hurwitz_pos_int, EvalConfig};
/// let v = hurwitz_pos_int(2, 0.5, &EvalConfig::default()).unwrap().value;
/// let w = (-std::f64::consts::PI).exp();
/// let want = -std::f64::consts::PI.powi(2) * 2.0 * w / (1.0 - w).powi(2) - 2.0;
/// assert!((v.re - want).abs() < 1e-13);
/// ```
pub fn hurwitz_pos_int(n: u32, x: f64, cfg: &EvalConfig) -> Result<EvalOutcome> {
    check_x(x)?;
    check_n(n)?;
    cfg.validate()?;
    let (value, error_estimate) = pos_value(n, x, cfg)?;
    let path = if n.is_multiple_of(2) { Path::PosEven } else { Path::PosOdd };
    Ok(EvalOutcome { value, path, error_estimate })
}

/// ∂_s ζ_H(s, ix) at s = n ≥ 2.
///
/// With c = ln 2π + γ − H_{n−1}, μ = 2πx and ζ = ζ_H(n, ix), for n = 2m:
///
/// * Re = c Re ζ + (−1)^{m+1} x^{−2m}(ln μ + γ − H_{2m−1})
///   + (−1)^{m+1} (2π)^{2m}/(2(2m−1)!) Σ_k ζ_R'(1−2(m+k)) μ^{2k}/(2k)!
/// * Im = c Im ζ + (−1)^{m+1} (π/2) x^{−2m}
///   + (−1)^m (2π)^{2m−1}/(2m−1)! Σ_k ζ_R''(−2(m+k)) μ^{2k+1}/(2k+1)!
///
/// and for n = 2m+1:
///
/// * Re = c Re ζ + (−1)^{m+1} (π/2) x^{−2m−1}
///   + (−1)^{m+1} (2π)^{2m}/(2m)! Σ_k ζ_R''(−2(m+k)) μ^{2k}/(2k)!
/// * Im = c Im ζ + (−1)^m x^{−2m−1}(ln μ + γ − H_{2m})
///   + (−1)^{m+1} π(2π)^{2m}/(2m)! Σ_k ζ_R'(−1−2(m+k)) μ^{2k+1}/(2k+1)!
pub fn hurwitz_deriv_pos_int(n: u32, x: f64, cfg: &EvalConfig) -> Result<EvalOutcome> {
    check_x(x)?;
    check_n(n)?;
    cfg.validate()?;
    let (z, zerr) = pos_value(n, x, cfg)?;
    let c = common(n, x);
    let m = c.m;
    let xn = x.powi(-(n as i32));
    let log_block = c.mu.ln() + EULER_GAMMA - harmonic(n as u64 - 1);
    let (re, im, err) = if n.is_multiple_of(2) {
        let fm = factorial(2 * m as usize - 1);
        let a = c.two_pi_2m / (2.0 * fm);
        let b = c.two_pi_2m / (2.0 * PI * fm);
        let s1 = CoeffSeries::new(1, 1.0 - 2.0 * m as f64, 2, 0).sum(c.mu, cfg)?;
        let s2 = CoeffSeries::new(2, -2.0 * m as f64, 2, 1).sum(c.mu, cfg)?;
        let re = c.shift * z.re + sign(m + 1) * xn * log_block + sign(m + 1) * a * s1.value.re;
        let im = c.shift * z.im + sign(m + 1) * 0.5 * PI * xn + sign(m) * b * s2.value.re;
        (re, im, a * s1.error_estimate + b * s2.error_estimate)
    } else {
        let fm = factorial(2 * m as usize);
        let a = c.two_pi_2m / fm;
        let b = PI * c.two_pi_2m / fm;
        let s2 = CoeffSeries::new(2, -2.0 * m as f64, 2, 0).sum(c.mu, cfg)?;
        let s1 = CoeffSeries::new(1, -1.0 - 2.0 * m as f64, 2, 1).sum(c.mu, cfg)?;
        let re = c.shift * z.re + sign(m + 1) * 0.5 * PI * xn + sign(m + 1) * a * s2.value.re;
        let im = c.shift * z.im + sign(m) * xn * log_block + sign(m + 1) * b * s1.value.re;
        (re, im, a * s2.error_estimate + b * s1.error_estimate)
    };
    let value = ComplexValue::new(re, im);
    let error_estimate =
        err + zerr * c.shift.abs() + 8.0 * f64::EPSILON * (xn * (log_block.abs() + PI) + value.norm());
    let path = if n.is_multiple_of(2) { Path::PosEven } else { Path::PosOdd };
    Ok(EvalOutcome { value, path, error_estimate })
}
