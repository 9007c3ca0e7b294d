//! Li_ν(e^{±2πx}) and its order derivatives ∂_ν^j Li_ν.
//!
//! Near the unit circle Li_ν(e^{±μ}) is expanded as
//! Γ(1−ν)(∓μ)^{ν−1} + Σ_k ζ_R(ν−k)(±μ)^k/k!, with (−μ)^{ν−1} taken on the
//! principal branch, arg(−μ) = +π. Negative integer orders have the rational
//! Eulerian closed form, and the order derivatives at ν = 1−n reduce to
//! digamma/log blocks plus ζ_R' or ζ_R'' coefficient series.

use std::f64::consts::PI;

use crate::hurwitz::EvalConfig;
use crate::numerics::gamma::{cos_pi, ln_gamma, ln_gamma_sign, sin_pi};
use crate::numerics::{digamma_pos_int, eulerian, factorial, trigamma_pos_int, EULERIAN_CAP};
use crate::riemann::zeta_jet_shifted;
use crate::{ComplexValue, Result, ZetaError};

/// Which of e^{+2πx} (outside the unit disc) or e^{−2πx} (inside) is the argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A summed series with its truncation bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: ComplexValue,
    /// Bounds the first omitted term plus accumulated rounding.
    pub error_estimate: f64,
    pub terms_used: usize,
}

/// Li_{−n}(w) in closed form: w/(1−w) for n = 0, otherwise
/// (1−w)^{−(n+1)} Σ_{k<n} ⟨n k⟩ w^{n−k}.
///
/// ```
/// use zetaix::polylog::polylog_neg_int;
/// assert_eq!(polylog_neg_int(1, 0.5).unwrap(), 2.0);
/// ```
pub fn polylog_neg_int(n: usize, w: f64) -> Result<f64> {
    if n > EULERIAN_CAP {
        return Err(ZetaError::Domain(format!("order -{n} below -{EULERIAN_CAP}")));
    }
    if w.is_nan() || w <= 0.0 {
        return Err(ZetaError::Domain(format!("argument w={w} must be positive")));
    }
    if w == 1.0 {
        return Err(ZetaError::Singularity);
    }
    if n == 0 {
        return Ok(w / (1.0 - w));
    }
    let mut acc = 0.0;
    for k in 0..n {
        acc += eulerian(n, k)? * w.powi((n - k) as i32);
    }
    Ok(acc / (1.0 - w).powi(n as i32 + 1))
}

/// Σ_k ±^k ζ_R^{(order)}(σ₀ − step·k) μ^{step·k+offset}/(step·k+offset)!.
///
/// Every coefficient series in the closed forms has this shape.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CoeffSeries {
    pub order: usize,
    pub sigma0: f64,
    pub step: usize,
    pub offset: usize,
    pub alternating: bool,
}

impl CoeffSeries {
    pub fn new(order: usize, sigma0: f64, step: usize, offset: usize) -> Self {
        CoeffSeries { order, sigma0, step, offset, alternating: false }
    }

    pub fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    fn term(&self, k: usize, ln_mu: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
        let p = self.step * k + self.offset;
        let ln_w = p as f64 * ln_mu - ln_gamma(p as f64 + 1.0);
        let (jet, err) = zeta_jet_shifted(self.sigma0, self.step * k, ln_w, cfg)?;
        let t = jet.get(self.order);
        // exp of a log-domain magnitude carries |ln| ulps of relative error.
        let rounding = t.abs()
            * (ln_w.abs() + (self.sigma0 - (self.step * k) as f64).abs().ln_1p() + 4.0)
            * f64::EPSILON;
        Ok((if self.alternating && k % 2 == 1 { -t } else { t }, err + rounding))
    }

    /// Sums until three consecutive terms fall below tol_rel × |partial sum|
    /// or below the rounding level of the largest term.
    pub fn sum(&self, mu: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
        let ln_mu = mu.ln();
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        let mut coeff_err = 0.0;
        let mut quiet = 0;
        let mut last = f64::INFINITY;
        let mut peak = 0.0f64;
        for k in 0..cfg.term_cap {
            let (t, e) = self.term(k, ln_mu, cfg)?;
            sum += t;
            abs_sum += t.abs();
            coeff_err += e;
            last = t.abs();
            peak = peak.max(t.abs());
            // Under heavy cancellation terms below the rounding of the peak term change nothing.
            if t.abs() <= (cfg.tol_rel * sum.abs()).max(f64::EPSILON * peak) {
                quiet += 1;
                if quiet >= 3 {
                    let (next, _) = self.term(k + 1, ln_mu, cfg)?;
                    return Ok(SeriesResult {
                        value: ComplexValue::new(sum, 0.0),
                        error_estimate: next.abs() + coeff_err + 2.0 * f64::EPSILON * abs_sum,
                        terms_used: k + 1,
                    });
                }
            } else {
                quiet = 0;
            }
        }
        Err(ZetaError::Accuracy { achieved: last })
    }
}

fn check_unit_x(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(ZetaError::Domain(format!("x={x} must lie strictly inside (0, 1)")))
    }
}

fn is_positive_integer(v: f64) -> bool {
    v >= 1.0 && v == v.round()
}

/// Li_ν(e^{±2πx}) by the series about the unit circle.
///
/// For `Sign::Minus` the result is real and its imaginary part is exactly 0.
/// Positive integer ν is refused: Γ(1−ν) and ζ_R(1) both blow up there and
/// only their limit is finite.
pub fn polylog_series(nu: f64, x: f64, sign: Sign, cfg: &EvalConfig) -> Result<SeriesResult> {
    check_unit_x(x)?;
    if !nu.is_finite() {
        return Err(ZetaError::Domain(format!("order nu={nu} must be finite")));
    }
    if is_positive_integer(nu) {
        return Err(ZetaError::UseOtherPath(format!(
            "positive integer order {nu}; use the direct exponential series or the integer closed forms"
        )));
    }
    let mu = 2.0 * PI * x;
    let (lg, sg) = ln_gamma_sign(1.0 - nu);
    let mag = sg * (lg + (nu - 1.0) * mu.ln()).exp();
    let head = match sign {
        Sign::Plus => ComplexValue::new(mag * cos_pi(nu - 1.0), mag * sin_pi(nu - 1.0)),
        Sign::Minus => ComplexValue::new(mag, 0.0),
    };
    let series = CoeffSeries::new(0, nu, 1, 0);
    let series = if sign == Sign::Minus { series.alternating() } else { series };
    let tail = series.sum(mu, cfg)?;
    Ok(SeriesResult {
        value: head + tail.value,
        error_estimate: tail.error_estimate
            + (lg.abs() + ((nu - 1.0) * mu.ln()).abs() + 4.0) * f64::EPSILON * mag.abs(),
        terms_used: tail.terms_used,
    })
}

/// ∂_ν^order Li_ν(e^{−2πx}) = Σ_{k≥1} (−ln k)^order k^{−ν} e^{−2πxk}.
///
/// Converges geometrically with ratio e^{−2πx} for any real ν.
pub fn polylog_direct(nu: f64, x: f64, order: u8, cfg: &EvalConfig) -> Result<SeriesResult> {
    const DIRECT_CAP: usize = 5000;
    check_unit_x(x)?;
    if order > 2 {
        return Err(ZetaError::Domain(format!("order derivative {order} not in 0..=2")));
    }
    let mu = 2.0 * PI * x;
    // Terms grow until k ≈ (max(−ν,0) + order)/μ; no stopping before then.
    let k_peak = ((-nu).max(0.0) + order as f64) / mu + 2.0;
    let ratio = (-mu).exp();
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut quiet = 0;
    let mut last = f64::INFINITY;
    for k in 1..=DIRECT_CAP {
        let lk = (k as f64).ln();
        let t = (-mu * k as f64 - nu * lk).exp() * (-lk).powi(order as i32);
        sum += t;
        abs_sum += t.abs();
        last = t.abs();
        if k as f64 > k_peak && t.abs() <= cfg.tol_rel * sum.abs() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(SeriesResult {
                    value: ComplexValue::new(sum, 0.0),
                    error_estimate: t.abs() * ratio / (1.0 - ratio) + 2.0 * f64::EPSILON * abs_sum,
                    terms_used: k,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(ZetaError::Accuracy { achieved: last })
}

/// ∂_ν^j Li_ν(e^{±2πx}) at ν = 1−n, for j ∈ {1, 2} and n ≥ 1.
///
/// With μ = 2πx, L = ln μ, A = (n−1)! μ^{−n}, ψ = Ψ(n), ψ₁ = Ψ'(n):
///
/// * j=1, +: (−1)^n A (iπ + L − ψ) + Σ ζ_R'(1−n−k) μ^k/k!
/// * j=1, −: A (L − ψ) + Σ ζ_R'(1−n−k) (−μ)^k/k!
/// * j=2, +: (−1)^n A [L² − 2ψL + ψ² + ψ₁ − π² + 2πi(L − ψ)] + Σ ζ_R''(1−n−k) μ^k/k!
/// * j=2, −: A [L² − 2ψL + ψ² + ψ₁] + Σ ζ_R''(1−n−k) (−μ)^k/k!
///
/// ```
/// use zetaix::hurwitz::EvalConfig;
/// use zetaix::polylog::{polylog_order_deriv, Sign};
///
/// let v = polylog_order_deriv(1, 2, 0.3, Sign::Plus, &EvalConfig::default()).unwrap();
/// let mu = 0.6 * std::f64::consts::PI;
/// assert!((v.im - std::f64::consts::PI / (mu * mu)).abs() < 1e-14);
/// ```
pub fn polylog_order_deriv(j: u8, n: u32, x: f64, sign: Sign, cfg: &EvalConfig) -> Result<ComplexValue> {
    polylog_order_deriv_series(j, n, x, sign, cfg).map(|r| r.value)
}

pub(crate) fn polylog_order_deriv_series(
    j: u8,
    n: u32,
    x: f64,
    sign: Sign,
    cfg: &EvalConfig,
) -> Result<SeriesResult> {
    check_unit_x(x)?;
    if n == 0 {
        return Err(ZetaError::Domain("n must be at least 1".into()));
    }
    if !(1..=2).contains(&j) {
        return Err(ZetaError::Domain(format!("order derivative {j} not in 1..=2")));
    }
    let mu = 2.0 * PI * x;
    let l = mu.ln();
    let a = factorial(n as usize - 1) * mu.powi(-(n as i32));
    let psi = digamma_pos_int(n as i64)?;
    let parity = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let series = CoeffSeries::new(j as usize, 1.0 - n as f64, 1, 0);
    let series = if sign == Sign::Minus { series.alternating() } else { series };
    let tail = series.sum(mu, cfg)?;
    let block = match (j, sign) {
        (1, Sign::Plus) => ComplexValue::new(parity * a * (l - psi), parity * a * PI),
        (1, Sign::Minus) => ComplexValue::new(a * (l - psi), 0.0),
        (_, sgn) => {
            let psi1 = trigamma_pos_int(n as i64)?;
            let quad = a * (l * l - 2.0 * psi * l + psi * psi + psi1);
            match sgn {
                Sign::Plus => {
                    ComplexValue::new(parity * (quad - PI * PI * a), parity * 2.0 * PI * a * (l - psi))
                }
                Sign::Minus => ComplexValue::new(quad, 0.0),
            }
        }
    };
    Ok(SeriesResult {
        value: block + tail.value,
        error_estimate: tail.error_estimate + 8.0 * f64::EPSILON * block.norm(),
        terms_used: tail.terms_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn neg_int_examples() {
        assert_eq!(polylog_neg_int(0, 0.5).unwrap(), 1.0);
        assert_eq!(polylog_neg_int(1, 0.5).unwrap(), 2.0);
        assert_eq!(polylog_neg_int(2, 0.5).unwrap(), 6.0);
        assert_eq!(polylog_neg_int(3, 1.0), Err(ZetaError::Singularity));
        assert!(matches!(polylog_neg_int(3, -0.2), Err(ZetaError::Domain(_))));
        assert!(matches!(polylog_neg_int(26, 0.2), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn neg_int_brute_force() {
        let w: f64 = 0.5;
        let brute: f64 = (1..200).map(|k| (k * k) as f64 * w.powi(k)).sum();
        assert!((polylog_neg_int(2, w).unwrap() - brute).abs() < 1e-13);
    }

    #[test]
    fn series_zero_order_matches_closed_form() {
        let r = polylog_series(0.0, 0.25, Sign::Minus, &cfg()).unwrap();
        let w = (-PI / 2.0).exp();
        let closed = polylog_neg_int(0, w).unwrap();
        assert!((r.value.re - closed).abs() < 1e-14);
        assert_eq!(r.value.im, 0.0);
        assert!(r.error_estimate < 1e-12);
    }

    #[test]
    fn series_half_order_brute_force() {
        let r = polylog_series(0.5, 0.1, Sign::Minus, &cfg()).unwrap();
        let mu = 0.2 * PI;
        let brute: f64 = (1..100_000).rev().map(|k| (-mu * k as f64).exp() / (k as f64).sqrt()).sum();
        assert!((r.value.re - brute).abs() < 1e-12 * brute);
    }

    #[test]
    fn series_plus_imaginary_part_is_gamma_term() {
        let nu = -1.5;
        let r = polylog_series(nu, 0.3, Sign::Plus, &cfg()).unwrap();
        let mu = 0.6 * PI;
        let s = 1.0 - nu;
        let want = -PI * mu.powf(-s) * crate::numerics::gamma::rgamma(1.0 - s);
        assert!((r.value.im - want).abs() < 1e-14 * want.abs());
    }

    #[test]
    fn series_refuses_positive_integers() {
        assert!(matches!(polylog_series(2.0, 0.3, Sign::Plus, &cfg()), Err(ZetaError::UseOtherPath(_))));
        assert!(matches!(polylog_series(1.0, 0.3, Sign::Minus, &cfg()), Err(ZetaError::UseOtherPath(_))));
    }

    #[test]
    fn direct_matches_log() {
        // Li_1(w) = −ln(1 − w)
        let x = 0.5;
        let w = (-PI).exp();
        let r = polylog_direct(1.0, x, 0, &cfg()).unwrap();
        assert!((r.value.re + (-w).ln_1p()).abs() < 1e-16);
        // Li_{−1}(w) = w/(1−w)²
        let r = polylog_direct(-1.0, x, 0, &cfg()).unwrap();
        assert!((r.value.re - polylog_neg_int(1, w).unwrap()).abs() < 1e-16);
        assert!(polylog_direct(0.5, 0.0, 0, &cfg()).is_err());
    }

    #[test]
    fn direct_order_derivative_vs_difference() {
        let h = 1e-4;
        let f = |nu: f64| polylog_direct(nu, 0.2, 0, &cfg()).unwrap().value.re;
        let fd = (f(-1.3 + h) - f(-1.3 - h)) / (2.0 * h);
        let d = polylog_direct(-1.3, 0.2, 1, &cfg()).unwrap().value.re;
        assert!((fd - d).abs() < 1e-7 * d.abs());
    }

    #[test]
    fn order_deriv_minus_is_real() {
        for n in 1..=4 {
            for j in 1..=2 {
                let v = polylog_order_deriv(j, n, 0.4, Sign::Minus, &cfg()).unwrap();
                assert_eq!(v.im, 0.0);
            }
        }
    }

    #[test]
    fn order_deriv_plus_imaginary_block() {
        let v = polylog_order_deriv(1, 2, 0.3, Sign::Plus, &cfg()).unwrap();
        let mu = 0.6 * PI;
        assert!((v.im - PI / (mu * mu)).abs() < 1e-14);
    }

    #[test]
    fn order_deriv_first_at_n1() {
        // ∂_ν Li_ν(e^{−π}) at ν=0: (1/π)(ln π − Ψ(1)) + Σ ζ'(−k)(−π)^k/k!
        let x = 0.5;
        let v = polylog_order_deriv(1, 1, x, Sign::Minus, &cfg()).unwrap();
        let mut s = 0.0;
        let mut fact = 1.0;
        for k in 0..120 {
            if k > 0 {
                fact *= k as f64;
            }
            let z = crate::riemann::riemann_zeta(1, -(k as f64)).unwrap();
            s += z * (-PI).powi(k) / fact;
        }
        let want = (PI.ln() + crate::numerics::EULER_GAMMA) / PI + s;
        assert!((v.re - want).abs() < 1e-12, "{} vs {}", v.re, want);
        // Independent: direct series Σ −ln k e^{−πk}
        let d = polylog_direct(0.0, x, 1, &cfg()).unwrap().value.re;
        assert!((v.re - d).abs() < 1e-13);
    }

    #[test]
    fn order_deriv_matches_direct_sums() {
        for n in 1..=4u32 {
            for &x in &[0.15, 0.5, 0.85] {
                for j in 1..=2u8 {
                    let v = polylog_order_deriv(j, n, x, Sign::Minus, &cfg()).unwrap().re;
                    let d = polylog_direct(1.0 - n as f64, x, j, &cfg()).unwrap().value.re;
                    assert!((v - d).abs() < 1e-10 * d.abs().max(1.0), "j={j} n={n} x={x}: {v} {d}");
                }
            }
        }
    }
}
