//! ζ_R(σ), ζ_R'(σ) and ζ_R''(σ) for real σ ≠ 1.
//!
//! From σ = −1/2 upward this is Euler–Maclaurin summation differentiated
//! analytically in σ. Below that the partial sums cancel catastrophically
//! (about N^{1−σ} ulps), so the functional equation
//! ζ(σ) = (2π)^σ/π · sin(πσ/2) Γ(1−σ) ζ(1−σ) is differentiated instead,
//! with ζ(1−σ) again from Euler–Maclaurin.

use std::f64::consts::PI;

use crate::hurwitz::EvalConfig;
use crate::jet::Jet;
use crate::numerics::bernoulli_number;
use crate::numerics::gamma::{cos_pi, digamma, ln_gamma, sin_pi, trigamma};
use crate::{Result, ZetaError};

const LN_2PI: f64 = 1.837_877_066_409_345_483_560_659_472_811_235_279_7;
const LN_PI: f64 = 1.144_729_885_849_400_174_143_427_351_353_058_711_6;

/// Below this the functional equation takes over from Euler–Maclaurin.
const REFLECT_BELOW: f64 = -0.5;

// Small N keeps the N^{1−σ} ln²N tail from eating digits near σ = 0; the
// adaptive loop doubles it when large σ needs more room.
const EM_START: usize = 12;
const EM_MAX: usize = 384;
const EM_CORRECTIONS: usize = 16;

/// d^order/dσ^order ζ_R(σ) with the default configuration.
///
/// ```
/// let z2 = zetaix::riemann::riemann_zeta(0, 2.0).unwrap();
/// assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
/// ```
pub fn riemann_zeta(order: u8, sigma: f64) -> Result<f64> {
    riemann_zeta_with(order, sigma, &EvalConfig::default())
}

/// d^order/dσ^order ζ_R(σ) for order ∈ {0, 1, 2}.
pub fn riemann_zeta_with(order: u8, sigma: f64, cfg: &EvalConfig) -> Result<f64> {
    if order > 2 {
        return Err(ZetaError::Domain(format!("derivative order {order} not in 0..=2")));
    }
    let (jet, _) = zeta_jet_scaled(sigma, 0.0, cfg)?;
    Ok(jet.get(order as usize))
}

/// e^{ln_scale} · (ζ, ζ', ζ'')(σ) and an absolute error estimate on the same
/// scale.
///
/// The scale lets series callers fold μ^k/k! into the coefficient before
/// Γ(1−σ) overflows.
pub(crate) fn zeta_jet_scaled(sigma: f64, ln_scale: f64, cfg: &EvalConfig) -> Result<(Jet, f64)> {
    zeta_jet_shifted(sigma, 0, ln_scale, cfg)
}

/// As [`zeta_jet_scaled`] at σ = base − shift.
///
/// Rounding base − shift moves σ by up to ulp(shift), which near a trivial
/// zero is a large relative error in the distance to it. The reflection
/// factor sin(πσ/2) is therefore reduced from `base` and the shift applied
/// as whole quarter turns.
pub(crate) fn zeta_jet_shifted(
    base: f64,
    shift: usize,
    ln_scale: f64,
    cfg: &EvalConfig,
) -> Result<(Jet, f64)> {
    let sigma = base - shift as f64;
    if !sigma.is_finite() {
        return Err(ZetaError::Domain(format!("sigma={sigma} must be finite")));
    }
    if (sigma - 1.0).abs() < cfg.pole_guard {
        return Err(ZetaError::PoleProximity { sigma, guard: cfg.pole_guard });
    }
    if sigma >= REFLECT_BELOW {
        let (jet, err) = em_adaptive(sigma, cfg.tol_rel)?;
        let scale = ln_scale.exp();
        Ok((jet.scale(scale), err * scale))
    } else {
        reflected(sigma, half_turn_trig(base, shift), ln_scale, cfg.tol_rel)
    }
}

// (sin, cos)(π(base − shift)/2)
fn half_turn_trig(base: f64, shift: usize) -> (f64, f64) {
    let (s, c) = (sin_pi(0.5 * base), cos_pi(0.5 * base));
    match shift % 4 {
        0 => (s, c),
        1 => (-c, s),
        2 => (-s, -c),
        _ => (c, -s),
    }
}

fn em_adaptive(sigma: f64, tol: f64) -> Result<(Jet, f64)> {
    let mut n = EM_START;
    loop {
        let (jet, err) = euler_maclaurin(sigma, n, EM_CORRECTIONS);
        if err <= tol * jet.max_abs().max(1.0) {
            return Ok((jet, err));
        }
        if n >= EM_MAX {
            return Err(ZetaError::Accuracy { achieved: err });
        }
        n *= 2;
    }
}

/// Σ_{m<N} m^{−σ} + N^{1−σ}/(σ−1) + N^{−σ}/2 + Σ_j B_{2j}/(2j)! (σ)_{2j−1} N^{−σ−2j+1},
/// carried as a jet in σ.
pub(crate) fn euler_maclaurin(sigma: f64, n: usize, k: usize) -> (Jet, f64) {
    let s = Jet::var(sigma);
    let mut sum = Jet::constant(0.0);
    for m in (2..n).rev() {
        let ln = (m as f64).ln();
        sum = sum + Jet::new(-sigma * ln, -ln, 0.0).exp();
    }
    sum = sum + Jet::constant(1.0);
    let nf = n as f64;
    let ln_n = nf.ln();
    let pow = Jet::new(-sigma * ln_n, -ln_n, 0.0).exp();
    let tail = pow.scale(nf) * (s - Jet::constant(1.0)).recip();
    sum = sum + tail + pow.scale(0.5);
    let head = sum.max_abs();

    let inv_n2 = 1.0 / (nf * nf);
    let mut poch = s;
    let mut pw = pow.scale(1.0 / nf);
    let mut fact = 2.0;
    let mut next = 0.0;
    for j in 1..=k + 1 {
        let b = bernoulli_number(2 * j).unwrap_or(0.0);
        let term = (poch * pw).scale(b / fact);
        if j > k {
            next = term.max_abs();
            break;
        }
        sum = sum + term;
        let a = (2 * j - 1) as f64;
        poch = poch * (s + Jet::constant(a)) * (s + Jet::constant(a + 1.0));
        pw = pw.scale(inv_n2);
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
    }
    (sum, next + 4.0 * f64::EPSILON * head)
}

fn reflected(sigma: f64, trig: (f64, f64), ln_scale: f64, tol: f64) -> Result<(Jet, f64)> {
    let t = 1.0 - sigma;
    let (z, zerr) = em_adaptive(t, tol)?;
    // Chain rule through t = 1 − σ flips odd derivatives.
    let z = Jet::new(z.v, -z.d1, z.d2);
    let ln_mag = sigma * LN_2PI - LN_PI + ln_gamma(t) + ln_scale;
    let e = Jet::new(ln_mag, LN_2PI - digamma(t), trigamma(t)).exp();
    let half_pi = 0.5 * PI;
    let (sv, cv) = trig;
    let sn = Jet::new(sv, half_pi * cv, -half_pi * half_pi * sv);
    let es = e * sn;
    let out = es * z;
    // ln Γ carries an absolute error of a few ulps of its own magnitude.
    let rel = 8.0 * f64::EPSILON * (1.0 + ln_mag.abs() + t.ln().abs());
    let err = out.max_abs() * rel + es.max_abs() * zerr;
    Ok((out, err))
}

/// ζ_R(2m) from the Bernoulli closed form (−1)^{m+1} 2^{2m−1} π^{2m} B_{2m}/(2m)!.
pub fn even_zeta_closed_form(m: usize) -> Result<f64> {
    if m == 0 {
        return Ok(-0.5);
    }
    let b = bernoulli_number(2 * m)?;
    // (2π)^{2m}/(2m)! as a running product keeps the rounding at O(m) ulps.
    let scale = (1..=2 * m).fold(0.5, |acc, k| acc * 2.0 * PI / k as f64);
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * b * scale)
}
