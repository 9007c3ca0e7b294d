//! Non-integer s through F and G.

use std::f64::consts::PI;

use super::config::{check_s, check_x};
use super::{EvalConfig, EvalOutcome, Path, LN_2PI};
use crate::numerics::gamma::{cos_pi, digamma, ln_gamma_sign, rgamma, sin_pi};
use crate::polylog::CoeffSeries;
use crate::{ComplexValue, Result, ZetaError};

/// Real and imaginary parts of F(s,x) and G(s,x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FAndG {
    pub re_f: f64,
    pub im_f: f64,
    pub re_g: f64,
    pub im_g: f64,
}

struct Parts {
    f: ComplexValue,
    g: ComplexValue,
    err: f64,
}

// With Li_{1−s}(e^{±μ}) = Γ(s)(∓μ)^{−s} + Σ ζ_R(1−s−k)(±μ)^k/k! the sum and
// difference keep only even or odd k:
//
//   Re F = 2cos²(πs/2) Γ(s)μ^{−s} + 2 Σ_{k even} ζ_R(1−s−k) μ^k/k!
//   Re G = −2sin²(πs/2) Γ(s)μ^{−s} + 2 Σ_{k odd} ζ_R(1−s−k) μ^k/k!
//   Im F = Im G = −πμ^{−s}/Γ(1−s)
//
// At s = 2m every term of G is O(s − 2m) on its own (trivial zeros of ζ_R),
// likewise F at odd s, so the vanishing combination keeps relative accuracy
// where the Γ(1−s) pole multiplies it. Valid on both sides of s = 1.
fn fg_parts(s: f64, x: f64, cfg: &EvalConfig) -> Result<Parts> {
    let mu = 2.0 * PI * x;
    let l = mu.ln();
    let (lg, sg) = ln_gamma_sign(s);
    let gm = sg * (lg - s * l).exp();
    let (c, sn) = (cos_pi(0.5 * s), sin_pi(0.5 * s));
    let im = -PI * rgamma(1.0 - s) * (-s * l).exp();
    let even = CoeffSeries::new(0, 1.0 - s, 2, 0).sum(mu, cfg)?;
    let odd = CoeffSeries::new(0, -s, 2, 1).sum(mu, cfg)?;
    let re_f = 2.0 * (c * c * gm + even.value.re);
    let re_g = 2.0 * (odd.value.re - sn * sn * gm);
    let err = 2.0 * (even.error_estimate + odd.error_estimate) + 8.0 * f64::EPSILON * (gm.abs() + im.abs());
    Ok(Parts { f: ComplexValue::new(re_f, im), g: ComplexValue::new(re_g, im), err })
}

// s-derivatives of F and G, split the same way. The Γ-term derivatives are
// Γ(s)μ^{−s}[±2cos²/sin²(πs/2)(ψ(s) − L) − π sin(πs)], finite at half
// integers where a 1/sin(2πs) form is not.
fn fg_derivs(s: f64, x: f64, im_f: f64, cfg: &EvalConfig) -> Result<Parts> {
    let mu = 2.0 * PI * x;
    let l = mu.ln();
    let (lg, sg) = ln_gamma_sign(s);
    let gm = sg * (lg - s * l).exp();
    let (c, sn) = (cos_pi(0.5 * s), sin_pi(0.5 * s));
    let dl = digamma(s) - l;
    let rot = PI * sin_pi(s);
    let even = CoeffSeries::new(1, 1.0 - s, 2, 0).sum(mu, cfg)?;
    let odd = CoeffSeries::new(1, -s, 2, 1).sum(mu, cfg)?;
    let df_head = gm * (2.0 * c * c * dl - rot);
    let dg_head = -gm * (2.0 * sn * sn * dl + rot);
    let dim = im_f * (digamma(1.0 - s) - l);
    let err = 2.0 * (even.error_estimate + odd.error_estimate)
        + 16.0 * f64::EPSILON * (df_head.abs() + dg_head.abs() + dim.abs());
    Ok(Parts {
        f: ComplexValue::new(df_head - 2.0 * even.value.re, dim),
        g: ComplexValue::new(dg_head - 2.0 * odd.value.re, dim),
        err,
    })
}

// Moves s onto the grid of 1 − s. The Γ(s) poles at non-positive integers
// cancel against ζ_R(1−s−k) at its pole, and both must see the same
// distance to the integer or the 1/δ terms leave a residue of ulp(1−s)/δ².
fn aligned(s: f64) -> f64 {
    1.0 - (1.0 - s)
}

fn check_generic(s: f64, x: f64, cfg: &EvalConfig) -> Result<()> {
    cfg.validate()?;
    check_s(s)?;
    check_x(x)?;
    if (s - 1.0).abs() <= cfg.pole_guard {
        return Err(ZetaError::Pole);
    }
    let n = s.round();
    if n != 1.0 && (s - n).abs() <= cfg.integer_snap {
        return Err(ZetaError::SnapRefused { s, nearest: n as i64 });
    }
    Ok(())
}

/// F(s,x) and G(s,x) for non-integer s < 1.
///
/// ```
/// use zetaix::hurwitz::{f_and_g, EvalConfig};
/// let fg = f_and_g(0.5, 0.5, &EvalConfig::default()).unwrap();
/// assert_eq!(fg.im_f, fg.im_g);
/// ```
pub fn f_and_g(s: f64, x: f64, cfg: &EvalConfig) -> Result<FAndG> {
    check_generic(s, x, cfg)?;
    if s >= 1.0 - cfg.pole_guard {
        return Err(ZetaError::Domain(format!("f_and_g needs s < 1, got {s}")));
    }
    let p = fg_parts(aligned(s), x, cfg)?;
    Ok(FAndG { re_f: p.f.re, im_f: p.f.im, re_g: p.g.re, im_g: p.g.im })
}

// Γ(1−s)/(2π)^{1−s}
fn prefactor(s: f64) -> f64 {
    let (lg, sg) = ln_gamma_sign(1.0 - s);
    sg * (lg - (1.0 - s) * LN_2PI).exp()
}

fn generic_path(s: f64) -> Path {
    if s < 1.0 {
        Path::GenericLeft
    } else {
        Path::GenericRight
    }
}

/// ζ_H(s, ix) for non-integer s.
pub fn hurwitz_generic(s: f64, x: f64, cfg: &EvalConfig) -> Result<EvalOutcome> {
    check_generic(s, x, cfg)?;
    let s = aligned(s);
    let parts = fg_parts(s, x, cfg)?;
    let p = prefactor(s);
    let (sn, cs) = (sin_pi(0.5 * s), cos_pi(0.5 * s));
    let i = ComplexValue::i();
    let value = (parts.f * sn + i * parts.g * cs) * p;
    Ok(EvalOutcome {
        value,
        path: generic_path(s),
        error_estimate: p.abs() * parts.err + 8.0 * f64::EPSILON * value.norm(),
    })
}

/// ∂_s ζ_H(s, ix) for non-integer s.
///
/// Differentiates the Jonquière product directly:
/// P' /P = ln 2π − ψ(1−s), with F', G' from the polylogarithm order
/// derivative.
pub fn hurwitz_deriv_generic(s: f64, x: f64, cfg: &EvalConfig) -> Result<EvalOutcome> {
    check_generic(s, x, cfg)?;
    let s = aligned(s);
    let parts = fg_parts(s, x, cfg)?;
    let d = fg_derivs(s, x, parts.f.im, cfg)?;
    let p = prefactor(s);
    let (sn, cs) = (sin_pi(0.5 * s), cos_pi(0.5 * s));
    let i = ComplexValue::i();
    let base = parts.f * sn + i * parts.g * cs;
    let rot = parts.f * cs - i * parts.g * sn;
    let dlog = LN_2PI - digamma(1.0 - s);
    let value = (base * dlog + rot * (0.5 * PI) + d.f * sn + i * d.g * cs) * p;
    let err = p.abs() * (d.err + parts.err * (dlog.abs() + PI)) + 16.0 * f64::EPSILON * value.norm();
    Ok(EvalOutcome { value, path: generic_path(s), error_estimate: err })
}
