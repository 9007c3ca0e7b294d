//! Gamma, digamma and trigamma at real arguments, plus exactly reduced
//! sin(πx) and cos(πx).
//!
//! All three use upward recurrence into the asymptotic region followed by the
//! Stirling-type series, and the reflection formula for x < 1/2.

use std::f64::consts::PI;

use super::bernoulli_number;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_617_639_9;

/// Asymptotic series are used from this argument upward.
const ASYMPTOTIC_FROM: f64 = 15.0;

/// sin(πx) with exact argument reduction, so integers give exactly 0.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = reduce_two(x);
    let a = r.abs();
    let v = if a <= 0.25 {
        (PI * a).sin()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).cos()
    } else {
        (PI * (1.0 - a)).sin()
    };
    if r < 0.0 {
        -v
    } else {
        v
    }
}

/// cos(πx) with exact argument reduction, so half-integers give exactly 0.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let a = reduce_two(x).abs();
    if a <= 0.25 {
        (PI * a).cos()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).sin()
    } else {
        -(PI * (1.0 - a)).cos()
    }
}

// x mod 2 mapped into [−1, 1]; every step is exact in binary floating point.
fn reduce_two(x: f64) -> f64 {
    let r = x % 2.0;
    if r > 1.0 {
        r - 2.0
    } else if r < -1.0 {
        r + 2.0
    } else {
        r
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

fn stirling_ln_gamma(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for k in 1..=8 {
        let b = bernoulli_number(2 * k).unwrap_or(0.0);
        corr += b / ((2 * k) as f64 * (2 * k - 1) as f64) * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

/// ln|Γ(x)| together with the sign of Γ(x).
///
/// Non-positive integers return (+∞, NaN).
pub fn ln_gamma_sign(x: f64) -> (f64, f64) {
    if x.is_nan() || is_nonpositive_integer(x) {
        return (f64::INFINITY, f64::NAN);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, _) = ln_gamma_sign(1.0 - x);
        return (PI.ln() - s.abs().ln() - lg, s.signum());
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < ASYMPTOTIC_FROM {
        prod *= y;
        y += 1.0;
    }
    (stirling_ln_gamma(y) - prod.ln(), 1.0)
}

/// ln|Γ(x)|.
pub fn ln_gamma(x: f64) -> f64 {
    ln_gamma_sign(x).0
}

/// Γ(x). Poles at non-positive integers return NaN.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() || is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x == x.round() && x <= 171.0 {
        return super::factorial(x as usize - 1);
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < ASYMPTOTIC_FROM {
        prod *= y;
        y += 1.0;
    }
    stirling_ln_gamma(y).exp() / prod
}

/// 1/Γ(x), an entire function: zero at non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        return sin_pi(x) * gamma(1.0 - x) / PI;
    }
    if x > 171.0 {
        return (-ln_gamma(x)).exp();
    }
    1.0 / gamma(x)
}

/// Digamma ψ(x) = Γ'(x)/Γ(x). Poles at non-positive integers return NaN.
pub fn digamma(x: f64) -> f64 {
    if x.is_nan() || is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x < 0.5 {
        // ψ(1−x) − ψ(x) = π cot(πx)
        return digamma(1.0 - x) - PI * cos_pi(x) / sin_pi(x);
    }
    let mut y = x;
    let mut acc = 0.0;
    while y < ASYMPTOTIC_FROM {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut series = 0.0;
    for k in 1..=8 {
        series += bernoulli_number(2 * k).unwrap_or(0.0) / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    acc + y.ln() - 0.5 / y - series
}

/// Trigamma ψ'(x). Poles at non-positive integers return NaN.
pub fn trigamma(x: f64) -> f64 {
    if x.is_nan() || is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x < 0.5 {
        let s = sin_pi(x);
        return PI * PI / (s * s) - trigamma(1.0 - x);
    }
    let mut y = x;
    let mut acc = 0.0;
    while y < ASYMPTOTIC_FROM {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut series = 0.0;
    for k in 1..=8 {
        series += bernoulli_number(2 * k).unwrap_or(0.0) * pow;
        pow *= inv2;
    }
    acc + inv + 0.5 * inv2 + series
}
