//! Reference values of ζ_H(s, ix) straight from Σ_k (k + ix)^{−s}.
//!
//! The sum is cut after N terms and completed by Euler–Maclaurin, which also
//! continues it below Re s = 1. Everything runs at 192 bits; in doubles the
//! continuation to s ≈ −6 would lose more than ten digits to cancellation.
//! Nothing here touches the polylogarithm machinery, and the Bernoulli
//! numbers come from a separate literal table.
//!
//! Derivatives are Richardson-extrapolated central differences in s.

mod table;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::{ComplexValue, Result, ZetaError};

const PREC: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

/// Closest approach to s = 1 the oracle accepts.
pub const ORACLE_POLE_GUARD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// N, the number of explicitly summed terms.
    pub direct_terms: usize,
    /// Number of Bernoulli correction terms (even).
    pub em_order: usize,
    /// Largest step of the difference stencil.
    pub fd_step: f64,
    /// Number of step halvings fed to Richardson extrapolation.
    pub fd_levels: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { direct_terms: 64, em_order: 12, fd_step: 1e-3, fd_levels: 3 }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_order == 0
            || !self.em_order.is_multiple_of(2)
            || self.em_order > table::BERNOULLI_EVEN.len() - 1
        {
            return Err(ZetaError::InvalidConfig(format!(
                "em_order must be even and in 2..={}, got {}",
                table::BERNOULLI_EVEN.len() - 1,
                self.em_order
            )));
        }
        if self.direct_terms < 16 {
            return Err(ZetaError::InvalidConfig(format!(
                "direct_terms must be at least 16, got {}",
                self.direct_terms
            )));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 0.1) || self.fd_levels == 0 || self.fd_levels > 8 {
            return Err(ZetaError::InvalidConfig(format!(
                "fd_step {} / fd_levels {} out of range",
                self.fd_step, self.fd_levels
            )));
        }
        Ok(())
    }
}

/// An oracle result with its truncation estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: ComplexValue,
    pub error_estimate: f64,
}

#[derive(Clone)]
struct Cx {
    re: BigFloat,
    im: BigFloat,
}

impl Cx {
    fn zero() -> Cx {
        Cx { re: BigFloat::from_f64(0.0, PREC), im: BigFloat::from_f64(0.0, PREC) }
    }
    fn add(&self, o: &Cx) -> Cx {
        Cx { re: self.re.add(&o.re, PREC, RM), im: self.im.add(&o.im, PREC, RM) }
    }
    fn mul(&self, o: &Cx) -> Cx {
        let re = self.re.mul(&o.re, PREC, RM).sub(&self.im.mul(&o.im, PREC, RM), PREC, RM);
        let im = self.re.mul(&o.im, PREC, RM).add(&self.im.mul(&o.re, PREC, RM), PREC, RM);
        Cx { re, im }
    }
    fn scale(&self, c: &BigFloat) -> Cx {
        Cx { re: self.re.mul(c, PREC, RM), im: self.im.mul(c, PREC, RM) }
    }
    fn to_complex(&self) -> ComplexValue {
        ComplexValue::new(to_f64(&self.re), to_f64(&self.im))
    }
}

fn to_f64(v: &BigFloat) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    format!("{v}").parse().unwrap_or(f64::NAN)
}

fn big(v: f64) -> BigFloat {
    BigFloat::from_f64(v, PREC)
}

fn consts() -> Consts {
    Consts::new().expect("astro-float constant cache")
}

/// Per-(y, N, K) data reused across every s: log-moduli and arguments of
/// k + iy, 1/(N + iy), and B_{2j}/(2j)!.
struct Table {
    ln_r: Vec<BigFloat>,
    theta: Vec<BigFloat>,
    a: Cx,
    inv_a2: Cx,
    inv_a: Cx,
    bern: Vec<BigFloat>,
}

impl Table {
    fn new(y: f64, n: usize, k: usize, cc: &mut Consts) -> Table {
        let yb = big(y);
        let y2 = yb.mul(&yb, PREC, RM);
        let half = big(0.5);
        let mut ln_r = Vec::with_capacity(n + 1);
        let mut theta = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mb = BigFloat::from_u64(m as u64, PREC);
            let r2 = mb.mul(&mb, PREC, RM).add(&y2, PREC, RM);
            ln_r.push(r2.ln(PREC, RM, cc).mul(&half, PREC, RM));
            if m == 0 {
                // arg(iy) = ±π/2 exactly
                let mut hp = cc.pi(PREC, RM).mul(&half, PREC, RM);
                if y < 0.0 {
                    hp = hp.neg();
                }
                theta.push(hp);
            } else {
                theta.push(yb.div(&mb, PREC, RM).atan(PREC, RM, cc));
            }
        }
        let nb = BigFloat::from_u64(n as u64, PREC);
        let a = Cx { re: nb.clone(), im: yb.clone() };
        let d = nb.mul(&nb, PREC, RM).add(&y2, PREC, RM);
        let inv_a = Cx { re: nb.div(&d, PREC, RM), im: yb.neg().div(&d, PREC, RM) };
        let inv_a2 = inv_a.mul(&inv_a);
        let mut bern = Vec::with_capacity(k + 1);
        let mut fact = BigFloat::from_u64(1, PREC);
        for j in 1..=k + 1 {
            let (num, den) = table::BERNOULLI_EVEN[j - 1];
            let b = BigFloat::parse(num, Radix::Dec, PREC, RM, cc).div(
                &BigFloat::parse(den, Radix::Dec, PREC, RM, cc),
                PREC,
                RM,
            );
            let step = BigFloat::from_u64(((2 * j - 1) * (2 * j)) as u64, PREC);
            fact = fact.mul(&step, PREC, RM);
            bern.push(b.div(&fact, PREC, RM));
        }
        Table { ln_r, theta, a, inv_a2, inv_a, bern }
    }

    // (m + iy)^{−s} on the principal branch
    fn power(&self, m: usize, s: &BigFloat, cc: &mut Consts) -> Cx {
        let ms = s.neg();
        let mag = ms.mul(&self.ln_r[m], PREC, RM).exp(PREC, RM, cc);
        let ang = ms.mul(&self.theta[m], PREC, RM);
        Cx { re: mag.mul(&ang.cos(PREC, RM, cc), PREC, RM), im: mag.mul(&ang.sin(PREC, RM, cc), PREC, RM) }
    }

    /// Σ_{m<N} (m+iy)^{−s} + a^{1−s}/(s−1) + a^{−s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j−1} a^{−s−2j+1}
    fn sum(&self, s: f64, cc: &mut Consts) -> (ComplexValue, f64) {
        let n = self.ln_r.len() - 1;
        let k = self.bern.len() - 1;
        let sb = big(s);
        let mut acc = Cx::zero();
        for m in (0..n).rev() {
            acc = acc.add(&self.power(m, &sb, cc));
        }
        let w = self.power(n, &sb, cc);
        let one = BigFloat::from_u64(1, PREC);
        let inv_sm1 = one.div(&sb.sub(&one, PREC, RM), PREC, RM);
        acc = acc.add(&self.a.mul(&w).scale(&inv_sm1));
        acc = acc.add(&w.scale(&big(0.5)));
        let mut poch = sb.clone();
        let mut pw = w.mul(&self.inv_a);
        let mut next = 0.0;
        for j in 1..=k + 1 {
            let term = pw.scale(&poch.mul(&self.bern[j - 1], PREC, RM));
            if j > k {
                next = term.to_complex().norm();
                break;
            }
            acc = acc.add(&term);
            let c1 = sb.add(&BigFloat::from_u64((2 * j - 1) as u64, PREC), PREC, RM);
            let c2 = sb.add(&BigFloat::from_u64((2 * j) as u64, PREC), PREC, RM);
            poch = poch.mul(&c1, PREC, RM).mul(&c2, PREC, RM);
            pw = pw.mul(&self.inv_a2);
        }
        let v = acc.to_complex();
        (v, next + f64::EPSILON * v.norm())
    }
}

fn check_point(s: f64, x: f64, cfg: &OracleConfig) -> Result<()> {
    cfg.validate()?;
    if !(x > 0.0 && x < 1.0) {
        return Err(ZetaError::Domain(format!("x={x} must lie strictly inside (0, 1)")));
    }
    if !s.is_finite() {
        return Err(ZetaError::Domain(format!("s={s} must be finite")));
    }
    if (s - 1.0).abs() < ORACLE_POLE_GUARD * (1.0 - 1e-9) {
        return Err(ZetaError::PoleProximity { sigma: s, guard: ORACLE_POLE_GUARD });
    }
    if s <= 1.0 - cfg.em_order as f64 {
        return Err(ZetaError::WidenOrder { s, em_order: cfg.em_order });
    }
    Ok(())
}

pub(crate) fn oracle_signed(s: f64, y: f64, cfg: &OracleConfig) -> Result<OracleValue> {
    let mut cc = consts();
    let t = Table::new(y, cfg.direct_terms, cfg.em_order, &mut cc);
    let (value, error_estimate) = t.sum(s, &mut cc);
    Ok(OracleValue { value, error_estimate })
}

/// ζ_H(s, ix) from the defining sum with an Euler–Maclaurin tail.
///
/// ```
/// use zetaix::oracle::{oracle_hurwitz, OracleConfig};
/// let v = oracle_hurwitz(0.0, 0.3, &OracleConfig::default()).unwrap().value;
/// assert!((v.re - 0.5).abs() < 1e-15 && (v.im + 0.3).abs() < 1e-15);
/// ```
pub fn oracle_hurwitz(s: f64, x: f64, cfg: &OracleConfig) -> Result<OracleValue> {
    check_point(s, x, cfg)?;
    oracle_signed(s, x, cfg)
}

/// ∂_s ζ_H(s, ix) by Richardson-extrapolated central differences of the oracle.
pub fn oracle_hurwitz_deriv(s: f64, x: f64, cfg: &OracleConfig) -> Result<OracleValue> {
    check_point(s, x, cfg)?;
    let reach = cfg.fd_step * (1u64 << cfg.fd_levels) as f64;
    if (s - 1.0).abs() < reach + ORACLE_POLE_GUARD || s - reach <= 1.0 - cfg.em_order as f64 {
        return Err(ZetaError::StencilCrossesPole { s });
    }
    let mut cc = consts();
    let t = Table::new(x, cfg.direct_terms, cfg.em_order, &mut cc);
    let mut rows: Vec<Vec<ComplexValue>> = Vec::with_capacity(cfg.fd_levels);
    let mut h = cfg.fd_step;
    for i in 0..cfg.fd_levels {
        let (up, _) = t.sum(s + h, &mut cc);
        let (down, _) = t.sum(s - h, &mut cc);
        let mut row = vec![(up - down) / (2.0 * h)];
        let mut factor = 1.0;
        for j in 1..=i {
            factor *= 4.0;
            let prev = rows[i - 1][j - 1];
            let cur = row[j - 1];
            row.push(cur + (cur - prev) / (factor - 1.0));
        }
        rows.push(row);
        h *= 0.5;
    }
    let last = rows.last().expect("at least one level");
    let value = *last.last().expect("non-empty row");
    let error_estimate = if last.len() > 1 { (value - last[last.len() - 2]).norm() } else { value.norm() };
    Ok(OracleValue { value, error_estimate })
}

/// |ε ζ_H(1+ε, ix) − 1|, which tends to 0 linearly because the residue at s = 1 is 1.
pub fn oracle_residue_check(epsilon: f64, x: f64) -> Result<f64> {
    if !(1e-5 * (1.0 - 1e-9)..=1e-2 * (1.0 + 1e-9)).contains(&epsilon) {
        return Err(ZetaError::Domain(format!("epsilon={epsilon} outside [1e-5, 1e-2]")));
    }
    let v = oracle_hurwitz(1.0 + epsilon, x, &OracleConfig::default())?.value;
    Ok((v * epsilon - 1.0).norm())
}
