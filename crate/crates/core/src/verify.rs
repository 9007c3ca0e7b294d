//! Self-verification suites: identities, closed forms and the independent
//! Euler–Maclaurin oracle, each reduced to a worst-case error and a tolerance.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::hurwitz::{
    evaluate, hurwitz_deriv_generic, hurwitz_deriv_neg_int, hurwitz_deriv_pos_int, hurwitz_generic,
    hurwitz_neg_int, hurwitz_pos_int, vanishing_combinations, EvalConfig, EvalOutcome, EvalPoint,
};
use crate::numerics::bernoulli_poly;
use crate::oracle::{oracle_hurwitz, oracle_hurwitz_deriv, oracle_residue_check, OracleConfig};
use crate::polylog::{polylog_neg_int, polylog_order_deriv, polylog_series, Sign};
use crate::riemann::{even_zeta_closed_form, riemann_zeta};
use crate::{ComplexValue, Result, ZetaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Bernoulli,
    OracleValues,
    OracleDerivs,
    Inversion,
    Eulerian,
    Riemann,
    Residue,
    Vanishing,
    Seam,
    PolylogDerivs,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Bernoulli,
        Suite::OracleValues,
        Suite::OracleDerivs,
        Suite::Inversion,
        Suite::Eulerian,
        Suite::Riemann,
        Suite::Residue,
        Suite::Vanishing,
        Suite::Seam,
        Suite::PolylogDerivs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bernoulli => "bernoulli",
            Suite::OracleValues => "oracle-values",
            Suite::OracleDerivs => "oracle-derivs",
            Suite::Inversion => "inversion",
            Suite::Eulerian => "eulerian",
            Suite::Riemann => "riemann",
            Suite::Residue => "residue",
            Suite::Vanishing => "vanishing",
            Suite::Seam => "seam",
            Suite::PolylogDerivs => "polylog-derivs",
        }
    }

    /// 1-based position in [`Suite::ALL`].
    pub fn number(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap_or(0) + 1
    }

    pub fn run(self) -> SuiteReport {
        let start = Instant::now();
        let parts = match self {
            Suite::Bernoulli => bernoulli(),
            Suite::OracleValues => oracle_values(),
            Suite::OracleDerivs => oracle_derivs(),
            Suite::Inversion => inversion(),
            Suite::Eulerian => eulerian_brute(),
            Suite::Riemann => riemann(),
            Suite::Residue => residue(),
            Suite::Vanishing => vanishing(),
            Suite::Seam => seam(),
            Suite::PolylogDerivs => polylog_derivs(),
        };
        SuiteReport { suite: self, parts, elapsed: start.elapsed() }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ZetaError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            ZetaError::Domain(format!("unknown suite '{s}', expected one of {}", names.join(", ")))
        })
    }
}

/// Worst observed error of one check family against its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Part {
    pub label: String,
    pub max_error: f64,
    pub tolerance: f64,
    /// Where `max_error` was observed.
    pub worst_at: String,
    /// Evaluation errors hit along the way; any entry fails the part.
    pub errors: Vec<String>,
}

impl Part {
    fn new(label: impl Into<String>, tolerance: f64) -> Self {
        Part { label: label.into(), max_error: 0.0, tolerance, worst_at: String::new(), errors: Vec::new() }
    }

    fn record(&mut self, err: f64, at: impl FnOnce() -> String) {
        if err.is_nan() || err > self.max_error || self.worst_at.is_empty() {
            self.max_error = if err.is_nan() { f64::INFINITY } else { err };
            self.worst_at = at();
        }
    }

    fn check<T>(&mut self, at: impl Fn() -> String, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.max_error = f64::INFINITY;
                self.worst_at = at();
                self.errors.push(format!("{}: {e}", at()));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.max_error <= self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub parts: Vec<Part>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(Part::passed)
    }

    /// The part closest to (or furthest past) its tolerance.
    pub fn worst(&self) -> Option<&Part> {
        self.parts.iter().max_by(|a, b| (a.max_error / a.tolerance).total_cmp(&(b.max_error / b.tolerance)))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {:<15}", self.suite.number(), self.suite.name())?;
        if let Some(w) = self.worst() {
            write!(f, " max_err={:.3e} tol={:.0e} ({})", w.max_error, w.tolerance, w.label)?;
        }
        write!(f, " {:.2}s", self.elapsed.as_secs_f64())
    }
}

/// Runs every suite in order.
pub fn run_all() -> Vec<SuiteReport> {
    Suite::ALL.into_iter().map(Suite::run).collect()
}

// |a − b| / max(floor, |b|)
fn scaled(a: f64, b: f64, floor: f64) -> f64 {
    (a - b).abs() / b.abs().max(floor)
}

fn scaled_c(a: ComplexValue, b: ComplexValue, floor: f64) -> f64 {
    (a - b).norm() / b.norm().max(floor)
}

const ORACLE_S: [f64; 17] =
    [-3.5, -1.25, -0.5, 0.3, 2.5, 4.5, -6.0, -5.0, -4.0, -3.0, -2.0, -1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
const ORACLE_X: [f64; 3] = [0.1, 0.5, 0.9];

fn bernoulli() -> Vec<Part> {
    let cfg = EvalConfig::default();
    let mut re = Part::new("Re vs -B_{n+1}(ix)/(n+1)", 1e-10);
    let mut im = Part::new("Im vs -B_{n+1}(ix)/(n+1)", 1e-10);
    for n in 0..=10usize {
        for k in 1..=19 {
            let x = k as f64 * 0.05;
            let at = || format!("n={n} x={x:.2}");
            let Some(v) = re.check(at, evaluate(EvalPoint::new(-(n as f64), x, 0), &cfg)) else {
                continue;
            };
            let Some(b) = re.check(at, bernoulli_poly(n + 1, ComplexValue::new(0.0, x))) else {
                continue;
            };
            let want = -b / (n + 1) as f64;
            // Components within 1e-2 of zero are held to 1e-12 absolute.
            re.record(scaled(v.value.re, want.re, 1e-2), at);
            im.record(scaled(v.value.im, want.im, 1e-2), at);
        }
    }
    vec![re, im]
}

fn oracle_values() -> Vec<Part> {
    let cfg = EvalConfig::default();
    let ocfg = OracleConfig::default();
    let mut part = Part::new("relative |Δ| vs oracle", 1e-8);
    for &s in &ORACLE_S {
        for &x in &ORACLE_X {
            let at = || format!("s={s} x={x}");
            let Some(v) = part.check(at, evaluate(EvalPoint::new(s, x, 0), &cfg)) else {
                continue;
            };
            let Some(o) = part.check(at, oracle_hurwitz(s, x, &ocfg)) else {
                continue;
            };
            part.record(scaled_c(v.value, o.value, 0.0), at);
        }
    }
    vec![part]
}

fn oracle_derivs() -> Vec<Part> {
    let cfg = EvalConfig::default();
    let ocfg = OracleConfig::default();
    let mut part = Part::new("|Δ|/max(1,|ref|) vs oracle FD", 1e-6);
    for &s in &ORACLE_S {
        for &x in &ORACLE_X {
            let at = || format!("s={s} x={x}");
            let Some(v) = part.check(at, evaluate(EvalPoint::new(s, x, 1), &cfg)) else {
                continue;
            };
            let Some(o) = part.check(at, oracle_hurwitz_deriv(s, x, &ocfg)) else {
                continue;
            };
            part.record(scaled_c(v.value, o.value, 1.0), at);
        }
    }
    vec![part]
}

fn inversion() -> Vec<Part> {
    let mut zero = Part::new("n=0 residual/magnitude", 1e-10);
    let mut rest = Part::new("n=1..8 residual/magnitude", 1e-10);
    for n in 0..=8usize {
        let part = if n == 0 { &mut zero } else { &mut rest };
        for &w in &[0.1, 0.37, 0.8] {
            let at = || format!("n={n} w={w}");
            let Some(a) = part.check(at, polylog_neg_int(n, w)) else { continue };
            let Some(b) = part.check(at, polylog_neg_int(n, 1.0 / w)) else { continue };
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let residual = (a + sign * b).abs() / a.abs().max(b.abs());
            part.record(residual, at);
        }
    }
    vec![zero, rest]
}

fn eulerian_brute() -> Vec<Part> {
    let mut part = Part::new("relative vs brute-force sum", 1e-11);
    for n in 1..=8usize {
        for &w in &[0.1, 0.5, 0.9f64] {
            let at = || format!("n={n} w={w}");
            let Some(closed) = part.check(at, polylog_neg_int(n, w)) else { continue };
            let mut sum = 0.0;
            let mut k = 1u32;
            loop {
                let t = (k as f64).powi(n as i32) * w.powi(k as i32);
                sum += t;
                if (k as f64) > n as f64 / -w.ln() && t < 1e-18 * sum {
                    break;
                }
                k += 1;
            }
            part.record(scaled(closed, sum, 0.0), at);
        }
    }
    vec![part]
}

fn riemann() -> Vec<Part> {
    let mut zeros = Part::new("|zeta(-2m)|", 1e-12);
    let mut evens = Part::new("zeta(2m) vs Bernoulli form", 1e-12);
    for m in 1..=6usize {
        let at = || format!("m={m}");
        if let Some(z) = zeros.check(at, riemann_zeta(0, -2.0 * m as f64)) {
            zeros.record(z.abs(), at);
        }
        let z = evens.check(at, riemann_zeta(0, 2.0 * m as f64));
        let c = evens.check(at, even_zeta_closed_form(m));
        if let (Some(z), Some(c)) = (z, c) {
            evens.record(scaled(z, c, 0.0), at);
        }
    }
    vec![zeros, evens]
}

fn residue() -> Vec<Part> {
    const EPS: [f64; 3] = [1e-2, 1e-3, 1e-4];
    let mut bound = Part::new("residual at eps=1e-3", 5e-2);
    // First-order vanishing: successive ratios within [5, 20] of each other,
    // i.e. |log10 ratio − 1| ≤ log10 2.
    let mut linear = Part::new("|log10(ratio) - 1|", 2f64.log10());
    for &x in &[0.25, 0.75] {
        let mut r = [0.0; 3];
        let mut ok = true;
        for (i, &eps) in EPS.iter().enumerate() {
            match linear.check(|| format!("eps={eps} x={x}"), oracle_residue_check(eps, x)) {
                Some(v) => r[i] = v,
                None => ok = false,
            }
        }
        if !ok {
            continue;
        }
        bound.record(r[1], || format!("x={x}"));
        for i in 0..2 {
            let ratio = r[i] / r[i + 1];
            linear.record((ratio.log10() - 1.0).abs(), || {
                format!("x={x} eps={}/{} ratio={ratio:.3}", EPS[i], EPS[i + 1])
            });
        }
    }
    vec![bound, linear]
}

fn vanishing() -> Vec<Part> {
    let mut g = Part::new("|G(2m,x)|", 1e-12);
    let mut f = Part::new("|F(2m+1,x)|", 1e-12);
    for m in 1..=3 {
        for &x in &[0.2, 0.5, 0.8] {
            let at = || format!("m={m} x={x}");
            if let Some((gv, fv)) = g.check(at, vanishing_combinations(m, x)) {
                g.record(gv.abs(), at);
                f.record(fv.abs(), at);
            }
        }
    }
    vec![g, f]
}

fn fast_path(n: i32, x: f64, deriv: u8, cfg: &EvalConfig) -> Result<EvalOutcome> {
    match (n <= 0, deriv) {
        (true, 0) => hurwitz_neg_int(n.unsigned_abs(), x, cfg),
        (true, _) => hurwitz_deriv_neg_int(n.unsigned_abs(), x, cfg),
        (false, 0) => hurwitz_pos_int(n as u32, x, cfg),
        (false, _) => hurwitz_deriv_pos_int(n as u32, x, cfg),
    }
}

fn seam() -> Vec<Part> {
    const OFFSET: f64 = 1e-5;
    let cfg = EvalConfig::default();
    let mut parts =
        [Part::new("value |Δ|/max(1,|ref|)", 1e-4), Part::new("derivative |Δ|/max(1,|ref|)", 1e-4)];
    for n in (-6..=-1).chain(2..=6) {
        for &x in &[0.2, 0.5, 0.8] {
            for deriv in 0..=1u8 {
                let part = &mut parts[deriv as usize];
                let at = || format!("n={n} x={x}");
                let Some(fast) = part.check(at, fast_path(n, x, deriv, &cfg)) else {
                    continue;
                };
                for s in [n as f64 - OFFSET, n as f64 + OFFSET] {
                    let at = || format!("s={s} x={x}");
                    let generic = match deriv {
                        0 => hurwitz_generic(s, x, &cfg),
                        _ => hurwitz_deriv_generic(s, x, &cfg),
                    };
                    if let Some(g) = part.check(at, generic) {
                        part.record(scaled_c(g.value, fast.value, 1.0), at);
                    }
                }
            }
        }
    }
    parts.into()
}

fn polylog_derivs() -> Vec<Part> {
    let cfg = EvalConfig::default();
    let mut parts = [Part::new("order 1 vs 5-point FD", 1e-7), Part::new("order 2 vs 5-point FD", 1e-5)];
    for n in 1..=3u32 {
        let nu = 1.0 - n as f64;
        for &x in &[0.2, 0.5, 0.8] {
            let f = |v: f64| polylog_series(v, x, Sign::Minus, &cfg).map(|r| r.value.re);
            for j in 1..=2u8 {
                let part = &mut parts[j as usize - 1];
                let at = || format!("n={n} x={x}");
                let h: f64 = if j == 1 { 1e-3 } else { 1e-2 };
                let stencil: Result<Vec<f64>> =
                    [-2.0, -1.0, 0.0, 1.0, 2.0].iter().map(|k| f(nu + k * h)).collect();
                let Some(y) = part.check(at, stencil) else { continue };
                let fd = if j == 1 {
                    (y[0] - 8.0 * y[1] + 8.0 * y[3] - y[4]) / (12.0 * h)
                } else {
                    (-y[0] + 16.0 * y[1] - 30.0 * y[2] + 16.0 * y[3] - y[4]) / (12.0 * h * h)
                };
                if let Some(d) = part.check(at, polylog_order_deriv(j, n, x, Sign::Minus, &cfg)) {
                    part.record(scaled(d.re, fd, 1.0), at);
                }
            }
        }
    }
    parts.into()
}
