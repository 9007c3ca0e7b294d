use std::fmt;

use crate::{ComplexValue, Result, ZetaError};

/// Tolerances and caps threaded through every evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Relative truncation target for every series.
    pub tol_rel: f64,
    /// Maximum number of terms any single series may consume.
    pub term_cap: usize,
    /// Distance from an integer within which s is evaluated by a closed form.
    pub integer_snap: f64,
    /// Exclusion radius around the pole at 1.
    pub pole_guard: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { tol_rel: 1e-12, term_cap: 1000, integer_snap: 1e-6, pole_guard: 1e-6 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol_rel > 0.0 && self.tol_rel < 1.0) {
            return Err(ZetaError::InvalidConfig(format!(
                "tol_rel must lie in (0, 1), got {}",
                self.tol_rel
            )));
        }
        if !(self.integer_snap > 0.0 && self.integer_snap < 0.5) {
            return Err(ZetaError::InvalidConfig(format!(
                "integer_snap must lie in (0, 0.5), got {}",
                self.integer_snap
            )));
        }
        if !(self.pole_guard > 0.0 && self.pole_guard < 0.5) {
            return Err(ZetaError::InvalidConfig(format!(
                "pole_guard must lie in (0, 0.5), got {}",
                self.pole_guard
            )));
        }
        if self.term_cap < 8 {
            return Err(ZetaError::InvalidConfig(format!(
                "term_cap must be at least 8, got {}",
                self.term_cap
            )));
        }
        Ok(())
    }
}

/// One evaluation request: ζ_H(s, ix) when `deriv` is 0, ∂_s ζ_H(s, ix) when 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub s: f64,
    pub x: f64,
    pub deriv: u8,
}

impl EvalPoint {
    pub fn new(s: f64, x: f64, deriv: u8) -> Self {
        EvalPoint { s, x, deriv }
    }
}

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Path {
    GenericLeft,
    GenericRight,
    NegEven,
    NegOdd,
    PosEven,
    PosOdd,
}

impl Path {
    pub fn as_str(&self) -> &'static str {
        match self {
            Path::GenericLeft => "generic-left",
            Path::GenericRight => "generic-right",
            Path::NegEven => "neg-even",
            Path::NegOdd => "neg-odd",
            Path::PosEven => "pos-even",
            Path::PosOdd => "pos-odd",
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: ComplexValue,
    pub path: Path,
    pub error_estimate: f64,
}

pub(crate) fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(ZetaError::Domain(format!("x={x} must lie strictly inside (0, 1)")))
    }
}

pub(crate) fn check_s(s: f64) -> Result<()> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(ZetaError::Domain(format!("s={s} must be finite")))
    }
}
