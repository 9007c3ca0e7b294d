use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("domain error: {0}")]
    Domain(String),
    /// ζ_H(s, ix) has a simple pole at s = 1 with residue 1.
    #[error("simple pole at s=1")]
    Pole,
    #[error("sigma={sigma} is within the pole guard {guard} of 1")]
    PoleProximity { sigma: f64, guard: f64 },
    #[error("tolerance not reached, achieved error estimate {achieved:e}")]
    Accuracy { achieved: f64 },
    #[error("singularity at w=1")]
    Singularity,
    #[error("input belongs to another evaluation path: {0}")]
    UseOtherPath(String),
    #[error("s={s} lies within the integer snap of {nearest}; use the integer fast path")]
    SnapRefused { s: f64, nearest: i64 },
    #[error("difference stencil around s={s} crosses the pole at s=1")]
    StencilCrossesPole { s: f64 },
    #[error("s={s} needs more than em_order={em_order} Euler-Maclaurin corrections")]
    WidenOrder { s: f64, em_order: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, ZetaError>;
