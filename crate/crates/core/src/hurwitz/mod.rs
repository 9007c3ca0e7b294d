//! ζ_H(s, ix) and ∂_s ζ_H(s, ix) for real s ≠ 1 and 0 < x < 1.
//!
//! Jonquière's formula gives
//!
//! ζ_H(s, ix) = Γ(1−s)/(2π)^{1−s} · [sin(πs/2) F(s,x) + i cos(πs/2) G(s,x)]
//!
//! with F, G the sum and difference of Li_{1−s}(e^{2πx}) and Li_{1−s}(e^{−2πx}).
//! At integer s the Γ and trigonometric factors are singular or vanish and the
//! limits are taken analytically, which is what the `neg_*`/`pos_*`
//! evaluators implement.

mod config;
mod dispatch;
mod generic;
mod negative;
mod positive;

pub use config::{EvalConfig, EvalOutcome, EvalPoint, Path};
pub use dispatch::evaluate;
pub use generic::{f_and_g, hurwitz_deriv_generic, hurwitz_generic, FAndG};
pub use negative::{hurwitz_deriv_neg_int, hurwitz_neg_int};
pub use positive::{hurwitz_deriv_pos_int, hurwitz_pos_int, vanishing_combinations};

pub(crate) const LN_2PI: f64 = 1.837_877_066_409_345_483_560_659_472_811_235_279_7;
