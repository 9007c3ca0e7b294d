//! Real and imaginary parts of the Hurwitz zeta function ζ_H(s, ix) and of
//! its s-derivative, for real s ≠ 1 and 0 < x < 1.
//!
//! Generic s goes through Jonquière's relation between ζ_H and the pair of
//! polylogarithms Li_{1−s}(e^{±2πx}). Integer s ≠ 1 has closed forms built
//! from Bernoulli numbers, Eulerian numbers and ζ_R', ζ_R'' coefficient
//! series. [`hurwitz::evaluate`] picks the route.
//!
//! ```
//! use zetaix::hurwitz::{evaluate, EvalConfig, EvalPoint, Path};
//!
//! let out = evaluate(EvalPoint::new(-2.0, 0.5, 0), &EvalConfig::default()).unwrap();
//! assert_eq!(out.path, Path::NegEven);
//! assert!((out.value.re + 0.125).abs() < 1e-15);
//! ```
//!
//! The [`oracle`] module is an independent Euler–Maclaurin evaluation of the
//! defining sum at 192-bit precision, used to check everything else.

pub mod cli;
pub mod error;
pub mod hurwitz;
mod jet;
pub mod numerics;
pub mod oracle;
pub mod polylog;
pub mod riemann;
pub mod verify;

pub use error::{Result, ZetaError};

/// A complex double; every evaluator returns one.
pub type ComplexValue = num_complex::Complex64;
