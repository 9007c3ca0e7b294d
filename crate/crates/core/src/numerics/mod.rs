//! Combinatorial numbers and classical constants.
//!
//! Bernoulli numbers use the convention B_1 = −1/2 and are computed once with
//! exact rational arithmetic. Eulerian numbers come from their defining
//! alternating sum in big integers.

pub mod gamma;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{ComplexValue, Result, ZetaError};

/// Largest index served by [`bernoulli_number`] and [`bernoulli_poly`].
pub const BERNOULLI_CAP: usize = 60;

/// Largest n served by [`eulerian`].
pub const EULERIAN_CAP: usize = 25;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431_04;

/// First Stieltjes constant γ₁.
pub const STIELTJES_GAMMA1: f64 = -0.072_815_845_483_676_73;

fn bernoulli_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{j=0}^{k} C(k+1, j) B_j = 0, solved for B_k.
        let mut exact: Vec<BigRational> = Vec::with_capacity(BERNOULLI_CAP + 1);
        exact.push(BigRational::one());
        for k in 1..=BERNOULLI_CAP {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for (j, b) in exact.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
            }
            exact.push(-acc / BigRational::from_integer(BigInt::from(k + 1)));
        }
        exact.iter().map(|b| if b.is_zero() { 0.0 } else { b.to_f64().unwrap_or(f64::NAN) }).collect()
    })
}

/// Bernoulli number B_k with B_1 = −1/2.
pub fn bernoulli_number(k: usize) -> Result<f64> {
    if k > BERNOULLI_CAP {
        return Err(ZetaError::Domain(format!("Bernoulli index {k} exceeds cap {BERNOULLI_CAP}")));
    }
    Ok(bernoulli_table()[k])
}

/// Bernoulli polynomial B_n(z) = Σ_k C(n,k) B_k z^{n−k}, by Horner in z.
pub fn bernoulli_poly(n: usize, z: ComplexValue) -> Result<ComplexValue> {
    if n > BERNOULLI_CAP {
        return Err(ZetaError::Domain(format!(
            "Bernoulli polynomial degree {n} exceeds cap {BERNOULLI_CAP}"
        )));
    }
    let table = bernoulli_table();
    // Coefficient of z^{n−k} is C(n,k) B_k; Horner runs from k = 0 upward.
    let mut acc = ComplexValue::new(0.0, 0.0);
    let mut binom = 1.0_f64;
    for (k, b) in table.iter().enumerate().take(n + 1) {
        acc = acc * z + binom * b;
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(acc)
}

/// Harmonic number H_n, with H_0 = 0.
pub fn harmonic(n: u64) -> f64 {
    // Summed from the small end to keep the rounding error flat.
    (1..=n).rev().map(|k| 1.0 / k as f64).sum()
}

/// Ψ(n) = −γ + H_{n−1}.
pub fn digamma_pos_int(n: i64) -> Result<f64> {
    if n <= 0 {
        return Err(ZetaError::Domain(format!("digamma pole at {n}")));
    }
    Ok(harmonic((n - 1) as u64) - EULER_GAMMA)
}

/// Ψ'(n) = π²/6 − Σ_{k<n} 1/k².
pub fn trigamma_pos_int(n: i64) -> Result<f64> {
    if n <= 0 {
        return Err(ZetaError::Domain(format!("trigamma pole at {n}")));
    }
    let partial: f64 = (1..n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
    Ok(std::f64::consts::PI * std::f64::consts::PI / 6.0 - partial)
}

fn eulerian_table() -> &'static [Vec<f64>] {
    static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![Vec::new()];
        for n in 1..=EULERIAN_CAP {
            let row = (0..n)
                .map(|k| {
                    let mut acc = BigInt::zero();
                    let mut binom = BigInt::one();
                    for j in 0..=k + 1 {
                        let term = &binom * BigInt::from(k + 1 - j).pow(n as u32);
                        if j % 2 == 0 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                        binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
                    }
                    debug_assert!(!acc.is_negative());
                    acc.to_f64().unwrap_or(f64::NAN)
                })
                .collect();
            rows.push(row);
        }
        rows
    })
}

/// Eulerian number ⟨n k⟩, the count of permutations of n with k descents.
///
/// Exact in a double while the value stays below 2^53 (n ≤ 20 for every k);
/// rounded to nearest beyond that.
pub fn eulerian(n: usize, k: usize) -> Result<f64> {
    if n == 0 || n > EULERIAN_CAP {
        return Err(ZetaError::Domain(format!("Eulerian n={n} outside 1..={EULERIAN_CAP}")));
    }
    if k >= n {
        return Err(ZetaError::Domain(format!("Eulerian k={k} must be below n={n}")));
    }
    Ok(eulerian_table()[n][k])
}

/// First Stieltjes constant γ₁.
pub fn stieltjes_gamma1() -> f64 {
    STIELTJES_GAMMA1
}

/// n! as a double. Overflows to infinity past 170.
pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli_number(0).unwrap(), 1.0);
        assert_eq!(bernoulli_number(1).unwrap(), -0.5);
        assert_eq!(bernoulli_number(2).unwrap(), 1.0 / 6.0);
        assert_eq!(bernoulli_number(3).unwrap(), 0.0);
        assert_eq!(bernoulli_number(4).unwrap(), -1.0 / 30.0);
        assert_eq!(bernoulli_number(12).unwrap(), -691.0 / 2730.0);
        assert!(bernoulli_number(61).is_err());
    }

    #[test]
    fn bernoulli_odd_vanish() {
        for k in (3..=BERNOULLI_CAP).step_by(2) {
            assert_eq!(bernoulli_number(k).unwrap(), 0.0, "k={k}");
        }
    }

    #[test]
    fn bernoulli_large_index() {
        // B_60 = -1215233140483755572040304994079820246041491 / 56786730
        let b60 = -1215233140483755572040304994079820246041491.0 / 56786730.0;
        let got = bernoulli_number(60).unwrap();
        assert!(((got - b60) / b60).abs() < 1e-15);
    }

    #[test]
    fn bernoulli_poly_examples() {
        let one = bernoulli_poly(0, ComplexValue::new(3.0, -7.0)).unwrap();
        assert_eq!(one, ComplexValue::new(1.0, 0.0));
        let b1 = bernoulli_poly(1, ComplexValue::new(0.0, 0.3)).unwrap();
        assert_eq!(b1, ComplexValue::new(-0.5, 0.3));
        let b2 = bernoulli_poly(2, ComplexValue::new(0.0, 0.5)).unwrap();
        assert!((b2.re + 1.0 / 12.0).abs() < 1e-16);
        assert!((b2.im + 0.5).abs() < 1e-16);
        assert!(bernoulli_poly(61, ComplexValue::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn harmonic_and_polygamma() {
        assert_eq!(harmonic(0), 0.0);
        assert_eq!(harmonic(1), 1.0);
        assert!((harmonic(3) - 11.0 / 6.0).abs() < 1e-15);
        assert_eq!(digamma_pos_int(1).unwrap(), -EULER_GAMMA);
        assert!((digamma_pos_int(2).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        assert!((digamma_pos_int(4).unwrap() - (11.0 / 6.0 - EULER_GAMMA)).abs() < 1e-15);
        assert!(digamma_pos_int(0).is_err());
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert_eq!(trigamma_pos_int(1).unwrap(), z2);
        assert!((trigamma_pos_int(2).unwrap() - (z2 - 1.0)).abs() < 1e-15);
        assert!((trigamma_pos_int(3).unwrap() - (z2 - 1.25)).abs() < 1e-15);
        assert!(trigamma_pos_int(-1).is_err());
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(1, 0).unwrap(), 1.0);
        assert_eq!(eulerian(3, 1).unwrap(), 4.0);
        let row: f64 = (0..4).map(|k| eulerian(4, k).unwrap()).sum();
        assert_eq!(row, 24.0);
        assert!(eulerian(3, 3).is_err());
        assert!(eulerian(0, 0).is_err());
        assert!(eulerian(26, 0).is_err());
    }

    #[test]
    fn eulerian_rows_and_symmetry() {
        for n in 1..=12 {
            let row: Vec<f64> = (0..n).map(|k| eulerian(n, k).unwrap()).collect();
            assert_eq!(row.iter().sum::<f64>(), factorial(n), "n={n}");
            for k in 0..n {
                assert_eq!(row[k], row[n - 1 - k]);
            }
        }
    }

    #[test]
    fn stieltjes_estimator() {
        // (ζ(1+h) − 1/h − γ)/(−h) → γ₁, Richardson over three halvings.
        let est = |h: f64| {
            let z = crate::riemann::riemann_zeta(0, 1.0 + h).unwrap();
            (z - 1.0 / h - EULER_GAMMA) / (-h)
        };
        let hs = [1e-2, 5e-3, 2.5e-3];
        let d: Vec<f64> = hs.iter().map(|&h| est(h)).collect();
        let r1 = [2.0 * d[1] - d[0], 2.0 * d[2] - d[1]];
        let r2 = (4.0 * r1[1] - r1[0]) / 3.0;
        assert!(r2 < 0.0);
        assert!((r2 - stieltjes_gamma1()).abs() < 1e-8, "{r2}");
        let h = 1e-3;
        let z = crate::riemann::riemann_zeta(0, 1.0 + h).unwrap();
        assert!((z - 1.0 / h - EULER_GAMMA + STIELTJES_GAMMA1 * h).abs() < 1e-5);
    }

    #[test]
    fn bernoulli_difference_grid() {
        let grid = [
            ComplexValue::new(3.0, 0.0),
            ComplexValue::new(-2.5, 1.0),
            ComplexValue::new(0.5, 4.0),
            ComplexValue::new(-3.0, -3.0),
            ComplexValue::new(2.0, 5.0),
        ];
        for n in 1..=20usize {
            for &z in &grid {
                let lhs = bernoulli_poly(n, z + 1.0).unwrap() - bernoulli_poly(n, z).unwrap();
                let rhs = z.powu(n as u32 - 1) * n as f64;
                assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm(), "n={n} z={z}");
            }
        }
    }

    proptest! {
        #[test]
        fn bernoulli_difference(n in 1usize..=20, re in -2.0f64..2.0, im in -2.0f64..2.0) {
            // Keep |z| ≥ 1 so z^{n−1} is not itself a cancellation residue.
            let z = ComplexValue::new(re, im);
            prop_assume!(z.norm() >= 1.0);
            let lhs = bernoulli_poly(n, z + 1.0).unwrap() - bernoulli_poly(n, z).unwrap();
            let rhs = z.powu(n as u32 - 1) * n as f64;
            let scale = rhs.norm().max((z.norm() + 1.0).powi(n as i32));
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }

        #[test]
        fn digamma_step(n in 1i64..10_000) {
            let d = digamma_pos_int(n + 1).unwrap() - digamma_pos_int(n).unwrap();
            prop_assert!((d - 1.0 / n as f64).abs() < 1e-14);
        }

        #[test]
        fn harmonic_monotone(n in 0u64..5_000) {
            prop_assert!(harmonic(n + 1) > harmonic(n));
        }
    }
}
