//! Second-order forward-mode jets: a value with its first two derivatives.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Jet {
    pub v: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet {
    pub fn new(v: f64, d1: f64, d2: f64) -> Self {
        Jet { v, d1, d2 }
    }

    pub fn constant(v: f64) -> Self {
        Jet::new(v, 0.0, 0.0)
    }

    /// The independent variable itself.
    pub fn var(v: f64) -> Self {
        Jet::new(v, 1.0, 0.0)
    }

    pub fn scale(self, c: f64) -> Self {
        Jet::new(c * self.v, c * self.d1, c * self.d2)
    }

    /// exp of a jet whose value part is `ln` (the derivatives carried alongside).
    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Jet::new(e, e * self.d1, e * (self.d2 + self.d1 * self.d1))
    }

    pub fn recip(self) -> Self {
        let r = 1.0 / self.v;
        let r2 = r * r;
        Jet::new(r, -self.d1 * r2, (2.0 * self.d1 * self.d1 * r - self.d2) * r2)
    }

    pub fn get(&self, order: usize) -> f64 {
        match order {
            0 => self.v,
            1 => self.d1,
            _ => self.d2,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.v.abs().max(self.d1.abs()).max(self.d2.abs())
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet::new(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet::new(self.v - o.v, self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet::new(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        )
    }
}
