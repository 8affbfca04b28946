//! The 4-dimensional commutative associative algebra `A4`.
//!
//! Product table on the basis `e1..e4`:
//!
//! ```text
//!        e1  e2  e3  e4
//!   e1   e1   0   0  e4
//!   e2    0  e2  e3   0
//!   e3    0  e3  e2   0
//!   e4   e4   0   0  e1
//! ```
//!
//! The unit is `e1 + e2`. The algebra splits as the direct sum of the ideals
//! spanned by `{e1, e4}` and `{e2, e3}`, so it has zero divisors (`e1 * e2 = 0`).

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct A4 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

type Rule = fn(&A4, &A4, &dyn Fn(f64, f64) -> bool) -> bool;

/// Zero patterns on which the partial order is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `(x1, x2, 0, 0)`
    FirstPair,
    /// `(0, x2, x3, 0)`
    Middle,
    /// `(0, 0, x3, x4)`
    LastPair,
}

impl A4 {
    pub const fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        A4 { x1, x2, x3, x4 }
    }

    pub const fn zero() -> Self {
        A4::new(0.0, 0.0, 0.0, 0.0)
    }

    /// `e1 + e2`.
    pub const fn unit() -> Self {
        A4::new(1.0, 1.0, 0.0, 0.0)
    }

    /// Basis vector `e_i`, `i` in `1..=4`.
    pub fn e(i: usize) -> Self {
        let mut c = [0.0; 4];
        c[i - 1] = 1.0;
        A4::from(c)
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    /// `alpha * x + beta * y`.
    pub fn linear(alpha: f64, x: A4, beta: f64, y: A4) -> A4 {
        A4::new(
            alpha * x.x1 + beta * y.x1,
            alpha * x.x2 + beta * y.x2,
            alpha * x.x3 + beta * y.x3,
            alpha * x.x4 + beta * y.x4,
        )
    }

    pub fn scale(self, alpha: f64) -> A4 {
        A4::linear(alpha, self, 0.0, A4::zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.coords().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// The two factors `(x1^2 - x4^2, x2^2 - x3^2)` of the discriminant.
    pub fn discriminant_factors(&self) -> (f64, f64) {
        (
            self.x1 * self.x1 - self.x4 * self.x4,
            self.x2 * self.x2 - self.x3 * self.x3,
        )
    }

    pub fn discriminant(&self) -> f64 {
        let (d1, d2) = self.discriminant_factors();
        d1 * d2
    }

    pub fn is_invertible(&self) -> bool {
        self.is_invertible_with_tol(DEFAULT_TOL)
    }

    /// Invertible iff `x4 != +-x1` and `x3 != +-x2`; each factor is compared
    /// against `tol * max(1, |x|_inf^2)`.
    pub fn is_invertible_with_tol(&self, tol: f64) -> bool {
        let (d1, d2) = self.discriminant_factors();
        let threshold = tol * self.max_abs().powi(2).max(1.0);
        d1.abs() > threshold && d2.abs() > threshold
    }

    pub fn inverse(&self) -> Result<A4> {
        self.inverse_with_tol(DEFAULT_TOL)
    }

    /// `(x1/d1, x2/d2, -x3/d2, -x4/d1)` with `d1 = x1^2 - x4^2`, `d2 = x2^2 - x3^2`.
    pub fn inverse_with_tol(&self, tol: f64) -> Result<A4> {
        if !self.is_invertible_with_tol(tol) {
            return Err(Error::NotInvertible);
        }
        let (d1, d2) = self.discriminant_factors();
        Ok(A4::new(self.x1 / d1, self.x2 / d2, -self.x3 / d2, -self.x4 / d1))
    }

    pub fn shape(&self, tol: f64) -> Vec<Shape> {
        let z = |c: f64| c.abs() <= tol;
        let mut shapes = Vec::with_capacity(3);
        if z(self.x3) && z(self.x4) {
            shapes.push(Shape::FirstPair);
        }
        if z(self.x1) && z(self.x4) {
            shapes.push(Shape::Middle);
        }
        if z(self.x1) && z(self.x2) {
            shapes.push(Shape::LastPair);
        }
        shapes
    }

    pub fn leq(&self, other: &A4) -> Option<bool> {
        self.leq_with_tol(other, DEFAULT_TOL)
    }

    /// The partial order on the images of intervals. The first listed rule
    /// whose shapes match both operands decides; shape pairs outside the
    /// list are not comparable.
    ///
    /// 1. `(x1,x2,0,0) <= (y1,y2,0,0)` iff `y1 <= x1` and `x2 <= y2`
    /// 2. `(x1,x2,0,0) <= (0,y2,y3,0)` iff `x2 <= y2`
    /// 3. `(0,x2,x3,0) <= (0,y2,y3,0)` iff `x3 <= y3` and `x2 <= y2`
    /// 4. `(0,0,x3,x4) <= (0,y2,y3,0)` iff `x3 <= y3`
    /// 5. `(0,0,x3,x4) <= (0,0,y3,y4)` iff `x3 <= y3` and `y4 <= x4`
    pub fn leq_with_tol(&self, other: &A4, tol: f64) -> Option<bool> {
        use Shape::*;
        let (xs, ys) = (self.shape(tol), other.shape(tol));
        let le = |a: f64, b: f64| a <= b + tol;
        let (x, y) = (self, other);
        let rules: [(Shape, Shape, Rule); 5] = [
            (FirstPair, FirstPair, |x, y, le| le(y.x1, x.x1) && le(x.x2, y.x2)),
            (FirstPair, Middle, |x, y, le| le(x.x2, y.x2)),
            (Middle, Middle, |x, y, le| le(x.x3, y.x3) && le(x.x2, y.x2)),
            (LastPair, Middle, |x, y, le| le(x.x3, y.x3)),
            (LastPair, LastPair, |x, y, le| le(x.x3, y.x3) && le(y.x4, x.x4)),
        ];
        rules
            .iter()
            .find(|(sx, sy, _)| xs.contains(sx) && ys.contains(sy))
            .map(|(_, _, rule)| rule(x, y, &le))
    }
}

impl From<[f64; 4]> for A4 {
    fn from(c: [f64; 4]) -> Self {
        A4::new(c[0], c[1], c[2], c[3])
    }
}

impl Mul for A4 {
    type Output = A4;

    /// `(x1y1 + x4y4, x2y2 + x3y3, x3y2 + x2y3, x4y1 + x1y4)`.
    fn mul(self, y: A4) -> A4 {
        let x = self;
        A4::new(
            x.x1 * y.x1 + x.x4 * y.x4,
            x.x2 * y.x2 + x.x3 * y.x3,
            x.x3 * y.x2 + x.x2 * y.x3,
            x.x4 * y.x1 + x.x1 * y.x4,
        )
    }
}

impl Add for A4 {
    type Output = A4;

    fn add(self, rhs: A4) -> A4 {
        A4::linear(1.0, self, 1.0, rhs)
    }
}

impl Sub for A4 {
    type Output = A4;

    fn sub(self, rhs: A4) -> A4 {
        A4::linear(1.0, self, -1.0, rhs)
    }
}

impl Neg for A4 {
    type Output = A4;

    fn neg(self) -> A4 {
        A4::new(-self.x1, -self.x2, -self.x3, -self.x4)
    }
}
