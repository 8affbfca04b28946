//! The symmetrized interval group and its vector space structure.
//!
//! A class of pairs `(x, y)` of proper intervals, under `(x,y) ~ (z,t)` iff
//! `x + t = y + z`, is stored by the invariant coordinates
//! `(inf, sup) = (x.lo - y.lo, x.hi - y.hi)`. Every group and vector space
//! operation becomes componentwise arithmetic on these two reals.
//!
//! Note that scaling by a negative real is componentwise as well: `-1 * [1,2]`
//! is the negative class `(0,[1,2])`, not the classical interval `[-2,-1]`.
//! This is what makes the set of classes a real vector space.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::interval::Interval;
use crate::DEFAULT_TOL;

/// An element of the quotient group, in canonical endpoint coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GClass {
    inf: f64,
    sup: f64,
}

/// Sign classification of a class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignClass {
    /// `(A, 0)` with `A` non-degenerate.
    Positive,
    /// `(0, A)` with `A` non-degenerate.
    Negative,
    /// `(a, 0)` with `a` a non-zero real.
    Scalar(f64),
    Zero,
}

/// The unique canonical representative of a class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Canonical {
    /// The class is `(A, 0)`.
    Positive(Interval),
    /// The class is `(0, A)`.
    Negative(Interval),
    /// The class is `(a, 0) = (0, -a)`.
    Scalar(f64),
}

impl GClass {
    /// `X1 = ([0,1],0)`.
    pub const X1: GClass = GClass { inf: 0.0, sup: 1.0 };
    /// `X2 = ([1,1],0)`, the unit real.
    pub const X2: GClass = GClass { inf: 1.0, sup: 1.0 };
    pub const ZERO: GClass = GClass { inf: 0.0, sup: 0.0 };

    pub const fn new(inf: f64, sup: f64) -> Self {
        GClass { inf, sup }
    }

    /// The class `(a, 0)` of a real number.
    pub const fn scalar(a: f64) -> Self {
        GClass { inf: a, sup: a }
    }

    /// The class of the pair `(x, y)`.
    pub fn from_pair(x: Interval, y: Interval) -> Self {
        GClass::new(x.lo() - y.lo(), x.hi() - y.hi())
    }

    /// Builds `u1 * X1 + u2 * X2`.
    pub fn from_basis(u1: f64, u2: f64) -> Self {
        GClass::new(u2, u1 + u2)
    }

    pub fn inf(&self) -> f64 {
        self.inf
    }

    pub fn sup(&self) -> f64 {
        self.sup
    }

    pub fn is_finite(&self) -> bool {
        self.inf.is_finite() && self.sup.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.inf == 0.0 && self.sup == 0.0
    }

    /// `inf <= sup`, i.e. the class is `(A, 0)` for a proper interval `A`.
    pub fn is_proper(&self) -> bool {
        self.inf <= self.sup
    }

    /// The interval `[inf, sup]` when the class is proper.
    pub fn as_interval(&self) -> Option<Interval> {
        Interval::new(self.inf, self.sup).ok()
    }

    pub fn scale(self, alpha: f64) -> GClass {
        GClass::new(alpha * self.inf, alpha * self.sup)
    }

    pub fn sign(&self) -> SignClass {
        self.sign_with_tol(DEFAULT_TOL)
    }

    pub fn sign_with_tol(&self, tol: f64) -> SignClass {
        let d = self.sup - self.inf;
        if d.abs() <= tol {
            if self.inf.abs() <= tol {
                SignClass::Zero
            } else {
                SignClass::Scalar(self.inf)
            }
        } else if d > 0.0 {
            SignClass::Positive
        } else {
            SignClass::Negative
        }
    }

    pub fn canonical(&self) -> Canonical {
        self.canonical_with_tol(DEFAULT_TOL)
    }

    pub fn canonical_with_tol(&self, tol: f64) -> Canonical {
        match self.sign_with_tol(tol) {
            SignClass::Positive => Canonical::Positive(
                Interval::new(self.inf, self.sup).expect("positive class has inf < sup"),
            ),
            SignClass::Negative => Canonical::Negative(
                Interval::new(-self.inf, -self.sup).expect("negative class has inf > sup"),
            ),
            SignClass::Scalar(a) => Canonical::Scalar(a),
            SignClass::Zero => Canonical::Scalar(0.0),
        }
    }

    /// Length of the canonical representative.
    pub fn length(&self) -> f64 {
        (self.sup - self.inf).abs()
    }

    /// `c(A)` for `(A,0)` and `-c(A)` for `(0,A)`; both reduce to the mean of the coordinates.
    pub fn center(&self) -> f64 {
        (self.inf + self.sup) / 2.0
    }

    /// Coordinates `(u1, u2)` with `self = u1 * X1 + u2 * X2`.
    pub fn basis_coordinates(&self) -> (f64, f64) {
        (self.sup - self.inf, self.inf)
    }

    /// `l(X) + |c(X)|`.
    pub fn norm(&self) -> f64 {
        self.length() + self.center().abs()
    }

    pub fn distance(&self, other: &GClass) -> f64 {
        (*self - *other).norm()
    }
}

impl Add for GClass {
    type Output = GClass;

    fn add(self, rhs: GClass) -> GClass {
        GClass::new(self.inf + rhs.inf, self.sup + rhs.sup)
    }
}

impl AddAssign for GClass {
    fn add_assign(&mut self, rhs: GClass) {
        *self = *self + rhs;
    }
}

impl Neg for GClass {
    type Output = GClass;

    fn neg(self) -> GClass {
        GClass::new(-self.inf, -self.sup)
    }
}

impl Sub for GClass {
    type Output = GClass;

    fn sub(self, rhs: GClass) -> GClass {
        GClass::new(self.inf - rhs.inf, self.sup - rhs.sup)
    }
}

impl Mul<GClass> for f64 {
    type Output = GClass;

    fn mul(self, rhs: GClass) -> GClass {
        rhs.scale(self)
    }
}

impl std::iter::Sum for GClass {
    fn sum<I: Iterator<Item = GClass>>(iter: I) -> GClass {
        iter.fold(GClass::ZERO, |acc, x| acc + x)
    }
}
