//! Classical closed intervals `[lo, hi]` with `lo <= hi`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::class::GClass;
use crate::error::{Error, Result};
use crate::text::fmt_num;

/// A proper interval of the real line. Both endpoints are finite and `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::ImproperEndpoints { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Result<Self> {
        Interval::new(x, x)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn center(&self) -> f64 {
        (self.hi + self.lo) / 2.0
    }

    /// `lo < 0 < hi`: the endpoints have strictly opposite signs.
    pub fn straddles_zero(&self) -> bool {
        self.lo < 0.0 && 0.0 < self.hi
    }

    /// `lo * hi > 0`: the interval lies strictly on one side of zero.
    pub fn is_sign_definite(&self) -> bool {
        self.lo * self.hi > 0.0
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// The class of the pair `(self, 0)`.
    pub fn to_class(self) -> GClass {
        GClass::new(self.lo, self.hi)
    }

    /// Classical product: the hull of the four endpoint products.
    pub fn classical_mul(self, rhs: Interval) -> Interval {
        let p = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }
}

impl Mul for Interval {
    type Output = Interval;

    fn mul(self, rhs: Interval) -> Interval {
        self.classical_mul(rhs)
    }
}

impl From<Interval> for GClass {
    fn from(x: Interval) -> GClass {
        x.to_class()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", fmt_num(self.lo), fmt_num(self.hi))
    }
}
