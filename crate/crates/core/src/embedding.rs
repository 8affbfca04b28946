//! Embedding of classes into `A4` and the total product it induces.
//!
//! `phi` sends a proper interval to `A4` according to its sign pattern,
//! `phi_bar` extends it oddly to all classes, and `psi` reads a class back
//! from the invariants `(x1 - x3, x2 - x4)` of the relation `R`. The bullet
//! product is `psi(phi_bar(a) * phi_bar(b))`.

use crate::algebra4::A4;
use crate::class::GClass;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::DEFAULT_TOL;

/// Invariants of an `R`-class: `u = x1 - x3`, `v = x2 - x4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassKey {
    pub u: f64,
    pub v: f64,
}

pub fn key(x: A4) -> ClassKey {
    ClassKey {
        u: x.x1 - x.x3,
        v: x.x2 - x.x4,
    }
}

/// ```text
/// (x1, x2, 0, 0)    if 0 <= x1
/// (0, x2, -x1, 0)   if x1 <= 0 <= x2
/// (0, 0, -x1, -x2)  if x2 <= 0
/// ```
/// The branches agree on their shared boundaries.
pub fn phi(x: Interval) -> A4 {
    let (x1, x2) = (x.lo(), x.hi());
    if x1 >= 0.0 {
        A4::new(x1, x2, 0.0, 0.0)
    } else if x2 >= 0.0 {
        A4::new(0.0, x2, -x1, 0.0)
    } else {
        A4::new(0.0, 0.0, -x1, -x2)
    }
}

/// `phi_bar(K,0) = phi(K)` and `phi_bar(0,K) = -phi(K)`.
pub fn phi_bar(a: GClass) -> A4 {
    match a.as_interval() {
        Some(k) => phi(k),
        None => -phi(Interval::new(-a.inf(), -a.sup()).expect("improper class")),
    }
}

/// Whether `x` is exactly the image of some class.
pub fn in_image(x: A4, tol: f64) -> bool {
    (phi_bar(psi(x)) - x).max_abs() <= tol
}

pub fn r_equivalent(x: A4, y: A4) -> bool {
    r_equivalent_with_tol(x, y, DEFAULT_TOL)
}

pub fn r_equivalent_with_tol(x: A4, y: A4, tol: f64) -> bool {
    let (kx, ky) = (key(x), key(y));
    (kx.u - ky.u).abs() <= tol && (kx.v - ky.v).abs() <= tol
}

pub fn psi(x: A4) -> GClass {
    let k = key(x);
    GClass::new(k.u, k.v)
}

/// The total product on classes.
pub fn bullet(a: GClass, b: GClass) -> GClass {
    psi(phi_bar(a) * phi_bar(b))
}

pub fn classical_mul(x: Interval, y: Interval) -> Interval {
    x.classical_mul(y)
}

/// Containment of proper classes, up to `DEFAULT_TOL`.
pub fn contains(outer: GClass, inner: GClass) -> Result<bool> {
    contains_with_tol(outer, inner, DEFAULT_TOL)
}

pub fn contains_with_tol(outer: GClass, inner: GClass, tol: f64) -> Result<bool> {
    for (name, c) in [("outer", outer), ("inner", inner)] {
        if !c.is_proper() {
            return Err(Error::Domain(format!(
                "containment needs proper classes, {name} operand is {c}"
            )));
        }
    }
    Ok(outer.inf() <= inner.inf() + tol && inner.sup() <= outer.sup() + tol)
}
