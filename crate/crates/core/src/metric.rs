//! Balls of the norm `l(X) + |c(X)|` and their picture in the endpoint plane.
//!
//! In length/center coordinates `s = sup - inf`, `c = (inf + sup) / 2` the
//! norm is `|s| + |c|`, so a ball is a diamond there and a parallelogram in
//! the `(inf, sup)` plane.

use crate::class::{GClass, SignClass};
use crate::error::{Error, Result};

/// Open ball membership: `d(x, x0) < eps`.
pub fn ball_contains(x0: GClass, eps: f64, x: GClass) -> bool {
    x.distance(&x0) < eps
}

/// A quadrilateral in the `(inf, sup)` plane, vertices listed counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parallelogram {
    pub vertices: [(f64, f64); 4],
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl Parallelogram {
    /// Opposite sides are parallel up to `tol` (cross product of their directions).
    pub fn is_parallelogram(&self, tol: f64) -> bool {
        let v = &self.vertices;
        let side = |i: usize| {
            let (p, q) = (v[i], v[(i + 1) % 4]);
            (q.0 - p.0, q.1 - p.1)
        };
        let par = |a: (f64, f64), b: (f64, f64)| (a.0 * b.1 - a.1 * b.0).abs() <= tol;
        par(side(0), side(2)) && par(side(1), side(3))
    }

    /// Strict interior test.
    pub fn contains_point(&self, p: (f64, f64)) -> bool {
        let v = &self.vertices;
        (0..4).all(|i| cross(v[i], v[(i + 1) % 4], p) > 0.0)
    }

    /// Signed distance-like margin of `p` to the boundary; negative outside.
    pub fn margin(&self, p: (f64, f64)) -> f64 {
        let v = &self.vertices;
        (0..4)
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % 4]);
                let len = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
                cross(a, b, p) / len
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// The `eps`-ball around a positive class `x0 = ([a,b],0)` with `0 <= a`:
/// vertices `(a-e,b-e)`, `(a+e/2,b-e/2)`, `(a+e,b+e)`, `(a-e/2,b+e/2)`.
pub fn neighborhood_vertices(x0: GClass, eps: f64) -> Result<Parallelogram> {
    if x0.sign() != SignClass::Positive || x0.inf() < 0.0 {
        return Err(Error::Domain(format!(
            "neighborhood needs a positive class with inf >= 0, got {x0}"
        )));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::Domain(format!("radius must be positive, got {eps}")));
    }
    let (a, b) = (x0.inf(), x0.sup());
    Ok(Parallelogram {
        vertices: [
            (a - eps, b - eps),
            (a + eps / 2.0, b - eps / 2.0),
            (a + eps, b + eps),
            (a - eps / 2.0, b + eps / 2.0),
        ],
    })
}
