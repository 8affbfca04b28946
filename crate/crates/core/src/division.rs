//! Exact and Euclidean division of classes.
//!
//! Positive operands `X = [x1,x2]`, `Y = [y1,y2]` with `0 < x1`:
//! `Y = X * Z` has the solution `Z = [y1/x1, y2/x2]` whenever that is a
//! proper interval, i.e. `y1 x2 <= y2 x1`. Otherwise the best one can do is a
//! point quotient with a point remainder.
//!
//! Zero-containing operands are written `X = [-x1,x2]`, `Y = [-y1,y2]` with
//! all four numbers positive. Exact division solves the 2x2 system
//!
//! ```text
//! y1 = x1 z2 + x2 z3
//! y2 = x2 z2 + x1 z3
//! ```
//!
//! for `Z = [-z3, z2]`, which is singular when `x1 = x2`.

use crate::class::GClass;
use crate::embedding::bullet;
use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

/// `Y = X * quotient + remainder`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivisionResult {
    pub quotient: GClass,
    pub remainder: GClass,
    pub exact: bool,
}

impl DivisionResult {
    fn exact(quotient: GClass) -> Self {
        DivisionResult {
            quotient,
            remainder: GClass::ZERO,
            exact: true,
        }
    }

    /// `divisor * quotient + remainder`, which should give back the dividend.
    pub fn reconstruct(&self, divisor: GClass) -> GClass {
        bullet(divisor, self.quotient) + self.remainder
    }
}

// Absolute slack for a comparison between products of the given magnitudes.
fn slack(tol: f64, a: f64, b: f64) -> f64 {
    tol * a.abs().max(b.abs()).max(1.0)
}

fn positive_parts(y: GClass, x: GClass, need_x1: bool, tol: f64) -> Result<(f64, f64, f64, f64)> {
    let (x1, x2, y1, y2) = (x.inf(), x.sup(), y.inf(), y.sup());
    if !x.is_proper() || !y.is_proper() || y1 < -tol || x1 < -tol || (need_x1 && x1 <= tol) {
        return Err(Error::Domain(format!(
            "expected positive operands with 0 {} inf(X) and 0 <= inf(Y), got Y = {y}, X = {x}",
            if need_x1 { "<" } else { "<=" }
        )));
    }
    Ok((x1.max(0.0), x2, y1.max(0.0), y2))
}

/// Zero-containing parts `(x1, x2, y1, y2)` of `X = [-x1,x2]`, `Y = [-y1,y2]`.
fn zero_containing_parts(y: GClass, x: GClass, tol: f64) -> Result<(f64, f64, f64, f64)> {
    let (x1, x2, y1, y2) = (-x.inf(), x.sup(), -y.inf(), y.sup());
    if !(x1 > tol && x2 > tol && y1 > tol && y2 > tol) {
        return Err(Error::Domain(format!(
            "expected operands with inf < 0 < sup, got Y = {y}, X = {x}"
        )));
    }
    Ok((x1, x2, y1, y2))
}

pub fn div_exact_positive(y: GClass, x: GClass) -> Result<GClass> {
    div_exact_positive_with_tol(y, x, DEFAULT_TOL)
}

/// `Z = [y1/x1, y2/x2]`; the boundary `y1 x2 = y2 x1` gives a point quotient.
pub fn div_exact_positive_with_tol(y: GClass, x: GClass, tol: f64) -> Result<GClass> {
    let (x1, x2, y1, y2) = positive_parts(y, x, true, tol)?;
    let (lhs, rhs) = (y2 * x1, x2 * y1);
    if lhs < rhs - slack(tol, lhs, rhs) {
        return Err(Error::RatioConditionFailed(format!(
            "y2/y1 >= x2/x1 fails ({y2}*{x1} < {x2}*{y1}), use Euclidean division"
        )));
    }
    let (z1, z2) = (y1 / x1, y2 / x2);
    Ok(GClass::new(z1.min(z2), z2))
}

pub fn div_exact_zero_containing(y: GClass, x: GClass) -> Result<GClass> {
    div_exact_zero_containing_with_tol(y, x, DEFAULT_TOL)
}

pub fn div_exact_zero_containing_with_tol(y: GClass, x: GClass, tol: f64) -> Result<GClass> {
    let (x1, x2, y1, y2) = zero_containing_parts(y, x, tol)?;
    if (x1 - x2).abs() <= tol * x1.max(x2).max(1.0) {
        return Err(Error::CenteredDivisor);
    }
    let det = x1 * x1 - x2 * x2;
    let z2 = (x1 * y1 - x2 * y2) / det;
    let z3 = (x1 * y2 - x2 * y1) / det;
    if z2 < -tol || z3 < -tol {
        return Err(Error::RatioConditionFailed(format!(
            "y2/y1 and y1/y2 are not on the same side of x1/x2 (z2 = {z2}, z3 = {z3})"
        )));
    }
    Ok(GClass::new(-z3.max(0.0), z2.max(0.0)))
}

pub fn euclid_positive(y: GClass, x: GClass) -> Result<DivisionResult> {
    euclid_positive_with_tol(y, x, DEFAULT_TOL)
}

/// Point quotient `(y2-y1)/(x2-x1)` and point remainder `(x2 y1 - x1 y2)/(x2-x1)`.
pub fn euclid_positive_with_tol(y: GClass, x: GClass, tol: f64) -> Result<DivisionResult> {
    let (x1, x2, y1, y2) = positive_parts(y, x, false, tol)?;
    let dx = x2 - x1;
    if dx <= tol * x2.max(1.0) {
        return Err(Error::DegenerateDivisor);
    }
    let (lhs, rhs) = (x1 * y2, x2 * y1);
    if lhs >= rhs - slack(tol, lhs, rhs) {
        return Err(Error::RatioConditionFailed(format!(
            "x1/x2 < y1/y2 fails ({x1}*{y2} >= {x2}*{y1}), exact division applies"
        )));
    }
    Ok(DivisionResult {
        quotient: GClass::scalar((y2 - y1) / dx),
        remainder: GClass::scalar((x2 * y1 - x1 * y2) / dx),
        exact: false,
    })
}

pub fn euclid_zero_containing(y: GClass, x: GClass) -> Result<DivisionResult> {
    euclid_zero_containing_with_tol(y, x, DEFAULT_TOL)
}

/// `Z = [-y2/x1, 0]`, `R = [-(x1 y1 - x2 y2)/x1, 0]`, under strict inequalities.
pub fn euclid_zero_containing_with_tol(y: GClass, x: GClass, tol: f64) -> Result<DivisionResult> {
    let (x1, x2, y1, y2) = zero_containing_parts(y, x, tol)
        .map_err(|e| Error::PreconditionFailed(e.to_string()))?;
    let fail = |what: &str| Err(Error::PreconditionFailed(what.to_string()));
    if x1 <= x2 + slack(tol, x1, x2) {
        return fail("x1 > x2");
    }
    if x1 * y1 <= x2 * y2 + slack(tol, x1 * y1, x2 * y2) {
        return fail("x1/x2 > y2/y1");
    }
    if x1 * y2 >= x2 * y1 - slack(tol, x1 * y2, x2 * y1) {
        return fail("x1/x2 < y1/y2");
    }
    Ok(DivisionResult {
        quotient: GClass::new(-y2 / x1, 0.0),
        remainder: GClass::new(-(x1 * y1 - x2 * y2) / x1, 0.0),
        exact: false,
    })
}

pub fn divide(y: GClass, x: GClass) -> Result<DivisionResult> {
    divide_with_tol(y, x, DEFAULT_TOL)
}

/// Picks the applicable case. Tried in order: exact positive, Euclidean
/// positive, exact zero-containing, Euclidean zero-containing.
pub fn divide_with_tol(y: GClass, x: GClass, tol: f64) -> Result<DivisionResult> {
    let unsupported = || {
        Err(Error::Unsupported(format!(
            "no division rule covers Y = {y}, X = {x}"
        )))
    };
    let nonneg = |c: GClass| c.is_proper() && c.inf() >= -tol;
    let straddles = |c: GClass| c.inf() < -tol && c.sup() > tol;

    if nonneg(x) && nonneg(y) {
        match div_exact_positive_with_tol(y, x, tol) {
            Ok(z) => return Ok(DivisionResult::exact(z)),
            Err(Error::RatioConditionFailed(_)) | Err(Error::Domain(_)) => {}
            Err(e) => return Err(e),
        }
        return match euclid_positive_with_tol(y, x, tol) {
            Ok(r) => Ok(r),
            Err(Error::DegenerateDivisor) => Err(Error::DegenerateDivisor),
            Err(_) => unsupported(),
        };
    }
    if straddles(x) && straddles(y) {
        let centered = match div_exact_zero_containing_with_tol(y, x, tol) {
            Ok(z) => return Ok(DivisionResult::exact(z)),
            Err(Error::CenteredDivisor) => true,
            Err(Error::RatioConditionFailed(_)) => false,
            Err(e) => return Err(e),
        };
        return match euclid_zero_containing_with_tol(y, x, tol) {
            Ok(r) => Ok(r),
            Err(_) if centered => Err(Error::CenteredDivisor),
            Err(_) => Err(Error::Unsupported(format!(
                "Y = {y}, X = {x} satisfies x1/x2 < y2/y1 and x1/x2 > y1/y2, which has no closed form here"
            ))),
        };
    }
    unsupported()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra4::A4;
    use crate::embedding::{phi_bar, psi};
    use proptest::prelude::*;

    fn c(a: f64, b: f64) -> GClass {
        GClass::new(a, b)
    }

    fn close(a: GClass, b: GClass, tol: f64) -> bool {
        (a.inf() - b.inf()).abs() <= tol && (a.sup() - b.sup()).abs() <= tol
    }

    #[test]
    fn exact_positive_examples() {
        assert_eq!(div_exact_positive(c(2., 6.), c(1., 2.)), Ok(c(2., 3.)));
        let x = c(1.5, 4.0);
        assert_eq!(div_exact_positive(x, x), Ok(c(1., 1.)));
        assert!(matches!(
            div_exact_positive(c(1., 3.), c(1., 4.)),
            Err(Error::RatioConditionFailed(_))
        ));
        assert!(matches!(div_exact_positive(c(1., 3.), c(0., 4.)), Err(Error::Domain(_))));
        assert!(matches!(div_exact_positive(c(-1., 3.), c(1., 4.)), Err(Error::Domain(_))));
        // y1 = 0 is fine as long as the quotient is proper
        assert_eq!(div_exact_positive(c(0., 4.), c(1., 2.)), Ok(c(0., 2.)));
    }

    #[test]
    fn boundary_ratio_is_exact() {
        let z = div_exact_positive(c(2., 4.), c(1., 2.)).unwrap();
        assert_eq!(z, GClass::scalar(2.0));
        assert!(matches!(euclid_positive(c(2., 4.), c(1., 2.)), Err(Error::RatioConditionFailed(_))));
    }

    #[test]
    fn exact_zero_containing_examples() {
        let z = div_exact_zero_containing(c(-2., 3.), c(-4., 2.)).unwrap();
        assert!(close(z, c(-8. / 12., 2. / 12.), 1e-15));
        let x = c(-4., 2.);
        assert!(close(div_exact_zero_containing(x, x).unwrap(), c(0., 1.), 1e-15));
        assert_eq!(bullet(x, c(0., 1.)), x);
        assert_eq!(div_exact_zero_containing(c(-2., 3.), c(-1., 1.)), Err(Error::CenteredDivisor));
    }

    #[test]
    fn euclid_positive_examples() {
        let r = euclid_positive(c(1., 3.), c(1., 4.)).unwrap();
        assert!((r.quotient.inf() - 2. / 3.).abs() < 1e-15);
        assert!((r.remainder.inf() - 1. / 3.).abs() < 1e-15);
        assert_eq!(r.quotient.length(), 0.0);
        assert!(close(r.reconstruct(c(1., 4.)), c(1., 3.), 1e-12));

        let r = euclid_positive(c(2., 5.), c(1., 3.)).unwrap();
        assert_eq!((r.quotient, r.remainder), (GClass::scalar(1.5), GClass::scalar(0.5)));
        assert_eq!(r.reconstruct(c(1., 3.)), c(2., 5.));

        assert_eq!(euclid_positive(c(1., 3.), c(2., 2.)), Err(Error::DegenerateDivisor));
        assert!(matches!(euclid_positive(c(2., 6.), c(1., 2.)), Err(Error::RatioConditionFailed(_))));
    }

    #[test]
    fn euclid_zero_containing_examples() {
        let r = euclid_zero_containing(c(-7., 2.), c(-3., 1.)).unwrap();
        assert!(close(r.quotient, c(-2. / 3., 0.), 1e-15));
        assert!(close(r.remainder, c(-19. / 3., 0.), 1e-14));
        assert!(close(r.reconstruct(c(-3., 1.)), c(-7., 2.), 1e-12));
        for part in [r.quotient, r.remainder] {
            assert!(!phi_bar(part).is_invertible());
        }
        // y2/y1 = x1/x2 exactly
        let err = euclid_zero_containing(c(-1., 3.), c(-3., 1.)).unwrap_err();
        assert_eq!(err, Error::PreconditionFailed("x1/x2 > y2/y1".into()));
        let err = euclid_zero_containing(c(-7., 2.), c(-1., 3.)).unwrap_err();
        assert_eq!(err, Error::PreconditionFailed("x1 > x2".into()));
    }

    #[test]
    fn dispatcher_routes() {
        let r = divide(c(1., 3.), c(1., 4.)).unwrap();
        assert!(!r.exact);
        assert!((r.remainder.inf() - 1. / 3.).abs() < 1e-15);

        let r = divide(c(-2., 3.), c(-4., 2.)).unwrap();
        assert!(r.exact && r.remainder.is_zero());

        let r = divide(c(2., 6.), c(1., 2.)).unwrap();
        assert!(r.exact && r.quotient == c(2., 3.));

        assert!(!divide(c(-7., 2.), c(-3., 1.)).unwrap().exact);
        assert!(matches!(divide(c(-1., 2.), c(3., 4.)), Err(Error::Unsupported(_))));
        assert!(matches!(divide(c(1., 2.), -c(3., 4.)), Err(Error::Unsupported(_))));
        assert_eq!(divide(c(-2., 3.), c(-1., 1.)), Err(Error::CenteredDivisor));
        // the mirrored Euclidean case
        assert!(matches!(divide(c(-2., 7.), c(-3., 1.)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn exact_positive_matches_algebra_inverse() {
        let (y, x) = (c(2., 7.), c(1., 3.));
        let z = div_exact_positive(y, x).unwrap();
        let via_inverse = psi(phi_bar(y) * phi_bar(x).inverse().unwrap());
        assert!(close(z, via_inverse, 1e-15));
        let prod = phi_bar(y) * phi_bar(x).inverse().unwrap();
        assert!((prod - A4::new(2., 7. / 3., 0., 0.)).max_abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn exact_positive_reconstructs(x1 in 0.1f64..10.0, dx in 0.0f64..10.0,
                                       z1 in 0.0f64..10.0, dz in 0.0f64..10.0) {
            let (x, z) = (c(x1, x1 + dx), c(z1, z1 + dz));
            let y = bullet(x, z);
            let r = divide(y, x).unwrap();
            prop_assert!(r.exact);
            prop_assert!(close(r.reconstruct(x), y, 1e-9));
        }

        #[test]
        fn euclid_positive_is_minimal(x1 in 0.0f64..5.0, dx in 0.1f64..5.0,
                                      y1 in 0.1f64..5.0, t in 0.0f64..0.99) {
            let x2 = x1 + dx;
            // pick y2 so that x1/x2 < y1/y2
            let y2 = y1 + t * (x2 * y1 / x1.max(1e-9) - y1).min(20.0);
            let (x, y) = (c(x1, x2), c(y1, y2.max(y1)));
            prop_assume!(x1 * y.sup() < x2 * y1 * (1.0 - 1e-9));
            let r = divide(y, x).unwrap();
            prop_assert!(!r.exact);
            prop_assert!(r.remainder.length() <= 1e-12);
            prop_assert!(close(r.reconstruct(x), y, 1e-9));
            let lo = (y.sup() - y1) / x2;
            let hi = (y.sup() - y1) / dx;
            for k in 0..=8 {
                let z = lo + (hi - lo) * k as f64 / 8.0;
                let center = (y - z * x).center();
                prop_assert!(center >= r.remainder.center() - 1e-9);
            }
        }

        #[test]
        fn zero_containing_exact_reconstructs(x1 in 0.1f64..10.0, x2 in 0.1f64..10.0,
                                              z3 in 0.0f64..10.0, z2 in 0.0f64..10.0) {
            prop_assume!((x1 - x2).abs() > 1e-3);
            prop_assume!(z2 + z3 > 1e-3);
            let x = c(-x1, x2);
            let y = bullet(x, c(-z3, z2));
            prop_assume!(y.inf() < -1e-6 && y.sup() > 1e-6);
            let r = divide(y, x).unwrap();
            prop_assert!(r.exact);
            prop_assert!(close(r.reconstruct(x), y, 1e-9 * (1.0 + y.norm())));
        }

        #[test]
        fn zero_containing_euclid_reconstructs(x2 in 0.1f64..5.0, k in 1.01f64..5.0,
                                               y1 in 0.1f64..5.0, s in 0.01f64..0.99) {
            let x1 = k * x2;
            // x1 y2 < x2 y1 and x2 y2 < x1 y1
            let y2 = s * y1 * x2 / x1;
            let (x, y) = (c(-x1, x2), c(-y1, y2));
            let r = divide(y, x).unwrap();
            prop_assert!(!r.exact);
            prop_assert!(close(r.reconstruct(x), y, 1e-9));
            prop_assert!(r.remainder.length() > 0.0);
        }
    }
}
