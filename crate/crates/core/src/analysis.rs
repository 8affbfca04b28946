//! The squaring map `q2`, polynomials, and sampled continuity and
//! differentiability probes.
//!
//! Probes only certify what they sample. Balls are open diamonds in
//! length/center coordinates, so samples are laid out on nested diamonds.

use std::f64::consts::PI;

use crate::class::GClass;
use crate::embedding::bullet;
use crate::text::fmt_num;

/// `q2([a,b]) = { x^2 : x in [a,b] }` on positive classes, extended by `q2(0,K) = q2(K,0)`.
pub fn q2(x: GClass) -> GClass {
    let (a, b) = if x.is_proper() {
        (x.inf(), x.sup())
    } else {
        (-x.inf(), -x.sup())
    };
    if a >= 0.0 {
        GClass::new(a * a, b * b)
    } else if b <= 0.0 {
        GClass::new(b * b, a * a)
    } else {
        GClass::new(0.0, (a * a).max(b * b))
    }
}

pub fn identity(x: GClass) -> GClass {
    x
}

/// `a0 X2 + a1 X + a2 X^2 + ...`, with powers taken by repeated bullet products.
pub fn poly_eval(coeffs: &[f64], x: GClass) -> GClass {
    let mut power = GClass::X2;
    let mut acc = GClass::ZERO;
    for (i, &a) in coeffs.iter().enumerate() {
        if i > 0 {
            power = bullet(x, power);
        }
        acc += a * power;
    }
    acc
}

/// `X -> 2 (x0 * X)`.
pub fn differential_candidate(x0: GClass) -> impl Fn(GClass) -> GClass + Copy {
    move |x| 2.0 * bullet(x0, x)
}

/// Sample layout for [`continuity_probe`]: `rings` nested diamonds with
/// `points_per_ring` points each, plus the center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub rings: usize,
    pub points_per_ring: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            rings: 16,
            points_per_ring: 64,
        }
    }
}

// A point on the unit diamond |s| + |c| = 1, for t in [0, 4).
fn diamond(t: f64) -> (f64, f64) {
    let side = t.floor();
    let f = t - side;
    match side as i64 {
        0 => (1.0 - f, f),
        1 => (-f, 1.0 - f),
        2 => (-(1.0 - f), -f),
        _ => (f, -(1.0 - f)),
    }
}

/// Classes on diamonds around `x0` at distances strictly below `eta`.
pub fn ball_samples(x0: GClass, eta: f64, grid: Grid) -> Vec<GClass> {
    let shrink = 1.0 - 1e-9;
    let mut out = vec![x0];
    for r in 1..=grid.rings {
        let rho = eta * shrink * r as f64 / grid.rings as f64;
        for j in 0..grid.points_per_ring {
            let (s, c) = diamond(4.0 * j as f64 / grid.points_per_ring as f64);
            let (s, c) = (rho * s, rho * c);
            out.push(GClass::new(x0.inf() + c - s / 2.0, x0.sup() + c + s / 2.0));
        }
    }
    out
}

/// Candidate radii `eps * 2^-k` tried by the continuity probe.
pub const LADDER_STEPS: u32 = 40;

/// The largest `eta = eps * 2^-k` such that every sample with
/// `d(X, x0) < eta` has `d(f(X), f(x0)) < eps`, or `None`.
pub fn continuity_probe<F>(f: F, x0: GClass, eps: f64, grid: Grid) -> Option<f64>
where
    F: Fn(GClass) -> GClass,
{
    let fx0 = f(x0);
    (0..=LADDER_STEPS)
        .map(|k| eps * 0.5f64.powi(k as i32))
        .find(|&eta| {
            ball_samples(x0, eta, grid)
                .into_iter()
                .filter(|x| x.distance(&x0) < eta)
                .all(|x| f(x).distance(&fx0) < eps)
        })
}

/// `n` unit-norm directions at angles `2 pi (k + 1/2) / n` in the `(inf, sup)` plane.
pub fn uniform_directions(n: usize) -> Vec<GClass> {
    (0..n)
        .map(|k| unit_direction(2.0 * PI * (k as f64 + 0.5) / n as f64))
        .collect()
}

/// `n` unit-norm directions with `0 < d.inf < d.sup`.
pub fn case_one_directions(n: usize) -> Vec<GClass> {
    (0..n)
        .map(|k| unit_direction(PI / 4.0 + PI / 4.0 * (k as f64 + 0.5) / n as f64))
        .collect()
}

fn unit_direction(theta: f64) -> GClass {
    let d = GClass::new(theta.cos(), theta.sin());
    d.scale(1.0 / d.norm())
}

/// `count` radii from `start` down to `end`, geometrically spaced.
pub fn geometric_radii(start: f64, end: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![start],
        _ => {
            let last = (count - 1) as f64;
            let mut r: Vec<f64> = (0..count)
                .map(|i| start * (end / start).powf(i as f64 / last))
                .collect();
            r[count - 1] = end;
            r
        }
    }
}

/// Worst remainder ratio per radius.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub radii: Vec<f64>,
    pub worst_ratio: Vec<f64>,
    pub witness: Vec<GClass>,
}

impl ProbeReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("radius,worst_ratio,witness_inf,witness_sup\n");
        for ((r, w), x) in self.radii.iter().zip(&self.worst_ratio).zip(&self.witness) {
            s.push_str(&format!(
                "{},{},{},{}\n",
                fmt_num(*r),
                fmt_num(*w),
                fmt_num(x.inf()),
                fmt_num(x.sup())
            ));
        }
        s
    }
}

/// For each radius `t`, the maximum over directions `d` of
/// `||f(X) - f(x0) - L(X - x0)|| / ||X - x0||` at `X = x0 + t d`.
pub fn diff_probe<F, L>(f: F, x0: GClass, l: L, radii: &[f64], directions: &[GClass]) -> ProbeReport
where
    F: Fn(GClass) -> GClass,
    L: Fn(GClass) -> GClass,
{
    let fx0 = f(x0);
    let mut report = ProbeReport {
        radii: radii.to_vec(),
        worst_ratio: Vec::with_capacity(radii.len()),
        witness: Vec::with_capacity(radii.len()),
    };
    for &t in radii {
        let (mut worst, mut witness) = (0.0, x0);
        for &d in directions {
            let h = t * d;
            let x = x0 + h;
            let ratio = (f(x) - fx0 - l(h)).norm() / h.norm();
            if ratio > worst {
                (worst, witness) = (ratio, x);
            }
        }
        report.worst_ratio.push(worst);
        report.witness.push(witness);
    }
    report
}
