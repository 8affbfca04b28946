//! Generalized intervals as a real normed vector space.
//!
//! Classes of pairs of intervals form a group under addition and a vector
//! space over the reals ([`GClass`]). Embedding them into the commutative
//! algebra [`A4`] gives a product defined on every pair of classes
//! ([`bullet`]), which agrees with the classical interval product unless both
//! factors contain zero. On top of this sit exact and Euclidean division,
//! a few analysis probes, and a simplex method with interval right-hand sides.

pub mod algebra4;
pub mod analysis;
pub mod class;
pub mod cli;
pub mod division;
pub mod embedding;
pub mod error;
pub mod expr;
pub mod interval;
pub mod linprog;
pub mod metric;
pub mod text;

pub use algebra4::A4;
pub use class::{Canonical, GClass, SignClass};
pub use embedding::{bullet, phi, phi_bar, psi};
pub use error::{Error, Result};
pub use interval::Interval;

/// Default absolute tolerance for sign tests and comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;
