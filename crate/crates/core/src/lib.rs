//! Numerical and exact-arithmetic kernels for a two-parameter family of
//! constant-curvature metrics on a projective (Beltrami) chart.
//!
//! The crate is organized around five subject areas:
//!
//! * [`exact`] — rationals, the quadratic extension ℚ(√2), and dense exact
//!   linear algebra (reduced row echelon form, nullspaces).
//! * [`dual`] / [`linalg`] — forward-mode dual numbers and small fixed-size
//!   float matrices, including the matrix exponential.
//! * [`geometry`] / [`dynamics`] — the metric family, its hypersurface
//!   embedding and pullbacks, induced tensors, free-particle Lagrangians and
//!   the inertia check.
//! * [`symmetry`] / [`lie`] — isometry group elements, fractional linear
//!   actions, the exact generator catalog with bracket tables and
//!   invariant-tensor solving.
//! * [`modes`] — the reparametrized scalar-field mode equation, WKB
//!   iteration, and the detector transition amplitude with its quadrature
//!   oracle.
//!
//! Everything is `no_std`-compatible (with `alloc`); float transcendentals
//! go through `libm` so results are identical with or without `std`.

#![cfg_attr(not(feature = "std"), no_std)]
// tensor-index loops and NaN-rejecting comparisons are the local idiom
#![allow(clippy::needless_range_loop)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod cx;
pub mod dual;
pub mod dynamics;
pub mod exact;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod modes;
pub mod poly;
pub mod quad;
pub mod rng;
pub mod symmetry;

pub use dual::{Dual, Real};
pub use exact::{QSqrt2, Rational};
pub use geometry::{Branch, GeometryConfig, Point4};
