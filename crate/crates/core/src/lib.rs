//! Covering paths on unit grids.
//!
//! Given an `m × n` unit grid and an l1 coverage radius `k`, this crate picks
//! stops on the grid and a route through them so that every point of the
//! coverage region lies within distance `k` of some stop, trading route length
//! `L` against stop count `T`.
//!
//! The pipeline is:
//!
//! 1. [`variant::classify`] rounds the radius down to an integer or half-integer
//!    and picks the continuous (cover the rectangle) or discrete (cover the
//!    lattice) formulation.
//! 2. [`tradeoff`] builds the lower-bound curve in the `(L, T)` plane that every
//!    covering path must respect, plus the upper curve realized by constructions.
//! 3. [`optimizer`] minimizes the objective on the lower curve and maps the
//!    optimal average stop spacing `d*` onto a constructive path from [`paths`].
//! 4. [`geometry::verify_coverage`] certifies the result with an exact
//!    finite check.
//!
//! [`oracle`] holds desk-scale exhaustive solvers used to validate the bounds.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_docs)]
// `!(x >= lo)` is used on purpose so NaN takes the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod error;
pub mod geometry;
pub mod optimizer;
pub mod oracle;
pub mod paths;
pub mod tradeoff;
pub mod variant;

pub use error::{Error, Result};
pub use geometry::{GridSpec, Point, Rational, Region};
pub use optimizer::{solve, Guarantee, Objective, Solution};
pub use paths::{Construction, CoveringPath};
pub use tradeoff::{CostPair, TradeoffCurve};
pub use variant::{classify, Variant, VariantKind};
