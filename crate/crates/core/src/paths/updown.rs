//! Up-and-down paths covering the rectangle.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{split_column, Construction, CoveringPath, Route};
use crate::geometry::{GridSpec, Point, Rational};
use crate::{Error, Result};

/// Traversal abscissae for a strip `[x0, x1]` with separation `sep`: multiples
/// of `sep` from `x0`, plus a final traversal at `x1`.
pub(crate) fn traversal_xs(x0: Rational, x1: Rational, sep: Rational) -> Vec<Rational> {
    let w = x1 - x0;
    if w.is_zero() {
        return alloc::vec![x0];
    }
    let count = (w / sep).ceil().to_integer();
    let mut xs: Vec<Rational> = (0..count).map(|j| x0 + sep * j).collect();
    xs.push(x1);
    xs
}

/// Sweeps traversals over `[x0, x1] × [0, m]`.
///
/// Even-indexed traversals go up with stops at `i·spacing`; odd-indexed ones
/// go down with stops at `offset + i·spacing`. Each traversal also stops at
/// its top end.
pub(crate) fn sweep(x0: Rational, x1: Rational, m: Rational, sep: Rational, spacing: Rational, offset: Rational) -> Route {
    let mut route = Route::default();
    for (j, x) in traversal_xs(x0, x1, sep).into_iter().enumerate() {
        let start = if j % 2 == 0 { Rational::zero() } else { offset };
        let mut ys = Vec::new();
        let mut y = start;
        while y <= m {
            ys.push(y);
            y += spacing;
        }
        if ys.last() != Some(&m) {
            ys.push(m);
        }
        if j % 2 == 0 {
            route.go_horizontal_first(Point::new(x, Rational::zero()));
            for y in ys {
                let p = Point::new(x, y);
                route.go(p);
                route.stop(p);
            }
        } else {
            route.go_horizontal_first(Point::new(x, m));
            for y in ys.into_iter().rev() {
                let p = Point::new(x, y);
                route.go(p);
                route.stop(p);
            }
            route.go(Point::new(x, Rational::zero()));
        }
    }
    route
}

fn check_spacing(d: Rational, k: Rational) -> Result<()> {
    if !k.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    if !d.is_positive() || d > k * 2 {
        return Err(Error::OutOfRange { what: "d", detail: "must lie in (0, 2k]" });
    }
    Ok(())
}

/// Type-`d` up-and-down path: traversal separation `2k − d/2`, stop spacing
/// `d`, stops offset by `d/2` on alternate traversals.
pub fn build_up_down(d: Rational, grid: &GridSpec, k: Rational) -> Result<CoveringPath> {
    check_spacing(d, k)?;
    let sep = k * 2 - d / 2;
    let n = Rational::from_integer(i64::from(grid.n()));
    let m = Rational::from_integer(i64::from(grid.m()));
    let route = sweep(Rational::zero(), n, m, sep, d, d / 2);
    Ok(route.finish(Construction::UpDown { d }))
}

/// Type-`(d, γ)` mixed path: type-`d` on `[0, ⌈γn⌉]`, type-`(d + 2)` on the rest.
pub fn build_mixed_up_down(d: u32, gamma: Rational, grid: &GridSpec, k: u32) -> Result<CoveringPath> {
    if k < 2 || d % 2 == 1 || d < 2 || d > 2 * k - 2 {
        return Err(Error::OutOfRange { what: "d", detail: "must be even in [2, 2k-2]" });
    }
    if gamma.is_negative() || gamma >= Rational::from_integer(1) {
        return Err(Error::OutOfRange { what: "gamma", detail: "must lie in [0, 1)" });
    }
    let kr = Rational::from_integer(i64::from(k));
    let s = split_column(grid.n(), gamma);
    let m = Rational::from_integer(i64::from(grid.m()));
    let split = Rational::from_integer(i64::from(s));
    let n = Rational::from_integer(i64::from(grid.n()));
    let strip = |x0: Rational, x1: Rational, d: u32| {
        let d = Rational::from_integer(i64::from(d));
        sweep(x0, x1, m, kr * 2 - d / 2, d, d / 2)
    };
    let mut route = if s > 0 { strip(Rational::zero(), split, d) } else { Route::default() };
    if s < grid.n() {
        route.append(strip(split, n, d + 2));
    }
    Ok(route.finish(Construction::Mixed { d, gamma }))
}
