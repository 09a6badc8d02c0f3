//! Constructive covering paths.
//!
//! Every builder produces an axis-aligned waypoint polyline and the stops on
//! it. Up-and-down paths sweep vertical traversals left to right, alternating
//! direction; the mixed variants split the rectangle into a left and a right
//! strip covered by two different patterns and join them with one connector.

mod discrete;
mod updown;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::geometry::{l1_distance, ratio_f64, GridSpec, Point, Rational};
use crate::tradeoff::CostPair;

pub use discrete::{build_discrete_up_down, build_mixed_discrete, build_zigzag, TessellationLattice};
pub use updown::{build_mixed_up_down, build_up_down};

/// Which construction produced a path, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Every lattice point is a stop.
    Trivial,
    /// One stop covers the whole instance.
    SingleStop,
    /// Up-and-down path with stop spacing `d` covering the rectangle.
    UpDown {
        /// Stop spacing along a traversal.
        d: Rational,
    },
    /// Type-`d` on the left `γ` share, type-`d + 2` on the rest.
    Mixed {
        /// Even spacing of the left strip.
        d: u32,
        /// Share of the short side given to the left strip.
        gamma: Rational,
    },
    /// Discrete up-and-down path of type 1 or an even type.
    Discrete {
        /// Stop spacing.
        d: u32,
    },
    /// Discrete path through the perfect tessellation lattice.
    Zigzag,
    /// Type-`d1` discrete path on the left `γ` share, type-`d2` on the rest.
    MixedDiscrete {
        /// Left strip type.
        d1: u32,
        /// Right strip type.
        d2: u32,
        /// Share of the short side given to the left strip.
        gamma: Rational,
    },
}

impl Construction {
    /// Upper-case tag used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::Trivial => "TRIVIAL",
            Construction::SingleStop => "SINGLE_STOP",
            Construction::UpDown { .. } => "UAD",
            Construction::Mixed { .. } => "MIXED",
            Construction::Discrete { .. } => "DISCRETE",
            Construction::Zigzag => "ZIGZAG",
            Construction::MixedDiscrete { .. } => "MIXED_DISCRETE",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::UpDown { d } => write!(f, "UAD(d={d})"),
            Construction::Mixed { d, gamma } => write!(f, "MIXED(d={d}, gamma={gamma})"),
            Construction::Discrete { d } => write!(f, "DISCRETE(d={d})"),
            Construction::MixedDiscrete { d1, d2, gamma } => {
                write!(f, "MIXED_DISCRETE(d1={d1}, d2={d2}, gamma={gamma})")
            }
            other => f.write_str(other.tag()),
        }
    }
}

/// A route through the grid and the stops made along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringPath {
    /// Polyline vertices in travel order; consecutive vertices share a coordinate.
    pub waypoints: Vec<Point>,
    /// Distinct stops in the order they are reached.
    pub stops: Vec<Point>,
    /// Construction that produced the path.
    pub construction: Construction,
}

impl CoveringPath {
    /// Exact polyline length.
    pub fn length(&self) -> Rational {
        self.waypoints
            .windows(2)
            .fold(Rational::zero(), |acc, w| acc + l1_distance(&w[0], &w[1]))
    }

    /// Number of stops.
    pub fn stop_count(&self) -> usize {
        self.stops.len()
    }

    /// True when every stop lies on the polyline and no stop repeats.
    pub fn is_well_formed(&self) -> bool {
        let distinct = self.stops.iter().collect::<BTreeSet<_>>().len() == self.stops.len();
        let on_path = |p: &Point| {
            if self.waypoints.len() == 1 {
                return self.waypoints[0] == *p;
            }
            self.waypoints.windows(2).any(|w| {
                l1_distance(&w[0], p) + l1_distance(p, &w[1]) == l1_distance(&w[0], &w[1])
                    && (w[0].x == w[1].x || w[0].y == w[1].y)
            })
        };
        let axis_aligned = self.waypoints.windows(2).all(|w| w[0].x == w[1].x || w[0].y == w[1].y);
        distinct && axis_aligned && self.stops.iter().all(on_path)
    }
}

/// Recomputes `(L, T)` from the waypoints and stops.
pub fn path_cost(path: &CoveringPath) -> CostPair {
    CostPair::new(ratio_f64(path.length()), path.stops.len() as f64)
}

/// The boustrophedon walk through every lattice point, column by column.
pub fn build_trivial(grid: &GridSpec) -> CoveringPath {
    let mut route = Route::default();
    for x in 0..=i64::from(grid.n()) {
        let ys: Vec<i64> = if x % 2 == 0 {
            (0..=i64::from(grid.m())).collect()
        } else {
            (0..=i64::from(grid.m())).rev().collect()
        };
        for y in ys {
            let p = Point::int(x, y);
            route.go(p);
            route.stop(p);
        }
    }
    route.finish(Construction::Trivial)
}

/// A path with one stop at `p`.
pub fn single_stop(p: Point) -> CoveringPath {
    CoveringPath { waypoints: alloc::vec![p], stops: alloc::vec![p], construction: Construction::SingleStop }
}

/// Incrementally assembled route.
#[derive(Default)]
pub(crate) struct Route {
    waypoints: Vec<Point>,
    stops: Vec<Point>,
    seen: BTreeSet<Point>,
}

impl Route {
    /// Moves straight to `p` (caller keeps moves axis-aligned).
    pub(crate) fn go(&mut self, p: Point) {
        if self.waypoints.last() != Some(&p) {
            self.waypoints.push(p);
        }
    }

    /// Moves to `p` vertically first, then horizontally.
    pub(crate) fn go_vertical_first(&mut self, p: Point) {
        if let Some(&cur) = self.waypoints.last() {
            self.go(Point::new(cur.x, p.y));
        }
        self.go(p);
    }

    /// Moves to `p` horizontally first, then vertically.
    pub(crate) fn go_horizontal_first(&mut self, p: Point) {
        if let Some(&cur) = self.waypoints.last() {
            self.go(Point::new(p.x, cur.y));
        }
        self.go(p);
    }

    /// Records a stop at a point already on the route; repeats are dropped.
    pub(crate) fn stop(&mut self, p: Point) {
        if self.seen.insert(p) {
            self.stops.push(p);
        }
    }

    /// Appends another route, joined by a vertical-then-horizontal connector.
    pub(crate) fn append(&mut self, other: Route) {
        let mut it = other.waypoints.into_iter();
        if let Some(first) = it.next() {
            self.go_vertical_first(first);
        }
        for p in it {
            self.go(p);
        }
        for s in other.stops {
            self.stop(s);
        }
    }

    pub(crate) fn finish(mut self, construction: Construction) -> CoveringPath {
        // Drop interior waypoints that lie on a straight run.
        let mut out: Vec<Point> = Vec::with_capacity(self.waypoints.len());
        for p in self.waypoints.drain(..) {
            if out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                let collinear = (a.x == b.x && b.x == p.x && (b.y - a.y) * (p.y - b.y) > Rational::zero())
                    || (a.y == b.y && b.y == p.y && (b.x - a.x) * (p.x - b.x) > Rational::zero());
                if collinear {
                    out.pop();
                }
            }
            out.push(p);
        }
        CoveringPath { waypoints: out, stops: self.stops, construction }
    }
}

/// Explicit cost bounds each construction is proven (or measured) to respect.
///
/// Widths and heights are in grid units; `k` is the effective radius.
pub mod bounds {
    use super::Construction;
    use crate::geometry::{ratio_f64, GridSpec};
    use crate::tradeoff::CostPair;

    /// Bound for a continuous up-and-down path of spacing `d` on a `w × m` strip:
    /// `L ≤ w·m/r + 3m`, `T ≤ (w/r + 2)(m/d + 2)` with `r = 2k − d/2`.
    pub fn up_down(w: f64, m: f64, k: f64, d: f64) -> CostPair {
        let r = 2.0 * k - d / 2.0;
        CostPair::new(w * m / r + 3.0 * m, (w / r + 2.0) * (m / d + 2.0))
    }

    /// Bound for a mixed path with left spacing `d`, share `γ`, on an `n × m` grid:
    /// the interpolated costs plus `10m` (length) and `10m + 12` (stops).
    pub fn mixed(n: f64, m: f64, k: f64, d: f64, gamma: f64) -> CostPair {
        let r1 = 2.0 * k - d / 2.0;
        let r2 = 2.0 * k - (d + 2.0) / 2.0;
        let area = m * n;
        CostPair::new(
            gamma * area / r1 + (1.0 - gamma) * area / r2 + 10.0 * m,
            gamma * area / (d * r1) + (1.0 - gamma) * area / ((d + 2.0) * r2) + 10.0 * m + 12.0,
        )
    }

    /// Bound for a discrete path of type 1, even type `2t`, or `2k + 1` (zigzag)
    /// on a `w × m` strip.
    ///
    /// * type 1 (separation `s = 2k + 1`): `L ≤ w·m/s + 2m + w`, `T ≤ (w/s + 2)(m + 1)`;
    /// * type `2t` (separation `s = 2k + 1 − t`): `L ≤ w·m/s + 2m + w`,
    ///   `T ≤ (w/s + 2)(m/(2t) + 2)`;
    /// * zigzag (`M = 2k² + 2k + 1`): `T` is at most the lattice points within
    ///   distance `2k` of the strip divided by `M`, and every leg is at most
    ///   `2k + 1` except one per traversal, which is at most `6k + 3`.
    pub fn discrete(w: f64, m: f64, k: u32, d: u32) -> CostPair {
        let kf = f64::from(k);
        if d == 1 {
            let s = 2.0 * kf + 1.0;
            return CostPair::new(w * m / s + 2.0 * m + w, (w / s + 2.0) * (m + 1.0));
        }
        if d <= 2 * k {
            let t = f64::from(d / 2);
            let s = 2.0 * kf + 1.0 - t;
            return CostPair::new(w * m / s + 2.0 * m + w, (w / s + 2.0) * (m / (2.0 * t) + 2.0));
        }
        let modulus = 2.0 * kf * kf + 2.0 * kf + 1.0;
        let reach = 2.0 * kf;
        let near = (w + 1.0) * (m + 1.0) + 2.0 * reach * (w + m + 2.0) + 2.0 * reach * (reach - 1.0);
        let stops = near / modulus;
        let traversals = (kf * (w + 2.0 * kf) + (kf + 1.0) * (m + 2.0 * kf)) / modulus + 1.0;
        let length = (2.0 * kf + 1.0) * stops + (6.0 * kf + 3.0) * traversals;
        CostPair::new(length, stops)
    }

    /// Bound for a mixed discrete path: each strip's bound plus a connector of
    /// at most `m + (n − s)`, where `s = ⌈γn⌉`.
    pub fn mixed_discrete(n: u32, m: u32, k: u32, d1: u32, d2: u32, s: u32) -> CostPair {
        let (nf, mf) = (f64::from(n), f64::from(m));
        let left = discrete(f64::from(s), mf, k, d1);
        let right = discrete(f64::from(n - s), mf, k, d2);
        let (mut length, mut stops) = (0.0, 0.0);
        if s > 0 {
            length += left.length;
            stops += left.stops;
        }
        if s < n {
            length += right.length;
            stops += right.stops;
        }
        if s > 0 && s < n {
            length += mf + nf - f64::from(s);
        }
        CostPair::new(length, stops)
    }

    /// The bound matching a construction on `grid` with effective radius `k`,
    /// or `None` when the construction has no explicit bound.
    pub fn for_construction(c: &Construction, grid: &GridSpec, k: u32) -> Option<CostPair> {
        let (n, m) = (f64::from(grid.n()), f64::from(grid.m()));
        let kf = f64::from(k);
        match *c {
            Construction::UpDown { d } => Some(up_down(n, m, kf, ratio_f64(d))),
            Construction::Mixed { d, gamma } => Some(mixed(n, m, kf, f64::from(d), ratio_f64(gamma))),
            Construction::Discrete { d } => Some(discrete(n, m, k, d)),
            Construction::Zigzag => Some(discrete(n, m, k, 2 * k + 1)),
            Construction::MixedDiscrete { d1, d2, gamma } => {
                let s = super::split_column(grid.n(), gamma);
                Some(mixed_discrete(grid.n(), grid.m(), k, d1, d2, s))
            }
            Construction::Trivial | Construction::SingleStop => None,
        }
    }
}

/// Left-strip width `⌈γn⌉`.
pub(crate) fn split_column(n: u32, gamma: Rational) -> u32 {
    let s = (gamma * i64::from(n)).ceil().to_integer();
    s.clamp(0, i64::from(n)) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_walks() {
        for (m, n, t) in [(1, 1, 4), (2, 1, 6), (2, 2, 9)] {
            let g = GridSpec::new(m, n).unwrap();
            let p = build_trivial(&g);
            let c = path_cost(&p);
            assert_eq!(c.stops, t as f64);
            assert_eq!(c.length, (t - 1) as f64);
            assert!(p.is_well_formed());
        }
    }

    #[test]
    fn path_cost_examples() {
        let p = single_stop(Point::int(0, 0));
        assert_eq!(path_cost(&p), CostPair::new(0.0, 1.0));
        let q = CoveringPath {
            waypoints: alloc::vec![Point::int(0, 0), Point::int(0, 5)],
            stops: alloc::vec![Point::int(0, 0), Point::int(0, 5)],
            construction: Construction::UpDown { d: Rational::from_integer(5) },
        };
        assert_eq!(path_cost(&q), CostPair::new(5.0, 2.0));
    }

    #[test]
    fn split_column_rounds_up() {
        assert_eq!(split_column(10, Rational::new(1, 3)), 4);
        assert_eq!(split_column(10, Rational::zero()), 0);
        assert_eq!(split_column(10, Rational::new(1, 2)), 5);
    }
}
