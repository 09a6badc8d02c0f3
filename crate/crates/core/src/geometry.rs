//! l1 primitives on the unit grid.
//!
//! The grid occupies the rectangle `D = [0, n] × [0, m]` with `m ≥ n`: `x` runs
//! across the short side and `y` along the tall side. Coordinates are exact
//! rationals so that coverage can be decided without tolerances.
//!
//! Coverage checks never sample. With integral stops the distance to the
//! nearest stop is piecewise linear with breakpoints on the half-integer
//! lattice, so the maximum over an edge sits at an endpoint or at the edge
//! midpoint, and the maximum over the rectangle is decided by integer points
//! and edge midpoints. [`verify_coverage`] checks exactly those points.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational used for coordinates and radii.
pub type Rational = Ratio<i64>;

/// Upper bound on the number of half-lattice cells the exact checks allocate.
const MAX_CHECK_CELLS: usize = 64 << 20;

/// A point of the plane in grid units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    /// Horizontal coordinate, `0 ≤ x ≤ n` inside the grid.
    pub x: Rational,
    /// Vertical coordinate, `0 ≤ y ≤ m` inside the grid.
    pub y: Rational,
}

impl Point {
    /// Builds a point from rational coordinates.
    pub const fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    /// Builds a lattice point.
    pub fn int(x: i64, y: i64) -> Self {
        Self::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    /// True when both coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// Lossy conversion for rendering and floating point bounds.
    pub fn to_f64(&self) -> (f64, f64) {
        (ratio_f64(self.x), ratio_f64(self.y))
    }

    /// Translates the point by an integer horizontal offset.
    pub fn shifted_x(&self, dx: i64) -> Self {
        Self::new(self.x + dx, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Converts a rational to the nearest `f64`.
pub fn ratio_f64(r: Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Problem instance dimensions.
///
/// The constructor canonicalizes orientation so that `m ≥ n`; an instance
/// given as `10 × 20` is solved as `20 × 10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    m: u32,
    n: u32,
}

impl GridSpec {
    /// Creates a grid, swapping the sides if needed so that `m ≥ n`.
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyGrid { m, n });
        }
        let (m, n) = if m >= n { (m, n) } else { (n, m) };
        Ok(Self { m, n })
    }

    /// Tall side (vertical extent).
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Short side (horizontal extent).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Rectangle area `N = m·n`.
    pub fn area(&self) -> u64 {
        u64::from(self.m) * u64::from(self.n)
    }

    /// Number of lattice points `(m+1)(n+1)`.
    pub fn lattice_points(&self) -> u64 {
        (u64::from(self.m) + 1) * (u64::from(self.n) + 1)
    }

    /// True when `p` lies in the closed rectangle.
    pub fn contains(&self, p: &Point) -> bool {
        !p.x.is_negative()
            && !p.y.is_negative()
            && p.x <= Rational::from_integer(i64::from(self.n))
            && p.y <= Rational::from_integer(i64::from(self.m))
    }

    /// Nearest point of the rectangle (componentwise clamp).
    pub fn project(&self, p: Point) -> Point {
        let clamp = |v: Rational, hi: u32| {
            let hi = Rational::from_integer(i64::from(hi));
            if v.is_negative() {
                Rational::zero()
            } else if v > hi {
                hi
            } else {
                v
            }
        };
        Point::new(clamp(p.x, self.n), clamp(p.y, self.m))
    }
}

/// Closed l1 ball (a diamond).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondBall {
    /// Center of the diamond.
    pub center: Point,
    /// l1 radius.
    pub radius: Rational,
}

impl DiamondBall {
    /// Creates a ball.
    pub fn new(center: Point, radius: Rational) -> Self {
        Self { center, radius }
    }

    /// Continuous area `2r²`.
    pub fn area(&self) -> Rational {
        self.radius * self.radius * 2
    }

    /// Whether the ball contains `p`.
    pub fn contains(&self, p: &Point) -> bool {
        l1_distance(&self.center, p) <= self.radius
    }

    /// Lattice points inside the ball, `2r² + 2r + 1` for an integral center and radius.
    pub fn lattice_count(&self) -> u64 {
        let r = self.radius;
        let (cx, cy) = (self.center.x, self.center.y);
        let lo = (cx - r).ceil().to_integer();
        let hi = (cx + r).floor().to_integer();
        (lo..=hi)
            .map(|x| {
                let rem = r - (Rational::from_integer(x) - cx).abs();
                let ylo = (cy - rem).ceil().to_integer();
                let yhi = (cy + rem).floor().to_integer();
                (yhi - ylo + 1).max(0) as u64
            })
            .sum()
    }
}

/// l1 distance `|p.x − q.x| + |p.y − q.y|`.
pub fn l1_distance(p: &Point, q: &Point) -> Rational {
    (p.x - q.x).abs() + (p.y - q.y).abs()
}

/// Distance from `x` to its nearest stop.
pub fn dist_to_stops(x: &Point, stops: &[Point]) -> Result<Rational> {
    stops
        .iter()
        .map(|s| l1_distance(x, s))
        .min()
        .ok_or(Error::NoStops)
}

/// Area of `B((0,0),k) ∩ B((d,0),k)`: `2(k − d/2)²` when `d < 2k`, else 0.
pub fn ball_overlap_area(d: f64, k: f64) -> Result<f64> {
    if !(d >= 0.0) {
        return Err(Error::OutOfRange { what: "d", detail: "must be >= 0" });
    }
    if !(k > 0.0) {
        return Err(Error::NonPositiveRadius);
    }
    if d >= 2.0 * k {
        return Ok(0.0);
    }
    let h = k - d / 2.0;
    Ok(2.0 * h * h)
}

/// Number of lattice points shared by two radius-`k` balls at distance `d`
/// along an axis.
pub fn ball_overlap_count(d: i64, k: i64) -> Result<i64> {
    if d < 0 {
        return Err(Error::OutOfRange { what: "d", detail: "must be >= 0" });
    }
    if k < 1 {
        return Err(Error::OutOfRange { what: "k", detail: "must be >= 1" });
    }
    if d > 2 * k {
        return Ok(0);
    }
    let s = 2 * k - d;
    Ok(if d.is_odd() {
        (s + 1) * (s + 1) / 2
    } else {
        ((s + 2) * (s + 2) + s * s) / 4
    })
}

/// Which part of the grid must be covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// All points on grid edges.
    Edges,
    /// The full rectangle.
    Rectangle,
    /// Lattice points only.
    Lattice,
}

/// Exact coverage check.
///
/// * `Lattice`: every integer point is within `radius` (any rational stops).
/// * `Edges`: integer points and edge midpoints are within `radius`; requires
///   integral stops.
/// * `Rectangle`: integer points within `radius` and edge midpoints within
///   `radius − 1/2`; requires integral stops and radius.
pub fn verify_coverage(
    stops: &[Point],
    grid: &GridSpec,
    region: Region,
    radius: Rational,
) -> Result<bool> {
    if !radius.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    if stops.is_empty() {
        return Ok(false);
    }
    let half = Rational::new(1, 2);
    match region {
        Region::Lattice => {
            let marker = HalfLattice::mark(stops, grid, 1, radius)?;
            Ok(marker.all_covered(|_, _| true))
        }
        Region::Edges => {
            if !stops.iter().all(Point::is_integral) {
                return Err(Error::NonIntegralCheck);
            }
            let marker = HalfLattice::mark(stops, grid, 2, radius)?;
            Ok(marker.all_covered(|i, j| i.is_even() || j.is_even()))
        }
        Region::Rectangle => {
            if !radius.is_integer() || !stops.iter().all(Point::is_integral) {
                return Err(Error::NonIntegralCheck);
            }
            let corners = HalfLattice::mark(stops, grid, 2, radius)?;
            if !corners.all_covered(|i, j| i.is_even() && j.is_even()) {
                return Ok(false);
            }
            let mids = HalfLattice::mark(stops, grid, 2, radius - half)?;
            Ok(mids.all_covered(|i, j| i.is_odd() != j.is_odd()))
        }
    }
}

/// Exact check that rational stops cover the whole rectangle.
///
/// Rescaling by the common denominator `q` of the stops and radius turns the
/// instance into an integral one on a `q`-times finer grid, where edge points
/// decide coverage of the rectangle.
pub fn verify_rectangle_rational(stops: &[Point], grid: &GridSpec, radius: Rational) -> Result<bool> {
    if !radius.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    if stops.is_empty() {
        return Ok(false);
    }
    let q = stops
        .iter()
        .fold(*radius.denom(), |acc, p| acc.lcm(p.x.denom()).lcm(p.y.denom()));
    let marker = HalfLattice::mark(stops, grid, 2 * q, radius)?;
    Ok(marker.all_covered(|i, j| i.is_even() || j.is_even()))
}

/// Interval marks of stop coverage on the lattice `(i/s, j/s)` of the grid.
struct HalfLattice {
    cols: usize,
    rows: usize,
    counts: Vec<i32>,
}

impl HalfLattice {
    fn mark(stops: &[Point], grid: &GridSpec, scale: i64, radius: Rational) -> Result<Self> {
        let w = i64::from(grid.n()) * scale;
        let h = i64::from(grid.m()) * scale;
        let cols = (w + 1) as usize;
        let rows = (h + 1) as usize;
        let stride = rows + 1;
        if cols.saturating_mul(stride) > MAX_CHECK_CELLS {
            return Err(Error::OutOfRange {
                what: "grid",
                detail: "too many check points for exact verification",
            });
        }
        let mut diff = vec![0i32; cols * stride];
        let r = radius * scale;
        if !r.is_negative() {
            for s in stops {
                let sx = s.x * scale;
                let sy = s.y * scale;
                let lo = (sx - r).ceil().to_integer().max(0);
                let hi = (sx + r).floor().to_integer().min(w);
                for i in lo..=hi {
                    let rem = r - (Rational::from_integer(i) - sx).abs();
                    let jlo = (sy - rem).ceil().to_integer().max(0);
                    let jhi = (sy + rem).floor().to_integer().min(h);
                    if jlo > jhi {
                        continue;
                    }
                    let base = i as usize * stride;
                    diff[base + jlo as usize] += 1;
                    diff[base + jhi as usize + 1] -= 1;
                }
            }
        }
        for col in diff.chunks_mut(stride) {
            let mut acc = 0;
            for c in col.iter_mut() {
                acc += *c;
                *c = acc;
            }
        }
        Ok(Self { cols, rows, counts: diff })
    }

    fn all_covered(&self, mut wanted: impl FnMut(i64, i64) -> bool) -> bool {
        let stride = self.rows + 1;
        (0..self.cols).all(|i| {
            let col = &self.counts[i * stride..i * stride + self.rows];
            col.iter()
                .enumerate()
                .all(|(j, &c)| c > 0 || !wanted(i as i64, j as i64))
        })
    }
}

/// `Rational` from a pair of integers, panicking on a zero denominator.
pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}
