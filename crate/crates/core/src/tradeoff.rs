//! Overlap functions, trade-off constraints and their boundary curves.
//!
//! A covering path with `T` stops and length `L` has `T − 1` legs of average
//! length `d = L/(T − 1)`. Each stop after the first adds at most `g(d)` new
//! coverage (area or lattice points), where `g` is one of the concave overlap
//! functions below, so `(T − 1)·g(L/(T − 1)) ≥ rhs` is necessary for
//! feasibility. For a piecewise-linear concave `g` with nodes `(a_i, b_i)` the
//! boundary of that region in the `(L, T − 1)` plane is the convex polyline
//! through `(a_i·C/b_i, C/b_i)` followed by a horizontal ray.
//!
//! Curves store vertices as `(length, legs)` with `legs = T − 1`; [`Vertex::stops`]
//! converts back to a stop count.

use alloc::vec::Vec;

use crate::geometry::GridSpec;
use crate::variant::{Variant, VariantKind};
use crate::{Error, Result};

/// Samples used to render the smooth relaxed boundary.
pub const SMOOTH_SAMPLES: usize = 256;

const TOL: f64 = 1e-9;

/// Path length and stop count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostPair {
    /// Total l1 length in grid units.
    pub length: f64,
    /// Number of stops.
    pub stops: f64,
}

impl CostPair {
    /// Creates a cost pair.
    pub fn new(length: f64, stops: f64) -> Self {
        Self { length, stops }
    }
}

/// Whether a curve bounds the feasible region from below or approximates it from above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Necessary condition: no feasible pair lies below.
    Lower,
    /// Attainable up to lower-order terms by constructed paths.
    Upper,
}

impl Role {
    /// `LOWER` or `UPPER`.
    pub fn tag(self) -> &'static str {
        match self {
            Role::Lower => "LOWER",
            Role::Upper => "UPPER",
        }
    }
}

/// Members of the overlap-function family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Overlap {
    /// `d(2k − d/2)` up to `2k`, then `2k²`.
    Smooth,
    /// Smooth function interpolated at the integers `1..=2k`.
    LowerC,
    /// Smooth function interpolated at the even integers `2..=2k`.
    UpperC,
    /// Lattice-point gain, interpolated at the integers `1..=2k+1`.
    LowerD,
    /// Lattice-point gain interpolated at `1, 2, 4, …, 2k, 2k+1`.
    UpperD,
}

impl Overlap {
    /// Interpolation nodes for radius `k`; empty for [`Overlap::Smooth`].
    pub fn abscissae(self, k: u32) -> Vec<u32> {
        match self {
            Overlap::Smooth => Vec::new(),
            Overlap::LowerC => (1..=2 * k).collect(),
            Overlap::UpperC => (1..=k).map(|i| 2 * i).collect(),
            Overlap::LowerD => (1..=2 * k + 1).collect(),
            Overlap::UpperD => core::iter::once(1)
                .chain((1..=k).map(|i| 2 * i))
                .chain(core::iter::once(2 * k + 1))
                .collect(),
        }
    }

    fn node(self, d: u32, k: u32) -> f64 {
        let (d, kf) = (f64::from(d), f64::from(k));
        match self {
            Overlap::Smooth | Overlap::LowerC | Overlap::UpperC => smooth(d, kf),
            Overlap::LowerD | Overlap::UpperD => {
                if d >= 2.0 * kf + 1.0 {
                    2.0 * kf * kf + 2.0 * kf + 1.0
                } else if d as u32 % 2 == 1 {
                    d * (2.0 * kf + 1.0 - d / 2.0) + 0.5
                } else {
                    d * (2.0 * kf + 1.0 - d / 2.0)
                }
            }
        }
    }

    /// Node values matching [`Overlap::abscissae`].
    pub fn values(self, k: u32) -> Vec<f64> {
        self.abscissae(k).into_iter().map(|d| self.node(d, k)).collect()
    }

    /// Evaluates the function at `d`, rejecting `d` below its domain.
    pub fn eval(self, d: f64, k: u32) -> Result<f64> {
        if k == 0 {
            return Err(Error::NonPositiveRadius);
        }
        let lo = self.domain_start();
        if !(d >= lo) || (lo == 0.0 && d <= 0.0) {
            return Err(Error::OutOfRange { what: "d", detail: "below the function's domain" });
        }
        Ok(self.eval_unchecked(d, k))
    }

    /// Evaluates the function, extending it below its domain by the chord
    /// through the origin. The extension keeps the function concave and
    /// increasing with value 0 at 0.
    pub fn eval_extended(self, d: f64, k: u32) -> f64 {
        let lo = self.domain_start();
        if d <= 0.0 {
            0.0
        } else if d < lo {
            d * self.eval_unchecked(lo, k) / lo
        } else {
            self.eval_unchecked(d, k)
        }
    }

    fn domain_start(self) -> f64 {
        match self {
            Overlap::Smooth => 0.0,
            Overlap::UpperC => 2.0,
            _ => 1.0,
        }
    }

    fn eval_unchecked(self, d: f64, k: u32) -> f64 {
        if self == Overlap::Smooth {
            return smooth(d, f64::from(k));
        }
        let xs = self.abscissae(k);
        let last = *xs.last().expect("k >= 1");
        if d >= f64::from(last) {
            return self.node(last, k);
        }
        let i = xs.partition_point(|&a| f64::from(a) <= d).max(1);
        let (a0, a1) = (xs[i - 1], xs[i]);
        let (b0, b1) = (self.node(a0, k), self.node(a1, k));
        let t = (d - f64::from(a0)) / f64::from(a1 - a0);
        b0 + t * (b1 - b0)
    }

    /// Largest value, the coverage measure of one ball.
    pub fn saturation(self, k: u32) -> f64 {
        let kf = f64::from(k);
        match self {
            Overlap::LowerD | Overlap::UpperD => 2.0 * kf * kf + 2.0 * kf + 1.0,
            _ => 2.0 * kf * kf,
        }
    }
}

fn smooth(d: f64, k: f64) -> f64 {
    if d >= 2.0 * k {
        2.0 * k * k
    } else {
        d * (2.0 * k - d / 2.0)
    }
}

/// New area a radius-`k` ball adds when placed `d` after another.
pub fn f(d: f64, k: f64) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::OutOfRange { what: "d", detail: "must be > 0" });
    }
    if !(k > 0.0) {
        return Err(Error::NonPositiveRadius);
    }
    Ok(smooth(d, k))
}

/// [`Overlap::LowerC`] evaluated at `d ≥ 1`.
pub fn f_lb_c(d: f64, k: u32) -> Result<f64> {
    Overlap::LowerC.eval(d, k)
}

/// [`Overlap::UpperC`] evaluated at `d ≥ 2`.
pub fn f_ub_c(d: f64, k: u32) -> Result<f64> {
    Overlap::UpperC.eval(d, k)
}

/// [`Overlap::LowerD`] evaluated at `d ≥ 1`.
pub fn f_lb_d(d: f64, k: u32) -> Result<f64> {
    Overlap::LowerD.eval(d, k)
}

/// [`Overlap::UpperD`] evaluated at `d ≥ 1`.
pub fn f_ub_d(d: f64, k: u32) -> Result<f64> {
    Overlap::UpperD.eval(d, k)
}

fn lower_family(kind: VariantKind) -> Result<Overlap> {
    match kind {
        VariantKind::Relaxed => Ok(Overlap::Smooth),
        VariantKind::Continuous => Ok(Overlap::LowerC),
        VariantKind::Discrete => Ok(Overlap::LowerD),
        VariantKind::TrivialAllStops => Err(Error::WrongVariant("trade-off needs RC, C or D")),
    }
}

fn upper_family(kind: VariantKind) -> Result<Overlap> {
    match kind {
        VariantKind::Continuous => Ok(Overlap::UpperC),
        VariantKind::Discrete => Ok(Overlap::UpperD),
        _ => Err(Error::WrongVariant("upper curve needs C or D")),
    }
}

/// Coverage that must be contributed by stops after the first.
pub fn lower_rhs(grid: &GridSpec, variant: &Variant) -> Result<f64> {
    let family = lower_family(variant.kind)?;
    Ok(grid.area() as f64 - family.saturation(variant.k_effective))
}

/// Necessary condition `(T − 1)·g(L/(T − 1)) ≥ rhs` for the variant's lower
/// overlap function `g`.
pub fn tradeoff_holds(cost: CostPair, grid: &GridSpec, variant: &Variant) -> Result<bool> {
    if !(cost.stops > 1.0) {
        return Err(Error::SingleStopConstraint);
    }
    let family = lower_family(variant.kind)?;
    let rhs = lower_rhs(grid, variant)?;
    if rhs <= 0.0 {
        return Ok(true);
    }
    let legs = cost.stops - 1.0;
    let gain = legs * family.eval_extended(cost.length / legs, variant.k_effective);
    Ok(gain >= rhs - TOL * rhs.max(1.0))
}

/// A boundary point in `(length, legs)` form, tagged with its average leg length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    /// Average leg length `L/(T − 1)` at this point.
    pub d: f64,
    /// Path length.
    pub length: f64,
    /// Number of legs `T − 1`.
    pub legs: f64,
}

impl Vertex {
    /// Stop count `legs + 1`.
    pub fn stops(&self) -> f64 {
        self.legs + 1.0
    }

    /// The point as a `(L, T)` pair.
    pub fn cost(&self) -> CostPair {
        CostPair::new(self.length, self.stops())
    }
}

/// Maps the nodes of a concave piecewise-linear function to the vertices of
/// the boundary `legs·g(L/legs) = c`.
///
/// Nodes after the function first reaches its maximum are dropped; the last
/// vertex starts the horizontal ray.
pub fn polyline_from_f(abscissae: &[f64], values: &[f64], c: f64) -> Result<Vec<Vertex>> {
    if abscissae.len() != values.len() || abscissae.is_empty() {
        return Err(Error::OutOfRange { what: "abscissae", detail: "length mismatch or empty" });
    }
    if !(c > 0.0) {
        return Err(Error::OutOfRange { what: "C", detail: "must be > 0" });
    }
    if !(abscissae[0] > 0.0) || !(values[0] > 0.0) {
        return Err(Error::NotConcave);
    }
    let mut slope = values[0] / abscissae[0];
    let mut out = Vec::with_capacity(abscissae.len());
    out.push(Vertex { d: abscissae[0], length: abscissae[0] * c / values[0], legs: c / values[0] });
    for w in 1..abscissae.len() {
        let (a0, a1) = (abscissae[w - 1], abscissae[w]);
        let (b0, b1) = (values[w - 1], values[w]);
        if !(a1 > a0) {
            return Err(Error::OutOfRange { what: "abscissae", detail: "must increase" });
        }
        let s = (b1 - b0) / (a1 - a0);
        if s > slope + TOL || s < -TOL {
            return Err(Error::NotConcave);
        }
        slope = s;
        if b1 > b0 {
            out.push(Vertex { d: a1, length: a1 * c / b1, legs: c / b1 });
        }
    }
    Ok(out)
}

/// A lower or upper boundary of the feasible `(L, T)` region.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffCurve {
    /// Variant the curve belongs to.
    pub kind: VariantKind,
    /// Lower bound or approximate upper bound.
    pub role: Role,
    /// Effective radius.
    pub k: u32,
    /// Right-hand side `C` of `legs·g(L/legs) = C`.
    pub rhs: f64,
    /// Polyline vertices; for the smooth relaxed curve, a rendering sample.
    pub vertices: Vec<Vertex>,
    /// The constraint is vacuous (`rhs ≤ 0`): a single stop is not excluded.
    pub degenerate: bool,
}

impl TradeoffCurve {
    fn build(kind: VariantKind, role: Role, family: Overlap, k: u32, rhs: f64, degenerate: bool) -> Result<Self> {
        let vertices = if degenerate {
            Vec::new()
        } else if family == Overlap::Smooth {
            let kf = f64::from(k);
            (1..=SMOOTH_SAMPLES)
                .map(|i| {
                    let d = 2.0 * kf * i as f64 / SMOOTH_SAMPLES as f64;
                    let g = smooth(d, kf);
                    Vertex { d, length: rhs * d / g, legs: rhs / g }
                })
                .collect()
        } else {
            let xs: Vec<f64> = family.abscissae(k).into_iter().map(f64::from).collect();
            polyline_from_f(&xs, &family.values(k), rhs)?
        };
        Ok(Self { kind, role, k, rhs, vertices, degenerate })
    }

    /// True for the smooth relaxed boundary.
    pub fn is_smooth(&self) -> bool {
        self.kind == VariantKind::Relaxed
    }

    /// Overlap function defining the curve.
    pub fn family(&self) -> Overlap {
        match (self.role, self.kind) {
            (Role::Upper, VariantKind::Continuous) => Overlap::UpperC,
            (Role::Upper, _) => Overlap::UpperD,
            (_, VariantKind::Continuous) => Overlap::LowerC,
            (_, VariantKind::Discrete) => Overlap::LowerD,
            _ => Overlap::Smooth,
        }
    }

    /// Stop count along the terminal ray.
    pub fn ray_stops(&self) -> f64 {
        if self.degenerate {
            return 1.0;
        }
        self.rhs / self.family().saturation(self.k) + 1.0
    }

    /// Range of average leg lengths spanned by the curve's vertices (for the
    /// smooth curve, `(0, 2k]`).
    pub fn d_range(&self) -> (f64, f64) {
        let hi = match self.vertices.last() {
            Some(v) => v.d,
            None => 0.0,
        };
        let lo = if self.is_smooth() {
            0.0
        } else {
            self.vertices.first().map_or(0.0, |v| v.d)
        };
        (lo, hi)
    }

    /// Boundary point with average leg length `d > 0`.
    pub fn point_at(&self, d: f64) -> Result<CostPair> {
        if self.degenerate {
            return Ok(CostPair::new(0.0, 1.0));
        }
        if !(d > 0.0) {
            return Err(Error::OutOfRange { what: "d", detail: "must be > 0" });
        }
        let g = self.family().eval_extended(d, self.k);
        Ok(CostPair::new(self.rhs * d / g, self.rhs / g + 1.0))
    }

    /// Smallest length on the curve with at most `stops` stops, by linear
    /// interpolation between vertices; infinite below the ray.
    pub fn length_at_stops(&self, stops: f64) -> f64 {
        let legs = stops - 1.0;
        let Some(first) = self.vertices.first() else {
            return 0.0;
        };
        if legs >= first.legs {
            return first.length;
        }
        for w in self.vertices.windows(2) {
            let (p, q) = (w[0], w[1]);
            if legs >= q.legs {
                let t = (p.legs - legs) / (p.legs - q.legs);
                return p.length + t * (q.length - p.length);
            }
        }
        f64::INFINITY
    }
}

/// Lower boundary of the feasible region.
pub fn lower_bound_curve(grid: &GridSpec, variant: &Variant) -> Result<TradeoffCurve> {
    let family = lower_family(variant.kind)?;
    let rhs = lower_rhs(grid, variant)?;
    TradeoffCurve::build(variant.kind, Role::Lower, family, variant.k_effective, rhs, rhs <= 0.0)
}

/// Approximate upper boundary attained by constructed paths (C and D only).
///
/// The discrete upper curve uses `rhs = N` rather than subtracting one ball.
pub fn upper_bound_curve(grid: &GridSpec, variant: &Variant) -> Result<TradeoffCurve> {
    let family = upper_family(variant.kind)?;
    let k = variant.k_effective;
    let area = grid.area() as f64;
    let degenerate = area <= family.saturation(k);
    let rhs = match variant.kind {
        VariantKind::Discrete => area,
        _ => area - family.saturation(k),
    };
    TradeoffCurve::build(variant.kind, Role::Upper, family, k, rhs, degenerate)
}

/// A single-objective lower bound on path length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LengthBound {
    /// The bound is known in closed form.
    Exact(f64),
    /// Only an interval containing the optimum's leading term is known.
    Bracket {
        /// Lower end.
        low: f64,
        /// Upper end.
        high: f64,
    },
}

/// Lower bound on the path length of any covering path.
pub fn min_length(grid: &GridSpec, variant: &Variant) -> Result<LengthBound> {
    let rhs = lower_rhs(grid, variant)?;
    if rhs <= 0.0 {
        return Ok(LengthBound::Exact(0.0));
    }
    let k = f64::from(variant.k_effective);
    Ok(match variant.kind {
        VariantKind::Relaxed => LengthBound::Exact(rhs / (2.0 * k)),
        VariantKind::Continuous => LengthBound::Bracket { low: rhs / (2.0 * k - 0.5), high: rhs / (2.0 * k - 1.0) },
        _ => LengthBound::Exact(rhs / (2.0 * k + 1.0)),
    })
}

/// Lower bound on the stop count of any covering path.
pub fn min_stops(grid: &GridSpec, variant: &Variant) -> Result<f64> {
    let family = lower_family(variant.kind)?;
    let rhs = lower_rhs(grid, variant)?;
    if rhs <= 0.0 {
        return Ok(1.0);
    }
    Ok(grid.area() as f64 / family.saturation(variant.k_effective))
}

/// Guaranteed `(length, stops)` ratios between the lower and upper curves.
pub fn gap_bounds(kind: VariantKind, k: u32) -> Result<(f64, f64)> {
    match (kind, k) {
        (VariantKind::Continuous, 1) => Ok((1.5, 1.0)),
        (VariantKind::Continuous, 2) => Ok((7.0 / 6.0, 1.0)),
        (VariantKind::Continuous, _) => Ok((1.1, 9.0 / 8.0)),
        (VariantKind::Discrete, _) => Ok((1.1, 1.1)),
        _ => Err(Error::WrongVariant("gap bounds need C or D")),
    }
}

/// For each lower-curve vertex `(L1, T1)`, the ratio `L2/L1` where `L2` is the
/// smallest length on the upper curve with `T2 − 1 ≤ stops_ratio·(T1 − 1)`.
///
/// Both curves are compared at a common right-hand side, since their
/// constants differ only by lower-order terms.
pub fn gap_length_ratios(kind: VariantKind, k: u32, stops_ratio: f64) -> Result<Vec<f64>> {
    let lower = lower_family(kind)?;
    let upper = upper_family(kind)?;
    let shape = |fam: Overlap| {
        let xs: Vec<f64> = fam.abscissae(k).into_iter().map(f64::from).collect();
        polyline_from_f(&xs, &fam.values(k), 1.0)
    };
    let lo = shape(lower)?;
    let up = TradeoffCurve {
        kind,
        role: Role::Upper,
        k,
        rhs: 1.0,
        vertices: shape(upper)?,
        degenerate: false,
    };
    Ok(lo
        .iter()
        .map(|v| up.length_at_stops(stops_ratio * v.legs + 1.0) / v.length)
        .collect())
}
