//! End-to-end solving: bound, optimize on the bound, construct, certify.

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{verify_coverage, GridSpec, Point, Rational, Region};
use crate::paths::bounds;
use crate::paths::{
    build_discrete_up_down, build_mixed_discrete, build_mixed_up_down, build_trivial, build_up_down, build_zigzag,
    path_cost, single_stop, Construction, CoveringPath,
};
use crate::tradeoff::{
    gap_bounds, lower_bound_curve, upper_bound_curve, CostPair, Overlap, TradeoffCurve,
};
use crate::variant::{classify, Variant, VariantKind};
use crate::{Error, Result};

const GOLDEN_TOL: f64 = 1e-9;
const GOLDEN_MAX_ITER: usize = 200;
const GAMMA_DENOM: i64 = 1 << 20;

/// Cost function of `(L, T)` to minimize.
#[derive(Clone, Copy)]
pub enum Objective<'a> {
    /// `α·L + β·T` with `α, β ≥ 0`, not both zero.
    Linear {
        /// Weight on length.
        alpha: f64,
        /// Weight on stops.
        beta: f64,
    },
    /// Shortest path length.
    MinLength,
    /// Fewest stops.
    MinStops,
    /// Caller-supplied increasing convex cost.
    Convex(&'a dyn Fn(f64, f64) -> f64),
}

impl fmt::Debug for Objective<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Linear { alpha, beta } => write!(f, "Linear({alpha}, {beta})"),
            Objective::MinLength => f.write_str("MinLength"),
            Objective::MinStops => f.write_str("MinStops"),
            Objective::Convex(_) => f.write_str("Convex(..)"),
        }
    }
}

impl Objective<'_> {
    /// Rejects invalid weights and callbacks that decrease on probe points.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Objective::Linear { alpha, beta } => {
                let ok = alpha.is_finite() && beta.is_finite() && alpha >= 0.0 && beta >= 0.0;
                if !ok || alpha + beta <= 0.0 {
                    return Err(Error::InvalidWeights);
                }
                Ok(())
            }
            Objective::Convex(c) => {
                for l in [0.5, 5.0, 50.0, 500.0, 5000.0] {
                    for t in [1.5, 15.0, 150.0, 1500.0] {
                        let base = c(l, t);
                        let tol = 1e-12 * base.abs().max(1.0);
                        if !base.is_finite() || c(l * 1.5 + 1.0, t) < base - tol || c(l, t * 1.5 + 1.0) < base - tol {
                            return Err(Error::NonMonotoneObjective);
                        }
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Evaluates the objective.
    pub fn eval(&self, cost: CostPair) -> f64 {
        match *self {
            Objective::Linear { alpha, beta } => alpha * cost.length + beta * cost.stops,
            Objective::MinLength => cost.length,
            Objective::MinStops => cost.stops,
            Objective::Convex(c) => c(cost.length, cost.stops),
        }
    }

    fn weights(&self) -> Option<(f64, f64)> {
        match *self {
            Objective::Linear { alpha, beta } => Some((alpha, beta)),
            Objective::MinLength => Some((1.0, 0.0)),
            Objective::MinStops => Some((0.0, 1.0)),
            Objective::Convex(_) => None,
        }
    }
}

/// Optimum of an objective on a boundary curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveOptimum {
    /// Optimal `(L*, T*)`.
    pub cost: CostPair,
    /// Objective value there, a lower bound on any feasible cost.
    pub value: f64,
    /// Average leg length `min(L*/(T* − 1), 2k)` (or the saturation point).
    pub d_star: f64,
}

fn golden(mut lo: f64, mut hi: f64, g: impl Fn(f64) -> f64) -> f64 {
    let (start, end) = (lo, hi);
    let inv_phi = 0.618_033_988_749_894_8;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    for _ in 0..GOLDEN_MAX_ITER {
        if hi - lo <= GOLDEN_TOL * hi.max(1.0) {
            break;
        }
        if g1 <= g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        }
    }
    // Endpoints are candidates too; a monotone objective sits at one of them.
    let mid = 0.5 * (lo + hi);
    [lo, mid, hi, start, end]
        .into_iter()
        .fold((mid, g(mid)), |best, x| if g(x) < best.1 { (x, g(x)) } else { best })
        .0
}

/// Minimizes the objective over a lower (or upper) boundary curve.
///
/// Linear objectives on polylines use a vertex scan with ties broken toward
/// the smaller average leg length; other cases use golden-section search on
/// the average leg length `d`.
pub fn minimize_on_curve(curve: &TradeoffCurve, objective: &Objective<'_>) -> Result<CurveOptimum> {
    objective.validate()?;
    if curve.degenerate {
        let cost = CostPair::new(0.0, 1.0);
        return Ok(CurveOptimum { cost, value: objective.eval(cost), d_star: 0.0 });
    }
    let two_k = 2.0 * f64::from(curve.k);
    // Spacing beyond the saturation point adds nothing.
    let saturation = if curve.kind == VariantKind::Discrete { two_k + 1.0 } else { two_k };
    let cap = |cost: CostPair| (cost.length / (cost.stops - 1.0)).min(saturation);
    if curve.is_smooth() {
        let rhs = curve.rhs;
        let (alpha, beta) = objective.weights().unwrap_or((1.0, 1.0));
        let (cost, value) = if objective.weights().is_some() && beta == 0.0 {
            // Infimum approached as d → 0.
            let cost = CostPair::new(rhs / two_k, f64::INFINITY);
            (cost, alpha * cost.length)
        } else {
            let g = |d: f64| objective.eval(curve.point_at(d).unwrap_or(CostPair::new(f64::INFINITY, f64::INFINITY)));
            let d = golden(two_k * 1e-9, two_k, g);
            let cost = curve.point_at(d)?;
            (cost, objective.eval(cost))
        };
        let d_star = if cost.stops.is_finite() { cap(cost) } else { 0.0 };
        return Ok(CurveOptimum { cost, value, d_star });
    }
    match objective.weights() {
        Some(_) => {
            let mut best: Option<(CostPair, f64, f64)> = None;
            for v in &curve.vertices {
                let cost = v.cost();
                let val = objective.eval(cost);
                let better = match best {
                    None => true,
                    Some((_, b, _)) => val < b - 1e-12 * b.abs().max(1.0),
                };
                if better {
                    best = Some((cost, val, v.d));
                }
            }
            let (cost, value, d) = best.expect("non-degenerate curve has vertices");
            Ok(CurveOptimum { cost, value, d_star: d.min(saturation) })
        }
        None => {
            let (lo, hi) = curve.d_range();
            let g = |d: f64| objective.eval(curve.point_at(d).unwrap_or(CostPair::new(f64::INFINITY, f64::INFINITY)));
            let d = if hi > lo { golden(lo, hi, g) } else { lo };
            let cost = curve.point_at(d)?;
            Ok(CurveOptimum { cost, value: objective.eval(cost), d_star: cap(cost).min(d) })
        }
    }
}

fn rational_near(x: f64, denom: i64) -> Rational {
    Rational::new(libm::round(x * denom as f64) as i64, denom)
}

/// Maps an optimal average leg length onto a construction.
pub fn select_construction(variant: &Variant, d_star: f64) -> Result<Construction> {
    let k = variant.k_effective;
    let kf = f64::from(k);
    match variant.kind {
        VariantKind::TrivialAllStops => Ok(Construction::Trivial),
        VariantKind::Relaxed => {
            let d = rational_near(d_star.clamp(1.0 / 16.0, 2.0 * kf), 16);
            Ok(Construction::UpDown { d })
        }
        VariantKind::Continuous => {
            if d_star < 2.0 {
                return Ok(Construction::UpDown { d: Rational::from_integer(2) });
            }
            if d_star >= 2.0 * kf {
                return Ok(Construction::UpDown { d: Rational::from_integer(2 * i64::from(k)) });
            }
            let low = (libm::floor(d_star / 2.0) * 2.0) as u32;
            if d_star == f64::from(low) {
                return Ok(Construction::UpDown { d: Rational::from_integer(i64::from(low)) });
            }
            let gamma = rational_near((f64::from(low) + 2.0 - d_star) / 2.0, GAMMA_DENOM);
            Ok(Construction::Mixed { d: low, gamma })
        }
        VariantKind::Discrete => {
            if d_star >= 2.0 * kf + 1.0 {
                return Ok(Construction::Zigzag);
            }
            if d_star <= 1.0 {
                return Ok(Construction::Discrete { d: 1 });
            }
            let types = Overlap::UpperD.abscissae(k);
            let i = types.partition_point(|&a| f64::from(a) <= d_star);
            let (d1, d2) = (types[i - 1], types[i]);
            if d_star == f64::from(d1) {
                return Ok(Construction::Discrete { d: d1 });
            }
            let f1 = Overlap::UpperD.eval(f64::from(d1), k)?;
            let f2 = Overlap::UpperD.eval(f64::from(d2), k)?;
            let wl = (f64::from(d2) - d_star) / f2;
            let wr = (d_star - f64::from(d1)) / f1;
            let gamma = rational_near(wl / (wl + wr), GAMMA_DENOM);
            Ok(Construction::MixedDiscrete { d1, d2, gamma })
        }
    }
}

/// Builds a construction on a grid.
pub fn build(construction: &Construction, grid: &GridSpec, variant: &Variant) -> Result<CoveringPath> {
    let k = variant.k_effective;
    match *construction {
        Construction::Trivial => Ok(build_trivial(grid)),
        Construction::SingleStop => Ok(single_stop(center(grid))),
        Construction::UpDown { d } => build_up_down(d, grid, Rational::from_integer(i64::from(k))),
        Construction::Mixed { d, gamma } => build_mixed_up_down(d, gamma, grid, k),
        Construction::Discrete { d } => build_discrete_up_down(d, grid, k),
        Construction::Zigzag => build_zigzag(grid, k),
        Construction::MixedDiscrete { d1, d2, gamma } => build_mixed_discrete(d1, d2, gamma, grid, k),
    }
}

fn center(grid: &GridSpec) -> Point {
    Point::int(i64::from(grid.n() / 2), i64::from(grid.m() / 2))
}

/// Region and radius the variant must cover, for the exact check.
pub fn coverage_target(variant: &Variant) -> (Region, Rational) {
    let k = Rational::from_integer(i64::from(variant.k_effective));
    match variant.kind {
        VariantKind::Discrete => (Region::Lattice, k),
        VariantKind::TrivialAllStops => (Region::Edges, variant.k_rounded.max(Rational::new(1, 2))),
        _ => (Region::Rectangle, k),
    }
}

/// Checks that a path covers what the variant requires.
pub fn path_covers(path: &CoveringPath, grid: &GridSpec, variant: &Variant) -> Result<bool> {
    match variant.kind {
        VariantKind::Relaxed => crate::geometry::verify_rectangle_rational(
            &path.stops,
            grid,
            Rational::from_integer(i64::from(variant.k_effective)),
        ),
        VariantKind::TrivialAllStops => {
            let all = grid.lattice_points() as usize == path.stops.len();
            Ok(all && verify_coverage(&path.stops, grid, Region::Lattice, Rational::new(1, 2))?)
        }
        _ => {
            let (region, radius) = coverage_target(variant);
            verify_coverage(&path.stops, grid, region, radius)
        }
    }
}

/// Approximation guarantee attached to a solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Guarantee {
    /// The construction is optimal.
    Exact,
    /// Ratio at most `base + slack`.
    Bounded {
        /// Worst-case gap between the curves.
        base: f64,
        /// Size-dependent additive term.
        slack: f64,
    },
    /// The size preconditions fail; only the curve gap `base` is known.
    Unguaranteed {
        /// Worst-case gap between the curves.
        base: f64,
        /// Smallest additive term the preconditions would allow (may exceed 1).
        slack: f64,
        /// Why no guarantee applies.
        reason: &'static str,
    },
}

impl Guarantee {
    /// The bound on the observed ratio, when one holds.
    pub fn ratio(&self) -> Option<f64> {
        match *self {
            Guarantee::Exact => Some(1.0),
            Guarantee::Bounded { base, slack } => Some(base + slack),
            Guarantee::Unguaranteed { .. } => None,
        }
    }
}

/// Result of [`solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Classified variant.
    pub variant: Variant,
    /// Constructed path.
    pub path: CoveringPath,
    /// Realized `(L, T)`.
    pub cost: CostPair,
    /// Optimum `(L*, T*)` of the objective on the lower bound.
    pub bound: CostPair,
    /// Objective value at `(L*, T*)`.
    pub lower_bound_cost: f64,
    /// Objective value of the path divided by `lower_bound_cost`.
    pub observed_ratio: f64,
    /// Applicable guarantee.
    pub guarantee: Guarantee,
    /// Optimal average leg length mapped to the construction.
    pub d_star: f64,
}

fn ratio(value: f64, bound: f64) -> f64 {
    if bound > 0.0 {
        value / bound
    } else if value <= 0.0 {
        1.0
    } else {
        f64::INFINITY
    }
}

/// The all-stops solution for radii below one.
pub fn trivial_solution(grid: &GridSpec, variant: &Variant, objective: &Objective<'_>) -> Result<Solution> {
    if variant.kind != VariantKind::TrivialAllStops {
        return Err(Error::WrongVariant("trivial solution needs k < 1"));
    }
    let path = build_trivial(grid);
    let cost = path_cost(&path);
    let value = objective.eval(cost);
    Ok(Solution {
        variant: *variant,
        path,
        cost,
        bound: cost,
        lower_bound_cost: value,
        observed_ratio: ratio(value, value),
        guarantee: Guarantee::Exact,
        d_star: 1.0,
    })
}

/// Whether a single stop at the grid center covers the instance.
pub fn single_stop_covers(grid: &GridSpec, variant: &Variant) -> Result<bool> {
    path_covers(&single_stop(center(grid)), grid, variant)
}

fn guarantee_for(
    grid: &GridSpec,
    variant: &Variant,
    objective: &Objective<'_>,
    optimum: &CurveOptimum,
    construction: &Construction,
) -> Result<Guarantee> {
    let k = f64::from(variant.k_effective);
    let n = f64::from(grid.n());
    let linear = matches!(objective, Objective::Linear { .. } | Objective::MinLength | Objective::MinStops);
    match variant.kind {
        VariantKind::Relaxed => {
            let eps = 16.0 * k / n;
            if !linear {
                return Ok(Guarantee::Unguaranteed { base: 1.0, slack: eps, reason: "objective is not linear" });
            }
            if eps >= 1.0 {
                return Ok(Guarantee::Unguaranteed { base: 1.0, slack: eps, reason: "grid too small for the size precondition" });
            }
            Ok(Guarantee::Bounded { base: 1.0, slack: eps })
        }
        VariantKind::Continuous => {
            let (a, b) = gap_bounds(variant.kind, variant.k_effective)?;
            let base = a.max(b);
            let eps = 100.0 * k * k / n;
            if !linear {
                return Ok(Guarantee::Unguaranteed { base, slack: eps, reason: "objective is not linear" });
            }
            if eps >= 1.0 {
                return Ok(Guarantee::Unguaranteed { base, slack: eps, reason: "grid too small for the size precondition" });
            }
            Ok(Guarantee::Bounded { base, slack: eps })
        }
        VariantKind::Discrete => {
            let base = 1.1;
            let Some((alpha, beta)) = objective.weights() else {
                return Ok(Guarantee::Unguaranteed { base, slack: f64::NAN, reason: "objective is not linear" });
            };
            let upper = upper_bound_curve(grid, variant)?;
            let lower = lower_bound_curve(grid, variant)?;
            let ideal = upper.point_at(optimum.d_star.max(1.0))?;
            let explicit = bounds::for_construction(construction, grid, variant.k_effective)
                .ok_or(Error::WrongVariant("construction has no explicit bound"))?;
            let value = optimum.value;
            let construction_slack =
                (alpha * (explicit.length - ideal.length) + beta * (explicit.stops - ideal.stops)).max(0.0) / value;
            let scale_slack = base * (upper.rhs / lower.rhs - 1.0);
            let slack = construction_slack + scale_slack;
            if slack >= 1.0 {
                return Ok(Guarantee::Unguaranteed { base, slack, reason: "grid too small for the explicit slack" });
            }
            Ok(Guarantee::Bounded { base, slack })
        }
        VariantKind::TrivialAllStops => Ok(Guarantee::Exact),
    }
}

/// Solves an instance with an explicitly chosen variant (including the
/// relaxed one, which [`classify`] never returns).
pub fn solve_variant(grid: &GridSpec, variant: &Variant, objective: &Objective<'_>) -> Result<Solution> {
    objective.validate()?;
    if variant.kind == VariantKind::TrivialAllStops {
        return trivial_solution(grid, variant, objective);
    }
    let lower = lower_bound_curve(grid, variant)?;
    if lower.degenerate {
        return degenerate_solution(grid, variant, objective);
    }
    let optimum = minimize_on_curve(&lower, objective)?;
    let construction = select_construction(variant, optimum.d_star)?;
    let path = build(&construction, grid, variant)?;
    let cost = path_cost(&path);
    let value = objective.eval(cost);
    let guarantee = guarantee_for(grid, variant, objective, &optimum, &construction)?;
    Ok(Solution {
        variant: *variant,
        path,
        cost,
        bound: optimum.cost,
        lower_bound_cost: optimum.value,
        observed_ratio: ratio(value, optimum.value),
        guarantee,
        d_star: optimum.d_star,
    })
}

fn degenerate_solution(grid: &GridSpec, variant: &Variant, objective: &Objective<'_>) -> Result<Solution> {
    if single_stop_covers(grid, variant)? {
        let path = single_stop(center(grid));
        let cost = path_cost(&path);
        let value = objective.eval(cost);
        return Ok(Solution {
            variant: *variant,
            path,
            cost,
            bound: cost,
            lower_bound_cost: value,
            observed_ratio: ratio(value, value),
            guarantee: Guarantee::Exact,
            d_star: 0.0,
        });
    }
    // At least two distinct lattice stops, so at least one unit of travel.
    let bound = CostPair::new(1.0, 2.0);
    let construction = match variant.kind {
        VariantKind::Discrete => Construction::Zigzag,
        _ => Construction::UpDown { d: Rational::from_integer(2 * i64::from(variant.k_effective)) },
    };
    let path = build(&construction, grid, variant)?;
    let cost = path_cost(&path);
    let lb = objective.eval(bound);
    Ok(Solution {
        variant: *variant,
        path,
        cost,
        bound,
        lower_bound_cost: lb,
        observed_ratio: ratio(objective.eval(cost), lb),
        guarantee: Guarantee::Unguaranteed { base: 1.0, slack: f64::NAN, reason: "grid smaller than two balls" },
        d_star: 2.0 * f64::from(variant.k_effective),
    })
}

/// Classifies `k_raw`, optimizes on the lower bound, builds the matching path
/// and reports costs and guarantees.
pub fn solve(grid: &GridSpec, k_raw: Rational, objective: &Objective<'_>) -> Result<Solution> {
    let variant = classify(k_raw)?;
    solve_variant(grid, &variant, objective)
}

/// A constructed path's cost in a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    /// Construction and parameters.
    pub construction: Construction,
    /// Realized cost.
    pub cost: CostPair,
}

/// Bounds and constructed costs for one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoReport {
    /// Classified variant.
    pub variant: Variant,
    /// Lower bound curve (absent for the trivial case).
    pub lower: Option<TradeoffCurve>,
    /// Upper curve (absent for the trivial case).
    pub upper: Option<TradeoffCurve>,
    /// Constructed points ordered by increasing average leg length.
    pub points: Vec<SweepPoint>,
}

/// Sweeps the construction family between consecutive pure types with
/// `samples` evenly spaced shares per segment (endpoints included).
pub fn pareto_report(grid: &GridSpec, k_raw: Rational, samples: usize) -> Result<ParetoReport> {
    if samples < 2 {
        return Err(Error::OutOfRange { what: "samples", detail: "must be >= 2" });
    }
    let variant = classify(k_raw)?;
    let mut points = Vec::new();
    if variant.kind == VariantKind::TrivialAllStops {
        let path = build_trivial(grid);
        points.push(SweepPoint { construction: path.construction, cost: path_cost(&path) });
        return Ok(ParetoReport { variant, lower: None, upper: None, points });
    }
    let lower = lower_bound_curve(grid, &variant)?;
    let upper = upper_bound_curve(grid, &variant)?;
    if lower.degenerate && single_stop_covers(grid, &variant)? {
        points.push(SweepPoint { construction: Construction::SingleStop, cost: CostPair::new(0.0, 1.0) });
        return Ok(ParetoReport { variant, lower: Some(lower), upper: Some(upper), points });
    }
    let k = variant.k_effective;
    let gammas = |_: ()| {
        (1..samples - 1)
            .rev()
            .map(|j| Rational::new(j as i64, (samples - 1) as i64))
            .collect::<Vec<_>>()
    };
    let mut plan = Vec::new();
    match variant.kind {
        VariantKind::Continuous => {
            for d in (1..=k).map(|i| 2 * i) {
                plan.push(Construction::UpDown { d: Rational::from_integer(i64::from(d)) });
                if d + 2 <= 2 * k {
                    for gamma in gammas(()) {
                        plan.push(Construction::Mixed { d, gamma });
                    }
                }
            }
        }
        _ => {
            let types = Overlap::UpperD.abscissae(k);
            for (i, &d) in types.iter().enumerate() {
                plan.push(if d == 2 * k + 1 { Construction::Zigzag } else { Construction::Discrete { d } });
                if let Some(&d2) = types.get(i + 1) {
                    for gamma in gammas(()) {
                        plan.push(Construction::MixedDiscrete { d1: d, d2, gamma });
                    }
                }
            }
        }
    }
    for c in plan {
        let path = build(&c, grid, &variant)?;
        points.push(SweepPoint { construction: c, cost: path_cost(&path) });
    }
    Ok(ParetoReport { variant, lower: Some(lower), upper: Some(upper), points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::q;

    fn close(a: f64, b: f64) -> bool {
        let d = a - b;
        d <= 1e-9 * b.max(1.0) && -d <= 1e-9 * b.max(1.0)
    }

    #[test]
    fn relaxed_min_stops() {
        let g = GridSpec::new(40, 40).unwrap();
        let v = Variant::relaxed(2).unwrap();
        let c = lower_bound_curve(&g, &v).unwrap();
        let o = minimize_on_curve(&c, &Objective::MinStops).unwrap();
        assert!(close(o.d_star, 4.0), "{o:?}");
        assert!(close(o.cost.stops, 1600.0 / 8.0));
    }

    #[test]
    fn discrete_min_length() {
        let g = GridSpec::new(10, 10).unwrap();
        let v = Variant::discrete(1).unwrap();
        let c = lower_bound_curve(&g, &v).unwrap();
        let o = minimize_on_curve(&c, &Objective::MinLength).unwrap();
        assert!(close(o.d_star, 1.0));
        assert!(close(o.cost.length, 95.0 / 3.0));
    }

    #[test]
    fn linear_length_only_on_c() {
        let g = GridSpec::new(10, 10).unwrap();
        let c = lower_bound_curve(&g, &Variant::continuous(1).unwrap()).unwrap();
        let o = minimize_on_curve(&c, &Objective::Linear { alpha: 1.0, beta: 0.0 }).unwrap();
        assert!(close(o.cost.length, 98.0 / 1.5));
        assert!(close(o.cost.stops - 1.0, 98.0 / 1.5));
        assert!(close(o.d_star, 1.0));
    }

    #[test]
    fn objective_validation() {
        let g = GridSpec::new(10, 10).unwrap();
        let c = lower_bound_curve(&g, &Variant::continuous(1).unwrap()).unwrap();
        assert_eq!(
            minimize_on_curve(&c, &Objective::Linear { alpha: 0.0, beta: 0.0 }),
            Err(Error::InvalidWeights)
        );
        let bad = |l: f64, t: f64| -l + t;
        assert_eq!(minimize_on_curve(&c, &Objective::Convex(&bad)), Err(Error::NonMonotoneObjective));
    }

    #[test]
    fn selection_rules() {
        let c = Variant::continuous(3).unwrap();
        assert_eq!(select_construction(&c, 3.0).unwrap(), Construction::Mixed { d: 2, gamma: q(1, 2) });
        assert_eq!(select_construction(&c, 1.2).unwrap(), Construction::UpDown { d: q(2, 1) });
        assert_eq!(select_construction(&c, 6.0).unwrap(), Construction::UpDown { d: q(6, 1) });
        assert_eq!(select_construction(&c, 4.0).unwrap(), Construction::UpDown { d: q(4, 1) });
        let d = Variant::discrete(2).unwrap();
        assert_eq!(select_construction(&d, 9.0).unwrap(), Construction::Zigzag);
        assert_eq!(select_construction(&d, 1.0).unwrap(), Construction::Discrete { d: 1 });
        // At an odd lower vertex the split matches f(2t)/(f(2t) + f(2t+2)).
        match select_construction(&d, 3.0).unwrap() {
            Construction::MixedDiscrete { d1: 2, d2: 4, gamma } => {
                let (f1, f2) = (8.0, 12.0);
                assert!((crate::geometry::ratio_f64(gamma) - f1 / (f1 + f2)) * 1e6 < 1.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trivial_case() {
        let g = GridSpec::new(2, 2).unwrap();
        let s = solve(&g, q(1, 2), &Objective::Linear { alpha: 1.0, beta: 1.0 }).unwrap();
        assert_eq!(s.cost, CostPair::new(8.0, 9.0));
        assert_eq!(s.guarantee, Guarantee::Exact);
        assert!(trivial_solution(&g, &Variant::continuous(1).unwrap(), &Objective::MinStops).is_err());
    }

    #[test]
    fn zigzag_for_min_stops() {
        let g = GridSpec::new(40, 40).unwrap();
        let s = solve(&g, q(3, 2), &Objective::MinStops).unwrap();
        assert_eq!(s.variant.kind, VariantKind::Discrete);
        assert_eq!(s.path.construction, Construction::Zigzag);
        assert!(path_covers(&s.path, &g, &s.variant).unwrap());
        assert!(s.observed_ratio >= 1.0 - 1e-9);
    }

    #[test]
    fn degenerate_single_stop() {
        let g = GridSpec::new(2, 2).unwrap();
        let s = solve(&g, q(2, 1), &Objective::Linear { alpha: 1.0, beta: 1.0 }).unwrap();
        assert_eq!(s.cost, CostPair::new(0.0, 1.0));
        let r = pareto_report(&g, q(2, 1), 3).unwrap();
        assert_eq!(r.points.len(), 1);
    }

    #[test]
    fn discrete_sweep_pure_points() {
        let g = GridSpec::new(10, 10).unwrap();
        let r = pareto_report(&g, q(3, 2), 2).unwrap();
        assert_eq!(r.points.len(), 3);
    }
}
