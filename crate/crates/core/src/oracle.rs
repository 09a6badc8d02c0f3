//! Exhaustive solvers for desk-scale instances.
//!
//! [`exact_pareto`] enumerates every irredundant covering stop set on a tiny
//! grid and computes the shortest open path through each with a subset
//! dynamic program. The brute-force counters here back the property tests of
//! the closed-form geometry.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::geometry::{dist_to_stops, GridSpec, Point, Rational, Region};
use crate::tradeoff::CostPair;
use crate::variant::{Variant, VariantKind};
use crate::{Error, Result};

/// Hard limits on oracle instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest admissible `(m + 1)(n + 1)`.
    pub max_lattice_points: usize,
    /// Largest stop count enumerated.
    pub max_stops: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_lattice_points: 25, max_stops: 9 }
    }
}

const MAX_POINTS_CAP: usize = 32;
const MAX_STOPS_CAP: usize = 16;

impl OracleLimits {
    /// Largest limits accepted at all.
    pub const CEILING: OracleLimits = OracleLimits { max_lattice_points: MAX_POINTS_CAP, max_stops: MAX_STOPS_CAP };
}

/// Lattice points within distance `k` of both `(0, 0)` and `(p, q)`.
pub fn brute_ball_overlap_count(p: i64, q: i64, k: i64) -> i64 {
    let mut count = 0;
    for x in -k..=k {
        for y in -k..=k {
            if x.abs() + y.abs() <= k && (x - p).abs() + (y - q).abs() <= k {
                count += 1;
            }
        }
    }
    count
}

/// Critical points of a region in doubled coordinates.
fn critical_points(grid: &GridSpec, region: Region) -> Vec<(i64, i64)> {
    let (w, h) = (2 * i64::from(grid.n()), 2 * i64::from(grid.m()));
    let mut out = Vec::new();
    for i in 0..=w {
        for j in 0..=h {
            let keep = match region {
                Region::Lattice => i % 2 == 0 && j % 2 == 0,
                Region::Edges => i % 2 == 0 || j % 2 == 0,
                Region::Rectangle => true,
            };
            if keep {
                out.push((i, j));
            }
        }
    }
    out
}

/// Largest distance from a critical point of `region` to its nearest stop:
/// integer points for `Lattice`, plus edge midpoints for `Edges`, plus cell
/// centers for `Rectangle`.
pub fn brute_coverage_max_dist(stops: &[Point], grid: &GridSpec, region: Region) -> Result<Rational> {
    if stops.is_empty() {
        return Err(Error::NoStops);
    }
    let mut worst = Rational::zero();
    for (i, j) in critical_points(grid, region) {
        let p = Point::new(Rational::new(i, 2), Rational::new(j, 2));
        worst = worst.max(dist_to_stops(&p, stops)?);
    }
    Ok(worst)
}

fn l1(a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - b.0).abs() + (a.1 - b.1).abs()
}

/// Length of the shortest open path visiting every point (any start, any end).
pub fn shortest_open_path(points: &[(i64, i64)]) -> i64 {
    let n = points.len();
    if n <= 1 {
        return 0;
    }
    let full = 1usize << n;
    let mut best = vec![i64::MAX; full * n];
    for i in 0..n {
        best[(1 << i) * n + i] = 0;
    }
    for mask in 1..full {
        for last in 0..n {
            let cur = best[mask * n + last];
            if cur == i64::MAX {
                continue;
            }
            for next in 0..n {
                if mask & (1 << next) != 0 {
                    continue;
                }
                let nm = mask | (1 << next);
                let cand = cur + l1(points[last], points[next]);
                let slot = &mut best[nm * n + next];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }
    (0..n).map(|i| best[(full - 1) * n + i]).min().unwrap_or(0)
}

/// Maps (x, y, n, m) to the image of (x, y).
type Symmetry = fn(i64, i64, i64, i64) -> (i64, i64);

/// Symmetries of the grid acting on lattice coordinates.
fn symmetries(n: i64, m: i64) -> Vec<Symmetry> {
    let mut out: Vec<Symmetry> = vec![
        |x, y, _, _| (x, y),
        |x, y, n, _| (n - x, y),
        |x, y, _, m| (x, m - y),
        |x, y, n, m| (n - x, m - y),
    ];
    if n == m {
        out.push(|x, y, _, _| (y, x));
        out.push(|x, y, n, _| (n - y, x));
        out.push(|x, y, _, m| (y, m - x));
        out.push(|x, y, n, m| (n - y, m - x));
    }
    out
}

/// Exact Pareto frontier of `(L, T)` over all covering stop sets with at most
/// `limits.max_stops` stops, sorted by `T` then `L`.
pub fn exact_pareto(grid: &GridSpec, variant: &Variant, limits: OracleLimits) -> Result<Vec<CostPair>> {
    exact_pareto_cancellable(grid, variant, limits, &mut || false)
}

/// [`exact_pareto`] with a cancellation hook polled during enumeration.
pub fn exact_pareto_cancellable(
    grid: &GridSpec,
    variant: &Variant,
    limits: OracleLimits,
    cancel: &mut dyn FnMut() -> bool,
) -> Result<Vec<CostPair>> {
    let region = match variant.kind {
        VariantKind::Continuous => Region::Edges,
        VariantKind::Discrete => Region::Lattice,
        _ => return Err(Error::WrongVariant("oracle needs C or D")),
    };
    let points = grid.lattice_points() as usize;
    if points > limits.max_lattice_points || points > MAX_POINTS_CAP {
        return Err(Error::OracleLimit("too many lattice points"));
    }
    if limits.max_stops > MAX_STOPS_CAP {
        return Err(Error::OracleLimit("stop limit too large"));
    }
    let (n, m) = (i64::from(grid.n()), i64::from(grid.m()));
    let k = i64::from(variant.k_effective);
    let lattice: Vec<(i64, i64)> = (0..=n).flat_map(|x| (0..=m).map(move |y| (x, y))).collect();
    let critical = critical_points(grid, region);
    if critical.len() > 128 {
        return Err(Error::OracleLimit("too many critical points"));
    }
    // With integral stops and radius, an edge midpoint is within k exactly
    // when it is within k − 1/2, so one threshold serves both point kinds.
    let covers: Vec<u128> = lattice
        .iter()
        .map(|&(x, y)| {
            critical.iter().enumerate().fold(0u128, |acc, (c, &(i, j))| {
                if (2 * x - i).abs() + (2 * y - j).abs() <= 2 * k {
                    acc | (1u128 << c)
                } else {
                    acc
                }
            })
        })
        .collect();
    let all: u128 = if critical.len() == 128 { u128::MAX } else { (1u128 << critical.len()) - 1 };
    let index = |x: i64, y: i64| (x * (m + 1) + y) as usize;
    let syms = symmetries(n, m);
    let canonical = |set: u32| {
        syms.iter()
            .map(|s| {
                lattice.iter().enumerate().fold(0u32, |acc, (i, &(x, y))| {
                    if set & (1 << i) != 0 {
                        let (a, b) = s(x, y, n, m);
                        acc | (1 << index(a, b))
                    } else {
                        acc
                    }
                })
            })
            .min()
            .unwrap_or(set)
    };

    let mut found: BTreeSet<u32> = BTreeSet::new();
    let mut visited: BTreeSet<u32> = BTreeSet::new();
    let mut stack: Vec<(u32, u128, usize)> = vec![(0, 0, 0)];
    let mut polls = 0u32;
    while let Some((set, covered, size)) = stack.pop() {
        if !visited.insert(set) {
            continue;
        }
        polls += 1;
        if polls % 1024 == 1 && cancel() {
            return Err(Error::Cancelled);
        }
        if covered == all {
            // Dropping a stop never lengthens the shortest path, so sets
            // with a redundant stop are dominated.
            let irredundant = (0..points).filter(|&s| set & (1 << s) != 0).all(|s| {
                let rest = (0..points)
                    .filter(|&t| t != s && set & (1 << t) != 0)
                    .fold(0u128, |acc, t| acc | covers[t]);
                rest != all
            });
            if irredundant {
                found.insert(canonical(set));
            }
            continue;
        }
        if size == limits.max_stops {
            continue;
        }
        let first = (!covered & all).trailing_zeros();
        for (s, &mask) in covers.iter().enumerate() {
            if mask & (1u128 << first) != 0 && set & (1 << s) == 0 {
                stack.push((set | (1 << s), covered | mask, size + 1));
            }
        }
    }

    let mut pairs: Vec<(usize, i64)> = Vec::new();
    for (done, set) in found.iter().enumerate() {
        if done % 64 == 0 && cancel() {
            return Err(Error::Cancelled);
        }
        let pts: Vec<(i64, i64)> = (0..points).filter(|i| set & (1 << i) != 0).map(|i| lattice[i]).collect();
        pairs.push((pts.len(), shortest_open_path(&pts)));
    }
    pairs.sort_unstable();
    let mut frontier: Vec<CostPair> = Vec::new();
    let mut best_len = i64::MAX;
    for (t, l) in pairs {
        if l < best_len {
            best_len = l;
            frontier.push(CostPair::new(l as f64, t as f64));
        }
    }
    Ok(frontier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::q;

    fn naive_open_path(points: &[(i64, i64)]) -> i64 {
        fn rec(points: &[(i64, i64)], used: &mut Vec<bool>, last: Option<usize>, acc: i64, best: &mut i64) {
            if used.iter().all(|&u| u) {
                *best = (*best).min(acc);
                return;
            }
            for i in 0..points.len() {
                if !used[i] {
                    used[i] = true;
                    let step = last.map_or(0, |j| l1(points[j], points[i]));
                    rec(points, used, Some(i), acc + step, best);
                    used[i] = false;
                }
            }
        }
        let mut best = i64::MAX;
        rec(points, &mut vec![false; points.len()], None, 0, &mut best);
        if points.is_empty() {
            0
        } else {
            best
        }
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(brute_ball_overlap_count(1, 0, 1), 2);
        assert_eq!(brute_ball_overlap_count(0, 0, 1), 5);
        assert_eq!(brute_ball_overlap_count(2, 2, 1), 0);
    }

    #[test]
    fn max_dist_examples() {
        let g = GridSpec::new(1, 1).unwrap();
        assert_eq!(brute_coverage_max_dist(&[Point::int(0, 0)], &g, Region::Edges), Ok(q(2, 1)));
        let two = [Point::int(0, 0), Point::int(1, 1)];
        assert_eq!(brute_coverage_max_dist(&two, &g, Region::Edges), Ok(q(1, 1)));
        let g = GridSpec::new(3, 2).unwrap();
        let all: Vec<_> = (0..=2).flat_map(|x| (0..=3).map(move |y| Point::int(x, y))).collect();
        assert_eq!(brute_coverage_max_dist(&all, &g, Region::Edges), Ok(q(1, 2)));
    }

    #[test]
    fn held_karp_matches_permutations() {
        let pts = [(0, 0), (3, 1), (1, 4), (2, 2), (5, 0), (4, 3)];
        for len in 0..=pts.len() {
            assert_eq!(shortest_open_path(&pts[..len]), naive_open_path(&pts[..len]), "len={len}");
        }
    }

    #[test]
    fn two_by_two_discrete() {
        let g = GridSpec::new(2, 2).unwrap();
        let f = exact_pareto(&g, &Variant::discrete(1).unwrap(), OracleLimits::default()).unwrap();
        assert!(f.iter().all(|c| c.stops >= 3.0));
        assert!(f.contains(&CostPair::new(2.0, 3.0)));
    }

    #[test]
    fn one_by_one_discrete() {
        let g = GridSpec::new(1, 1).unwrap();
        let f = exact_pareto(&g, &Variant::discrete(1).unwrap(), OracleLimits::default()).unwrap();
        assert_eq!(f, [CostPair::new(1.0, 2.0)]);
    }

    #[test]
    fn large_radius_single_stop() {
        let g = GridSpec::new(2, 1).unwrap();
        let f = exact_pareto(&g, &Variant::continuous(3).unwrap(), OracleLimits::default()).unwrap();
        assert_eq!(f, [CostPair::new(0.0, 1.0)]);
    }

    #[test]
    fn limits_are_errors() {
        let g = GridSpec::new(5, 5).unwrap();
        let e = exact_pareto(&g, &Variant::discrete(1).unwrap(), OracleLimits::default());
        assert!(matches!(e, Err(Error::OracleLimit(_))));
    }

    #[test]
    fn cancellation() {
        let g = GridSpec::new(4, 4).unwrap();
        let e = exact_pareto_cancellable(&g, &Variant::discrete(1).unwrap(), OracleLimits::default(), &mut || true);
        assert_eq!(e, Err(Error::Cancelled));
    }
}
