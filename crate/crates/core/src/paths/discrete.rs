//! Discrete up-and-down paths covering lattice points.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::updown::sweep;
use super::{split_column, Construction, CoveringPath, Route};
use crate::geometry::{GridSpec, Point, Rational};
use crate::{Error, Result};

/// The lattice `{(a, b) : k·a + (k+1)·b ≡ 0 (mod 2k² + 2k + 1)}`, whose
/// radius-`k` lattice balls tile `ℤ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TessellationLattice {
    k: i64,
    modulus: i64,
}

impl TessellationLattice {
    /// Lattice for radius `k ≥ 1`.
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositiveRadius);
        }
        let k = i64::from(k);
        Ok(Self { k, modulus: 2 * k * k + 2 * k + 1 })
    }

    /// Radius.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// `2k² + 2k + 1`, the number of lattice points in one ball.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Membership test.
    pub fn contains(&self, a: i64, b: i64) -> bool {
        (self.k * a + (self.k + 1) * b).rem_euclid(self.modulus) == 0
    }

    /// Index of the diagonal traversal through a member: `(k·a + (k+1)·b)/M`.
    pub fn traversal(&self, a: i64, b: i64) -> Option<i64> {
        let v = self.k * a + (self.k + 1) * b;
        (v.rem_euclid(self.modulus) == 0).then(|| v.div_euclid(self.modulus))
    }
}

fn is_discrete_type(d: u32, k: u32) -> bool {
    d == 1 || (d.is_multiple_of(2) && d >= 2 && d <= 2 * k) || d == 2 * k + 1
}

/// Abscissae `1, 2, 4, …, 2k, 2k + 1` of the discrete family.
pub(crate) fn discrete_types(k: u32) -> Vec<u32> {
    core::iter::once(1)
        .chain((1..=k).map(|i| 2 * i))
        .chain(core::iter::once(2 * k + 1))
        .collect()
}

/// Route of type `d` on the strip `[x0, x1] × [0, m]`.
fn strip(d: u32, x0: i64, x1: i64, m: i64, k: u32) -> Route {
    let kr = i64::from(k);
    let int = Rational::from_integer;
    if d == 2 * k + 1 {
        return zigzag_strip(x0, x1, m, kr);
    }
    if d == 1 {
        return sweep(int(x0), int(x1), int(m), int(2 * kr + 1), int(1), Rational::zero());
    }
    let t = i64::from(d / 2);
    sweep(int(x0), int(x1), int(m), int(2 * kr + 1 - t), int(2 * t), int(t))
}

fn zigzag_strip(x0: i64, x1: i64, m: i64, k: i64) -> Route {
    let lattice = TessellationLattice { k, modulus: 2 * k * k + 2 * k + 1 };
    let w = x1 - x0;
    let mut traversals: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for a in -k..=w + k {
        for b in -k..=m + k {
            let gap = (-a).max(a - w).max(0) + (-b).max(b - m).max(0);
            if gap > k {
                continue;
            }
            if let Some(i) = lattice.traversal(a, b) {
                traversals.entry(i).or_default().push((a, b));
            }
        }
    }
    let mut route = Route::default();
    for (pos, members) in traversals.values_mut().enumerate() {
        if pos % 2 == 1 {
            members.reverse();
        }
        for &(a, b) in members.iter() {
            let p = Point::int(x0 + a.clamp(0, w), b.clamp(0, m));
            route.go_horizontal_first(p);
            route.stop(p);
        }
    }
    route
}

/// Discrete up-and-down path of type 1 (every lattice point on traversals
/// `2k + 1` apart) or even type `2t` (spacing `2t`, separation `2k + 1 − t`).
pub fn build_discrete_up_down(d: u32, grid: &GridSpec, k: u32) -> Result<CoveringPath> {
    if k == 0 {
        return Err(Error::NonPositiveRadius);
    }
    if !(d == 1 || (d.is_multiple_of(2) && d >= 2 && d <= 2 * k)) {
        return Err(Error::OutOfRange { what: "d", detail: "must be 1 or even in [2, 2k]" });
    }
    let route = strip(d, 0, i64::from(grid.n()), i64::from(grid.m()), k);
    Ok(route.finish(Construction::Discrete { d }))
}

/// Type-`(2k + 1)` path through the tessellation lattice.
///
/// Members within distance `k` of the rectangle are grouped into diagonal
/// traversals, visited in boustrophedon order, clamped onto the rectangle and
/// joined by horizontal-then-vertical moves.
pub fn build_zigzag(grid: &GridSpec, k: u32) -> Result<CoveringPath> {
    if k == 0 {
        return Err(Error::NonPositiveRadius);
    }
    let route = zigzag_strip(0, i64::from(grid.n()), i64::from(grid.m()), i64::from(k));
    Ok(route.finish(Construction::Zigzag))
}

/// Type-`d1` on `[0, ⌈γn⌉]` and type-`d2` on the rest, for adjacent `d1 < d2`
/// in `1, 2, 4, …, 2k, 2k + 1`.
pub fn build_mixed_discrete(d1: u32, d2: u32, gamma: Rational, grid: &GridSpec, k: u32) -> Result<CoveringPath> {
    if k == 0 {
        return Err(Error::NonPositiveRadius);
    }
    let types = discrete_types(k);
    let adjacent = types.windows(2).any(|w| w[0] == d1 && w[1] == d2);
    if !adjacent || !is_discrete_type(d1, k) {
        return Err(Error::OutOfRange { what: "d1,d2", detail: "must be adjacent discrete types" });
    }
    if gamma.is_negative() || gamma >= Rational::from_integer(1) {
        return Err(Error::OutOfRange { what: "gamma", detail: "must lie in [0, 1)" });
    }
    let (n, m) = (i64::from(grid.n()), i64::from(grid.m()));
    let s = i64::from(split_column(grid.n(), gamma));
    let mut route = if s > 0 { strip(d1, 0, s, m, k) } else { Route::default() };
    if s < n {
        route.append(strip(d2, s, n, m, k));
    }
    Ok(route.finish(Construction::MixedDiscrete { d1, d2, gamma }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{l1_distance, q, verify_coverage, Region};
    use crate::paths::path_cost;

    #[test]
    fn type_one_six_by_six() {
        let g = GridSpec::new(6, 6).unwrap();
        let p = build_discrete_up_down(1, &g, 1).unwrap();
        let c = path_cost(&p);
        assert_eq!((c.length, c.stops), (24.0, 21.0));
        let xs: alloc::collections::BTreeSet<_> = p.stops.iter().map(|s| s.x).collect();
        assert_eq!(xs.into_iter().collect::<Vec<_>>(), [q(0, 1), q(3, 1), q(6, 1)]);
        assert!(verify_coverage(&p.stops, &g, Region::Lattice, q(1, 1)).unwrap());
    }

    #[test]
    fn even_type_geometry() {
        let g = GridSpec::new(12, 12).unwrap();
        let p = build_discrete_up_down(2, &g, 2).unwrap();
        let first: Vec<_> = p.stops.iter().filter(|s| s.x == q(0, 1)).collect();
        assert_eq!(first[1].y - first[0].y, q(2, 1));
        assert!(p.stops.iter().any(|s| s.x == q(4, 1)));
        assert!(!p.stops.iter().any(|s| s.x > q(0, 1) && s.x < q(4, 1)));

        let p = build_discrete_up_down(2, &g, 1).unwrap();
        assert!(p.stops.iter().any(|s| s.x == q(2, 1)));
        assert!(!p.stops.iter().any(|s| s.x == q(1, 1)));
    }

    #[test]
    fn lattice_examples() {
        let l = TessellationLattice::new(1).unwrap();
        assert_eq!(l.modulus(), 5);
        assert!(l.contains(0, 0) && l.contains(1, 2) && l.contains(2, -1));
        assert!(!l.contains(1, 0));
        assert_eq!(TessellationLattice::new(2).unwrap().modulus(), 13);
    }

    #[test]
    fn zigzag_interior_separation() {
        let l = TessellationLattice::new(2).unwrap();
        let mut pts = Vec::new();
        for a in -8..=8 {
            for b in -8..=8 {
                if l.contains(a, b) {
                    pts.push(Point::int(a, b));
                }
            }
        }
        for (i, p) in pts.iter().enumerate() {
            for r in &pts[i + 1..] {
                assert!(l1_distance(p, r) >= q(5, 1));
            }
        }
    }

    #[test]
    fn zigzag_covers_ten_by_ten() {
        let g = GridSpec::new(10, 10).unwrap();
        let p = build_zigzag(&g, 1).unwrap();
        assert!(p.is_well_formed());
        assert!(verify_coverage(&p.stops, &g, Region::Lattice, q(1, 1)).unwrap());
    }

    #[test]
    fn mixed_discrete_examples() {
        let g = GridSpec::new(20, 20).unwrap();
        let p = build_mixed_discrete(2, 3, q(1, 2), &g, 1).unwrap();
        assert!(p.is_well_formed());
        assert!(verify_coverage(&p.stops, &g, Region::Lattice, q(1, 1)).unwrap());
        let pure = build_mixed_discrete(2, 3, q(0, 1), &g, 1).unwrap();
        assert_eq!(pure.stops, build_zigzag(&g, 1).unwrap().stops);
        assert!(build_mixed_discrete(1, 4, q(0, 1), &g, 2).is_err());
    }
}
