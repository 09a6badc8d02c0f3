//! Radius rounding and problem classification.
//!
//! Stops sit on lattice points, so the largest distance from an edge point to
//! its nearest stop is always an integer or a half-integer. A raw radius can
//! therefore be rounded down to `⌊2k⌋/2` without changing which stop sets
//! cover. An integral rounded radius is solved as the continuous problem
//! (cover the whole rectangle); a half-integral one as the discrete problem
//! (cover lattice points with radius `k − 1/2`).

use core::fmt;

use num_traits::Signed;

use crate::geometry::Rational;
use crate::{Error, Result};

/// Problem formulation selected for an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariantKind {
    /// Radius below one: every lattice point must be a stop.
    TrivialAllStops,
    /// Continuous stops covering the rectangle. Never produced by
    /// [`classify`]; callers opt in for bound comparisons.
    Relaxed,
    /// Lattice stops covering the rectangle with an integer radius.
    Continuous,
    /// Lattice stops covering lattice points with an integer radius.
    Discrete,
}

impl VariantKind {
    /// Short tag used in reports: `TRIVIAL`, `RC`, `C` or `D`.
    pub fn tag(self) -> &'static str {
        match self {
            VariantKind::TrivialAllStops => "TRIVIAL",
            VariantKind::Relaxed => "RC",
            VariantKind::Continuous => "C",
            VariantKind::Discrete => "D",
        }
    }
}

impl fmt::Display for VariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A classified instance radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variant {
    /// Selected formulation.
    pub kind: VariantKind,
    /// Radius after rounding down to a multiple of 1/2.
    pub k_rounded: Rational,
    /// Integer radius the formulation works with (0 for the trivial case).
    pub k_effective: u32,
}

impl Variant {
    /// The relaxed formulation with integer radius `k`.
    pub fn relaxed(k: u32) -> Result<Self> {
        Self::with_kind(VariantKind::Relaxed, k)
    }

    /// The continuous formulation with integer radius `k`.
    pub fn continuous(k: u32) -> Result<Self> {
        Self::with_kind(VariantKind::Continuous, k)
    }

    /// The discrete formulation with effective radius `k` (raw radius `k + 1/2`).
    pub fn discrete(k: u32) -> Result<Self> {
        Self::with_kind(VariantKind::Discrete, k)
    }

    fn with_kind(kind: VariantKind, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositiveRadius);
        }
        let base = Rational::from_integer(i64::from(k));
        let k_rounded = match kind {
            VariantKind::Discrete => base + Rational::new(1, 2),
            _ => base,
        };
        Ok(Self { kind, k_rounded, k_effective: k })
    }

    /// Number of lattice points one stop covers in the discrete formulation,
    /// `2k² + 2k + 1`.
    pub fn lattice_ball(&self) -> u64 {
        let k = u64::from(self.k_effective);
        2 * k * k + 2 * k + 1
    }

    /// Area one stop covers in the continuous formulations, `2k²`.
    pub fn area_ball(&self) -> u64 {
        let k = u64::from(self.k_effective);
        2 * k * k
    }
}

/// Rounds `k_raw` down to `⌊2k⌋/2` and picks the formulation.
pub fn classify(k_raw: Rational) -> Result<Variant> {
    if !k_raw.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let twice = (k_raw * 2).floor().to_integer();
    let k_rounded = Rational::new(twice, 2);
    if twice < 2 {
        return Ok(Variant { kind: VariantKind::TrivialAllStops, k_rounded, k_effective: 0 });
    }
    let k_effective = u32::try_from(twice / 2).map_err(|_| Error::OutOfRange {
        what: "k",
        detail: "radius too large",
    })?;
    let kind = if twice % 2 == 0 { VariantKind::Continuous } else { VariantKind::Discrete };
    Ok(Variant { kind, k_rounded, k_effective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::q;

    #[test]
    fn classify_examples() {
        let v = classify(q(17, 10)).unwrap();
        assert_eq!(v.kind, VariantKind::Discrete);
        assert_eq!(v.k_rounded, q(3, 2));
        assert_eq!(v.k_effective, 1);

        let v = classify(q(2, 1)).unwrap();
        assert_eq!(v.kind, VariantKind::Continuous);
        assert_eq!(v.k_effective, 2);

        let v = classify(q(4, 5)).unwrap();
        assert_eq!(v.kind, VariantKind::TrivialAllStops);
    }

    #[test]
    fn classify_boundaries() {
        assert_eq!(classify(q(1, 1)).unwrap().kind, VariantKind::Continuous);
        assert_eq!(classify(q(149, 100)).unwrap().kind, VariantKind::Continuous);
        assert_eq!(classify(q(3, 2)).unwrap().kind, VariantKind::Discrete);
        assert_eq!(classify(q(7, 2)).unwrap().k_effective, 3);
        assert_eq!(classify(q(0, 1)), Err(Error::NonPositiveRadius));
        assert_eq!(classify(q(-1, 2)), Err(Error::NonPositiveRadius));
    }

    #[test]
    fn ball_measures() {
        let d = Variant::discrete(1).unwrap();
        assert_eq!(d.lattice_ball(), 5);
        assert_eq!(d.k_rounded, q(3, 2));
        assert_eq!(Variant::continuous(3).unwrap().area_ball(), 18);
        assert!(Variant::relaxed(0).is_err());
    }
}
