//! Wire format for solutions, paths, curves and frontiers.
//!
//! Exact rationals travel as `"p/q"` strings in a `*_exact` field next to the
//! float field of the same name.

use cppg_core::optimizer::{ParetoReport, SweepPoint};
use cppg_core::paths::CoveringPath;
use cppg_core::tradeoff::TradeoffCurve;
use cppg_core::{Construction, CostPair, GridSpec, Guarantee, Point, Rational, Solution, Variant};
use serde::{Deserialize, Serialize};

use crate::request::ObjectiveSpec;

/// `"p/q"`, always with an explicit denominator.
pub fn exact(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a plain integer.
pub fn parse_exact(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.trim().parse().ok().map(Rational::from_integer),
    }
}

fn float(r: Rational) -> f64 {
    cppg_core::geometry::ratio_f64(r)
}

fn xy(p: &Point) -> [f64; 2] {
    [float(p.x), float(p.y)]
}

fn xy_exact(p: &Point) -> [String; 2] {
    [exact(p.x), exact(p.y)]
}

/// Grid dimensions after canonicalization (`m ≥ n`, x along `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDto {
    /// Long side.
    pub m: u32,
    /// Short side.
    pub n: u32,
}

impl From<&GridSpec> for GridDto {
    fn from(g: &GridSpec) -> Self {
        Self { m: g.m(), n: g.n() }
    }
}

/// Construction parameters; absent ones are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ParamsDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_exact: Option<String>,
}

impl From<&Construction> for ParamsDto {
    fn from(c: &Construction) -> Self {
        let int = |d: u32| Rational::from_integer(i64::from(d));
        let mut p = ParamsDto::default();
        let set_d = |d: Rational, p: &mut ParamsDto| {
            p.d = Some(float(d));
            p.d_exact = Some(exact(d));
        };
        match *c {
            Construction::UpDown { d } => set_d(d, &mut p),
            Construction::Discrete { d } => set_d(int(d), &mut p),
            Construction::Mixed { d, gamma } => {
                set_d(int(d), &mut p);
                p.gamma = Some(float(gamma));
                p.gamma_exact = Some(exact(gamma));
            }
            Construction::MixedDiscrete { d1, d2, gamma } => {
                p.d1 = Some(d1);
                p.d2 = Some(d2);
                p.gamma = Some(float(gamma));
                p.gamma_exact = Some(exact(gamma));
            }
            Construction::Trivial | Construction::SingleStop | Construction::Zigzag => {}
        }
        p
    }
}

/// A covering path with its cost.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathDto {
    construction: &'static str,
    label: String,
    params: ParamsDto,
    grid: GridDto,
    #[serde(rename = "L")]
    length: f64,
    #[serde(rename = "L_exact")]
    length_exact: String,
    #[serde(rename = "T")]
    stops_count: usize,
    stops: Vec<[f64; 2]>,
    stops_exact: Vec<[String; 2]>,
    waypoints: Vec<[f64; 2]>,
    waypoints_exact: Vec<[String; 2]>,
}

impl PathDto {
    /// Serializable view of a path on `grid`.
    pub fn new(path: &CoveringPath, grid: &GridSpec) -> Self {
        let length = path.length();
        Self {
            construction: path.construction.tag(),
            label: path.construction.to_string(),
            params: ParamsDto::from(&path.construction),
            grid: grid.into(),
            length: float(length),
            length_exact: exact(length),
            stops_count: path.stop_count(),
            stops: path.stops.iter().map(xy).collect(),
            stops_exact: path.stops.iter().map(xy_exact).collect(),
            waypoints: path.waypoints.iter().map(xy).collect(),
            waypoints_exact: path.waypoints.iter().map(xy_exact).collect(),
        }
    }
}

/// `(L, T)` as an object.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostDto {
    #[serde(rename = "L")]
    length: f64,
    #[serde(rename = "T")]
    stops: f64,
}

impl From<CostPair> for CostDto {
    fn from(c: CostPair) -> Self {
        Self { length: c.length, stops: c.stops }
    }
}

/// Objective echo.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ObjectiveDto {
    /// Linear weights.
    Linear {
        /// Weight on length.
        alpha: f64,
        /// Weight on stops.
        beta: f64,
    },
    /// Single objective.
    Min {
        /// `length` or `stops`.
        min: &'static str,
    },
}

impl From<ObjectiveSpec> for ObjectiveDto {
    fn from(o: ObjectiveSpec) -> Self {
        match o {
            ObjectiveSpec::Linear { alpha, beta } => ObjectiveDto::Linear { alpha, beta },
            ObjectiveSpec::MinLength => ObjectiveDto::Min { min: "length" },
            ObjectiveSpec::MinStops => ObjectiveDto::Min { min: "stops" },
        }
    }
}

/// Approximation guarantee; `ratio` is null when none applies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GuaranteeDto {
    kind: &'static str,
    ratio: Option<f64>,
    base: f64,
    slack: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
}

impl From<&Guarantee> for GuaranteeDto {
    fn from(g: &Guarantee) -> Self {
        let ratio = g.ratio();
        match *g {
            Guarantee::Exact => Self { kind: "exact", ratio, base: 1.0, slack: 0.0, reason: None },
            Guarantee::Bounded { base, slack } => Self { kind: "bounded", ratio, base, slack, reason: None },
            Guarantee::Unguaranteed { base, slack, reason } => {
                Self { kind: "unguaranteed", ratio, base, slack, reason: Some(reason) }
            }
        }
    }
}

/// A solved instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionDto {
    variant: &'static str,
    k_rounded: f64,
    k_rounded_exact: String,
    k_effective: u32,
    objective: ObjectiveDto,
    d_star: f64,
    bound: CostDto,
    lower_bound_cost: f64,
    observed_ratio: f64,
    guarantee: GuaranteeDto,
    #[serde(flatten)]
    path: PathDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    svg: Option<String>,
}

impl SolutionDto {
    /// Serializable view of a solution.
    pub fn new(s: &Solution, grid: &GridSpec, objective: ObjectiveSpec, svg: Option<String>) -> Self {
        Self {
            variant: s.variant.kind.tag(),
            k_rounded: float(s.variant.k_rounded),
            k_rounded_exact: exact(s.variant.k_rounded),
            k_effective: s.variant.k_effective,
            objective: objective.into(),
            d_star: s.d_star,
            bound: s.bound.into(),
            lower_bound_cost: s.lower_bound_cost,
            observed_ratio: s.observed_ratio,
            guarantee: (&s.guarantee).into(),
            path: PathDto::new(&s.path, grid),
            svg,
        }
    }
}

/// A trade-off curve as an `(L, T)` polyline plus its terminal ray.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveDto {
    variant: &'static str,
    role: &'static str,
    k: u32,
    rhs: f64,
    degenerate: bool,
    smooth: bool,
    vertices: Vec<[f64; 2]>,
    #[serde(rename = "ray_T")]
    ray_stops: f64,
    single_stop_feasible: bool,
}

impl CurveDto {
    /// Serializable view of a curve.
    pub fn new(c: &TradeoffCurve, single_stop_feasible: bool) -> Self {
        Self {
            variant: c.kind.tag(),
            role: c.role.tag(),
            k: c.k,
            rhs: c.rhs,
            degenerate: c.degenerate,
            smooth: c.is_smooth(),
            vertices: c.vertices.iter().map(|v| [v.length, v.stops()]).collect(),
            ray_stops: c.ray_stops(),
            single_stop_feasible,
        }
    }
}

/// A constructed point of a frontier sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepDto {
    construction: &'static str,
    label: String,
    params: ParamsDto,
    #[serde(rename = "L")]
    length: f64,
    #[serde(rename = "T")]
    stops: f64,
}

impl From<&SweepPoint> for SweepDto {
    fn from(p: &SweepPoint) -> Self {
        Self {
            construction: p.construction.tag(),
            label: p.construction.to_string(),
            params: (&p.construction).into(),
            length: p.cost.length,
            stops: p.cost.stops,
        }
    }
}

/// Lower and upper curves plus constructed points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrontierDto {
    variant: &'static str,
    k_rounded: f64,
    k_rounded_exact: String,
    k_effective: u32,
    grid: GridDto,
    single_stop_feasible: bool,
    lower: Option<CurveDto>,
    upper: Option<CurveDto>,
    points: Vec<SweepDto>,
}

impl FrontierDto {
    /// Serializable view of a report.
    pub fn new(r: &ParetoReport, grid: &GridSpec, single_stop_feasible: bool) -> Self {
        let curve = |c: &Option<TradeoffCurve>| c.as_ref().map(|c| CurveDto::new(c, single_stop_feasible));
        Self {
            variant: r.variant.kind.tag(),
            k_rounded: float(r.variant.k_rounded),
            k_rounded_exact: exact(r.variant.k_rounded),
            k_effective: r.variant.k_effective,
            grid: grid.into(),
            single_stop_feasible,
            lower: curve(&r.lower),
            upper: curve(&r.upper),
            points: r.points.iter().map(SweepDto::from).collect(),
        }
    }
}

/// Exact frontier of a tiny instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleDto {
    /// Variant tag.
    pub variant: &'static str,
    /// Effective radius.
    pub k_effective: u32,
    /// Grid.
    pub grid: GridDto,
    /// Largest stop count enumerated.
    pub max_stops: usize,
    /// `[L, T]` pairs sorted by `T`.
    pub frontier: Vec<[u64; 2]>,
}

/// Verdict on a path file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyDto {
    /// Variant tag.
    pub variant: &'static str,
    /// Effective radius.
    pub k_effective: u32,
    /// Grid.
    pub grid: GridDto,
    /// Path length.
    #[serde(rename = "L")]
    pub length: f64,
    /// Exact path length.
    #[serde(rename = "L_exact")]
    pub length_exact: String,
    /// Stop count.
    #[serde(rename = "T")]
    pub stops: usize,
    /// Every stop lies on the route.
    pub well_formed: bool,
    /// The stops cover what the variant requires.
    pub covered: bool,
    /// `(L, T)` satisfies the variant's trade-off constraint; null when the
    /// constraint does not apply.
    pub tradeoff_ok: Option<bool>,
}

impl VerifyDto {
    /// Header fields shared by every verdict.
    pub fn header(variant: &Variant, grid: &GridSpec, path: &CoveringPath) -> Self {
        let length = path.length();
        Self {
            variant: variant.kind.tag(),
            k_effective: variant.k_effective,
            grid: grid.into(),
            length: float(length),
            length_exact: exact(length),
            stops: path.stop_count(),
            well_formed: false,
            covered: false,
            tradeoff_ok: None,
        }
    }
}

/// A path file: either a path or a whole solution. Exact coordinates win
/// over floats when both are present.
#[derive(Debug, Clone, Deserialize)]
pub struct PathFile {
    /// Grid the path was built for.
    pub grid: Option<GridDto>,
    /// Route corners.
    pub waypoints: Vec<[f64; 2]>,
    /// Exact route corners.
    pub waypoints_exact: Option<Vec<[String; 2]>>,
    /// Stops.
    pub stops: Vec<[f64; 2]>,
    /// Exact stops.
    pub stops_exact: Option<Vec<[String; 2]>>,
}

const FLOAT_DENOM: i64 = 1 << 20;

fn from_float(v: f64) -> Option<Rational> {
    let scaled = (v * FLOAT_DENOM as f64).round();
    let ok = v.is_finite() && scaled.abs() < 9.0e15 && (scaled / FLOAT_DENOM as f64 - v).abs() <= 1e-9;
    ok.then(|| Rational::new(scaled as i64, FLOAT_DENOM))
}

fn points(floats: &[[f64; 2]], exact: Option<&[[String; 2]]>, what: &str) -> Result<Vec<Point>, String> {
    match exact {
        Some(list) => list
            .iter()
            .map(|[x, y]| match (parse_exact(x), parse_exact(y)) {
                (Some(x), Some(y)) => Ok(Point::new(x, y)),
                _ => Err(format!("{what}: bad exact coordinate [{x:?}, {y:?}]")),
            })
            .collect(),
        None => floats
            .iter()
            .map(|&[x, y]| match (from_float(x), from_float(y)) {
                (Some(x), Some(y)) => Ok(Point::new(x, y)),
                _ => Err(format!("{what}: coordinate [{x}, {y}] is not a multiple of 2^-20")),
            })
            .collect(),
    }
}

impl PathFile {
    /// Exact waypoints and stops.
    pub fn into_path(self) -> Result<CoveringPath, String> {
        if self.stops_exact.as_ref().is_some_and(|s| s.len() != self.stops.len()) {
            return Err("stops and stops_exact differ in length".into());
        }
        let waypoints = points(&self.waypoints, self.waypoints_exact.as_deref(), "waypoints")?;
        let stops = points(&self.stops, self.stops_exact.as_deref(), "stops")?;
        Ok(CoveringPath { waypoints, stops, construction: Construction::Trivial })
    }
}
