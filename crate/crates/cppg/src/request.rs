//! Parsing of instance parameters shared by the CLI and the HTTP service.
//!
//! Both front ends collect their inputs into a [`Params`] map of raw strings
//! and go through the same parsers, so they accept and reject the same values.

use std::collections::BTreeMap;

use cppg_core::oracle::OracleLimits;
use cppg_core::{GridSpec, Objective, Rational};

use crate::api::ApiError;

/// Raw `name → value` parameters.
pub type Params = BTreeMap<String, String>;

/// Largest accepted grid area.
pub const MAX_AREA: u64 = 1_000_000;
/// Largest accepted radius.
pub const MAX_RADIUS: i64 = 10_000;
/// Largest accepted frontier sweep.
pub const MAX_SWEEP: usize = 64;
/// Sweep used when none is given.
pub const DEFAULT_SWEEP: usize = 5;

/// Parses a positive radius written as an integer, a fraction `p/q` or a
/// decimal `a.b`.
pub fn parse_k(raw: &str) -> Result<Rational, String> {
    let s = raw.trim();
    let bad = || format!("cannot parse radius {raw:?}");
    let k = if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err("radius denominator is zero".into());
        }
        Rational::new(p, q)
    } else if let Some((int, frac)) = s.split_once('.') {
        let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
        let (neg, int) = match int.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int),
        };
        if !digits(int) || !digits(frac) || (int.is_empty() && frac.is_empty()) || frac.len() > 12 {
            return Err(bad());
        }
        let scale = 10i64.pow(frac.len() as u32);
        let whole: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let part: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let value = whole.checked_mul(scale).and_then(|w| w.checked_add(part)).ok_or_else(bad)?;
        Rational::new(if neg { -value } else { value }, scale)
    } else {
        Rational::from_integer(s.parse().map_err(|_| bad())?)
    };
    if k <= Rational::from_integer(0) {
        return Err("radius must be positive".into());
    }
    if k > Rational::from_integer(MAX_RADIUS) {
        return Err(format!("radius must be at most {MAX_RADIUS}"));
    }
    Ok(k)
}

/// Objective as requested by a client.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ObjectiveSpec {
    /// `alpha·L + beta·T`.
    Linear {
        /// Weight on length.
        alpha: f64,
        /// Weight on stops.
        beta: f64,
    },
    /// Shortest path.
    MinLength,
    /// Fewest stops.
    MinStops,
}

impl ObjectiveSpec {
    /// The engine objective.
    pub fn objective(&self) -> Objective<'static> {
        match *self {
            ObjectiveSpec::Linear { alpha, beta } => Objective::Linear { alpha, beta },
            ObjectiveSpec::MinLength => Objective::MinLength,
            ObjectiveSpec::MinStops => Objective::MinStops,
        }
    }
}

/// A parsed instance: grid, raw radius and objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveRequest {
    /// Grid, canonicalized so that `m ≥ n`.
    pub grid: GridSpec,
    /// Raw coverage radius.
    pub k: Rational,
    /// Objective.
    pub objective: ObjectiveSpec,
    /// Shares per segment in frontier sweeps.
    pub sweep: usize,
    /// Embed an SVG rendering in solve output.
    pub emit_svg: bool,
    /// Draw coverage diamonds in renderings.
    pub diamonds: bool,
}

fn field<'a>(params: &'a Params, name: &'static str) -> Result<&'a str, ApiError> {
    params.get(name).map(String::as_str).ok_or_else(|| ApiError::usage(name, format!("missing parameter {name}")))
}

fn dimension(params: &Params, name: &'static str) -> Result<u32, ApiError> {
    let raw = field(params, name)?;
    match raw.trim().parse::<u32>() {
        Ok(0) => Err(ApiError::usage(name, format!("{name} must be positive"))),
        Ok(v) => Ok(v),
        Err(_) => Err(ApiError::usage(name, format!("{name} must be a positive integer, got {raw:?}"))),
    }
}

fn weight(params: &Params, name: &'static str) -> Result<Option<f64>, ApiError> {
    let Some(raw) = params.get(name) else {
        return Ok(None);
    };
    match raw.trim().parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(Some(v)),
        _ => Err(ApiError::usage(name, format!("{name} must be a finite non-negative number"))),
    }
}

fn flag(params: &Params, name: &'static str) -> Result<bool, ApiError> {
    match params.get(name).map(|s| s.trim()) {
        None | Some("false") | Some("0") => Ok(false),
        Some("true") | Some("1") | Some("") => Ok(true),
        Some(other) => Err(ApiError::usage(name, format!("{name} must be true or false, got {other:?}"))),
    }
}

fn count(params: &Params, name: &'static str, default: usize, lo: usize, hi: usize) -> Result<usize, ApiError> {
    let Some(raw) = params.get(name) else {
        return Ok(default);
    };
    match raw.trim().parse::<usize>() {
        Ok(v) if (lo..=hi).contains(&v) => Ok(v),
        _ => Err(ApiError::usage(name, format!("{name} must be an integer in [{lo}, {hi}]"))),
    }
}

/// Parses the grid dimensions.
pub fn parse_grid(params: &Params) -> Result<GridSpec, ApiError> {
    let m = dimension(params, "m")?;
    let n = dimension(params, "n")?;
    if u64::from(m) * u64::from(n) > MAX_AREA {
        return Err(ApiError::usage("m", format!("grid area must be at most {MAX_AREA}")));
    }
    GridSpec::new(m, n).map_err(|e| ApiError::usage("m", e.to_string()))
}

/// Parses the radius.
pub fn parse_radius(params: &Params) -> Result<Rational, ApiError> {
    parse_k(field(params, "k")?).map_err(|e| ApiError::usage("k", e))
}

/// Parses `alpha`/`beta` or `min`; with none given the objective is `L + T`.
pub fn parse_objective(params: &Params) -> Result<ObjectiveSpec, ApiError> {
    let alpha = weight(params, "alpha")?;
    let beta = weight(params, "beta")?;
    if let Some(min) = params.get("min") {
        if alpha.is_some() || beta.is_some() {
            return Err(ApiError::usage("min", "min cannot be combined with alpha/beta"));
        }
        return match min.trim() {
            "length" => Ok(ObjectiveSpec::MinLength),
            "stops" => Ok(ObjectiveSpec::MinStops),
            other => Err(ApiError::usage("min", format!("min must be length or stops, got {other:?}"))),
        };
    }
    let (alpha, beta) = (alpha.unwrap_or(1.0), beta.unwrap_or(1.0));
    if alpha + beta <= 0.0 {
        return Err(ApiError::usage("alpha", "alpha and beta cannot both be zero"));
    }
    Ok(ObjectiveSpec::Linear { alpha, beta })
}

impl SolveRequest {
    /// Parses and validates every parameter of a solve, frontier or rendering request.
    pub fn parse(params: &Params) -> Result<Self, ApiError> {
        Ok(Self {
            grid: parse_grid(params)?,
            k: parse_radius(params)?,
            objective: parse_objective(params)?,
            sweep: count(params, "sweep", DEFAULT_SWEEP, 2, MAX_SWEEP)?,
            emit_svg: flag(params, "emit_svg")?,
            diamonds: flag(params, "diamonds")?,
        })
    }
}

/// A parsed exact-oracle request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRequest {
    /// Grid.
    pub grid: GridSpec,
    /// Raw radius.
    pub k: Rational,
    /// Enumeration limits.
    pub limits: OracleLimits,
}

impl OracleRequest {
    /// Parses `m`, `n`, `k` and optional `max_points`/`max_stops`, which
    /// default to `default` and may not exceed `ceiling`.
    pub fn parse(params: &Params, default: OracleLimits, ceiling: OracleLimits) -> Result<Self, ApiError> {
        let grid = parse_grid(params)?;
        let k = parse_radius(params)?;
        let max_lattice_points =
            count(params, "max_points", default.max_lattice_points, 1, ceiling.max_lattice_points)?;
        let max_stops = count(params, "max_stops", default.max_stops, 1, ceiling.max_stops)?;
        Ok(Self { grid, k, limits: OracleLimits { max_lattice_points, max_stops } })
    }
}
