//! Request handling shared by the CLI and the HTTP service. Every response
//! body is produced here, which keeps the two front ends byte-identical.

use std::fmt;

use cppg_core::optimizer::{pareto_report, path_covers, single_stop_covers};
use cppg_core::oracle::exact_pareto_cancellable;
use cppg_core::tradeoff::tradeoff_holds;
use cppg_core::paths::path_cost;
use cppg_core::{classify, solve, Error, GridSpec, Rational, Solution, VariantKind};
use serde::Serialize;

use crate::json::{FrontierDto, OracleDto, PathFile, SolutionDto, VerifyDto};
use crate::request::{OracleRequest, SolveRequest};
use crate::svg;

/// How a request failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or invalid input.
    Usage,
    /// The instance exceeds the oracle's limits or time budget.
    Limit,
    /// The engine failed on valid input.
    Solver,
}

/// Error with the offending parameter, when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApiError {
    /// Failure class.
    pub kind: ErrorKind,
    /// Parameter name.
    pub field: Option<&'static str>,
    /// Human-readable message.
    pub message: String,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    field: Option<&'static str>,
}

impl ApiError {
    /// Invalid parameter `field`.
    pub fn usage(field: &'static str, message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Usage, field: Some(field), message: message.into() }
    }

    /// `{"error": …, "field": …}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ErrorBody { error: &self.message, field: self.field }).expect("plain struct")
    }
}

impl fmt::Display for ApiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Some(field) => write!(f, "{field}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ApiError {}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::OracleLimit(what) => {
                let field = if what.contains("stop") { "max_stops" } else { "m" };
                Self { kind: ErrorKind::Limit, field: Some(field), message }
            }
            Error::Cancelled => {
                Self { kind: ErrorKind::Limit, field: Some("budget"), message: "oracle time budget exceeded".into() }
            }
            Error::InvalidWeights | Error::NonMonotoneObjective => Self::usage("alpha", message),
            Error::NonPositiveRadius => Self::usage("k", message),
            Error::EmptyGrid { .. } => Self::usage("m", message),
            _ => Self { kind: ErrorKind::Solver, field: None, message },
        }
    }
}

fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("DTOs serialize")
}

/// Solves a request.
pub fn solve_request(req: &SolveRequest) -> Result<Solution, ApiError> {
    Ok(solve(&req.grid, req.k, &req.objective.objective())?)
}

/// Solution JSON.
pub fn solve_json(req: &SolveRequest) -> Result<String, ApiError> {
    let solution = solve_request(req)?;
    let rendering = req.emit_svg.then(|| svg::render(&solution.path, &req.grid, &solution.variant, req.diamonds));
    Ok(to_string(&SolutionDto::new(&solution, &req.grid, req.objective, rendering)))
}

/// SVG rendering of the solved path.
pub fn solve_svg(req: &SolveRequest) -> Result<String, ApiError> {
    let solution = solve_request(req)?;
    Ok(svg::render(&solution.path, &req.grid, &solution.variant, req.diamonds))
}

/// Frontier JSON: both curves and the constructed sweep.
pub fn frontier_json(req: &SolveRequest) -> Result<String, ApiError> {
    let report = pareto_report(&req.grid, req.k, req.sweep)?;
    let single = single_stop_covers(&req.grid, &report.variant)?;
    Ok(to_string(&FrontierDto::new(&report, &req.grid, single)))
}

/// Exact frontier JSON; `cancel` is polled during enumeration.
pub fn oracle_json(req: &OracleRequest, cancel: &mut dyn FnMut() -> bool) -> Result<String, ApiError> {
    let variant = classify(req.k)?;
    if !matches!(variant.kind, VariantKind::Continuous | VariantKind::Discrete) {
        return Err(ApiError::usage("k", "the oracle needs k >= 1"));
    }
    let frontier = exact_pareto_cancellable(&req.grid, &variant, req.limits, cancel)?;
    Ok(to_string(&OracleDto {
        variant: variant.kind.tag(),
        k_effective: variant.k_effective,
        grid: (&req.grid).into(),
        max_stops: req.limits.max_stops,
        frontier: frontier.iter().map(|c| [c.length as u64, c.stops as u64]).collect(),
    }))
}

/// Coverage and trade-off verdict for a path file. `grid` overrides the
/// grid recorded in the file.
pub fn verify_json(text: &str, k: Rational, grid: Option<GridSpec>) -> Result<String, ApiError> {
    let file: PathFile = serde_json::from_str(text).map_err(|e| ApiError::usage("path", e.to_string()))?;
    let grid = match (grid, file.grid) {
        (Some(g), _) => g,
        (None, Some(g)) => GridSpec::new(g.m, g.n).map_err(|e| ApiError::usage("path", e.to_string()))?,
        (None, None) => return Err(ApiError::usage("m", "path file has no grid; pass --m and --n")),
    };
    let path = file.into_path().map_err(|e| ApiError::usage("path", e))?;
    if path.stops.is_empty() {
        return Err(ApiError::usage("path", "path has no stops"));
    }
    let variant = classify(k)?;
    let mut out = VerifyDto::header(&variant, &grid, &path);
    out.well_formed = path.is_well_formed();
    out.covered = path.stops.iter().all(|p| grid.contains(p)) && path_covers(&path, &grid, &variant)?;
    out.tradeoff_ok = match variant.kind {
        VariantKind::TrivialAllStops => None,
        _ => tradeoff_holds(path_cost(&path), &grid, &variant).ok(),
    };
    Ok(to_string(&out))
}
