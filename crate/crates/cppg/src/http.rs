//! HTTP/JSON service for the explorer UI.
//!
//! `GET /api/solve`, `/api/frontier`, `/api/path.svg` and `/api/oracle` take
//! the same query parameters as the CLI flags and return the same bodies.
//! Handlers are stateless. Oracle runs go to a bounded blocking pool and stop
//! when the time budget runs out or the client goes away.

use std::net::SocketAddr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::extract::{Query, State};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use cppg_core::oracle::OracleLimits;
use tokio::sync::Semaphore;
use tower_http::cors::{AllowOrigin, CorsLayer};

use crate::api::{self, ApiError, ErrorKind};
use crate::request::{OracleRequest, Params, SolveRequest};

const JSON: &str = "application/json";
const SVG: &str = "image/svg+xml";

/// Service settings.
#[derive(Debug, Clone)]
pub struct ServiceConfig {
    /// Origin allowed by CORS; any origin when `None`.
    pub cors_origin: Option<String>,
    /// Concurrent oracle runs.
    pub oracle_workers: usize,
    /// Wall-clock budget per oracle run.
    pub oracle_budget: Duration,
    /// Largest oracle instance accepted.
    pub oracle_limits: OracleLimits,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            cors_origin: None,
            oracle_workers: std::thread::available_parallelism().map_or(2, |n| n.get().min(4)),
            oracle_budget: Duration::from_secs(10),
            oracle_limits: OracleLimits::default(),
        }
    }
}

#[derive(Clone)]
struct AppState {
    config: Arc<ServiceConfig>,
    oracle_pool: Arc<Semaphore>,
}

type RawQuery = Query<Vec<(String, String)>>;

fn params(Query(pairs): RawQuery) -> Params {
    pairs.into_iter().collect()
}

fn status(kind: ErrorKind) -> StatusCode {
    match kind {
        ErrorKind::Usage => StatusCode::BAD_REQUEST,
        ErrorKind::Limit => StatusCode::UNPROCESSABLE_ENTITY,
        ErrorKind::Solver => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

fn reply(result: Result<String, ApiError>, content_type: &'static str) -> Response {
    match result {
        Ok(body) => ([(header::CONTENT_TYPE, content_type)], body).into_response(),
        Err(e) => (status(e.kind), [(header::CONTENT_TYPE, JSON)], e.to_json()).into_response(),
    }
}

async fn blocking<F>(work: F) -> Result<String, ApiError>
where
    F: FnOnce() -> Result<String, ApiError> + Send + 'static,
{
    tokio::task::spawn_blocking(work).await.unwrap_or_else(|e| {
        Err(ApiError { kind: ErrorKind::Solver, field: None, message: format!("worker failed: {e}") })
    })
}

async fn with_request(query: RawQuery, content_type: &'static str, run: fn(&SolveRequest) -> Result<String, ApiError>) -> Response {
    let result = match SolveRequest::parse(&params(query)) {
        Ok(req) => blocking(move || run(&req)).await,
        Err(e) => Err(e),
    };
    reply(result, content_type)
}

async fn solve(query: RawQuery) -> Response {
    with_request(query, JSON, api::solve_json).await
}

async fn frontier(query: RawQuery) -> Response {
    with_request(query, JSON, api::frontier_json).await
}

async fn path_svg(query: RawQuery) -> Response {
    with_request(query, SVG, api::solve_svg).await
}

/// Raises the flag when dropped, i.e. when the request future is abandoned.
struct CancelOnDrop(Arc<AtomicBool>);

impl Drop for CancelOnDrop {
    fn drop(&mut self) {
        self.0.store(true, Ordering::Relaxed);
    }
}

async fn oracle(State(state): State<AppState>, query: RawQuery) -> Response {
    let req = match OracleRequest::parse(&params(query), state.config.oracle_limits, state.config.oracle_limits) {
        Ok(req) => req,
        Err(e) => return reply(Err(e), JSON),
    };
    let permit = state.oracle_pool.clone().acquire_owned().await.expect("pool is never closed");
    let flag = Arc::new(AtomicBool::new(false));
    let _guard = CancelOnDrop(flag.clone());
    let deadline = Instant::now() + state.config.oracle_budget;
    let result = blocking(move || {
        let _permit = permit;
        let mut cancel = || flag.load(Ordering::Relaxed) || Instant::now() >= deadline;
        api::oracle_json(&req, &mut cancel)
    })
    .await;
    reply(result, JSON)
}

/// Routes with CORS applied.
pub fn router(config: ServiceConfig) -> Router {
    let origin = match config.cors_origin.as_deref().map(HeaderValue::from_str) {
        Some(Ok(value)) => AllowOrigin::exact(value),
        _ => AllowOrigin::any(),
    };
    let cors = CorsLayer::new().allow_origin(origin).allow_methods([Method::GET]);
    let state = AppState { oracle_pool: Arc::new(Semaphore::new(config.oracle_workers.max(1))), config: Arc::new(config) };
    Router::new()
        .route("/api/solve", get(solve))
        .route("/api/frontier", get(frontier))
        .route("/api/path.svg", get(path_svg))
        .route("/api/oracle", get(oracle))
        .route("/api/health", get(|| async { "ok" }))
        .layer(cors)
        .with_state(state)
}

/// Binds `addr` and serves until the process ends.
pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(config)).await
}
