//! Command line front end.
//!
//! Instance flags are collected as raw strings and parsed by the same code as
//! HTTP query parameters. Exit codes: 0 on success, 2 on usage errors, 1 when
//! the solver fails.

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use cppg_core::oracle::OracleLimits;

use crate::api::{self, ApiError, ErrorKind};
use crate::http::{self, ServiceConfig};
use crate::request::{parse_grid, parse_radius, OracleRequest, Params, SolveRequest};

#[derive(Debug, Parser)]
#[command(name = "cppg", version, about = "Covering paths on grids: solve, bound, verify and render")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Instance {
    /// Grid rows.
    #[arg(long)]
    m: String,
    /// Grid columns.
    #[arg(long)]
    n: String,
    /// Coverage radius, e.g. 3, 3/2 or 1.5.
    #[arg(long)]
    k: String,
}

#[derive(Debug, Args)]
struct ObjectiveArgs {
    /// Weight on path length.
    #[arg(long)]
    alpha: Option<String>,
    /// Weight on stop count.
    #[arg(long)]
    beta: Option<String>,
    /// Single objective: length or stops.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    min: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance and print the solution as JSON.
    Solve {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        objective: ObjectiveArgs,
        /// Embed an SVG rendering in the output.
        #[arg(long)]
        svg: bool,
        /// Draw coverage diamonds in the embedded rendering.
        #[arg(long)]
        diamonds: bool,
    },
    /// Print lower and upper trade-off curves and a construction sweep.
    Frontier {
        #[command(flatten)]
        instance: Instance,
        /// Shares per segment between consecutive pure constructions.
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Check a path file for coverage and the trade-off constraint.
    Verify {
        /// Path or solution JSON.
        #[arg(long)]
        path: PathBuf,
        /// Coverage radius.
        #[arg(long)]
        k: String,
        /// Grid rows, overriding the file.
        #[arg(long, requires = "n")]
        m: Option<String>,
        /// Grid columns, overriding the file.
        #[arg(long, requires = "m")]
        n: Option<String>,
    },
    /// Exact Pareto frontier of a tiny instance.
    Oracle {
        #[command(flatten)]
        instance: Instance,
        /// Largest (m+1)(n+1) accepted.
        #[arg(long)]
        max_points: Option<String>,
        /// Largest stop count enumerated.
        #[arg(long)]
        max_stops: Option<String>,
    },
    /// Render the solved path as SVG.
    Svg {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        objective: ObjectiveArgs,
        /// Draw coverage diamonds.
        #[arg(long)]
        diamonds: bool,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Serve the HTTP API.
    Serve {
        /// Address to listen on.
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: SocketAddr,
        /// Origin allowed by CORS; any when absent.
        #[arg(long)]
        cors_origin: Option<String>,
        /// Concurrent oracle runs.
        #[arg(long, default_value_t = 2)]
        oracle_workers: usize,
        /// Time budget per oracle run in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        oracle_budget_ms: u64,
    },
}

fn put(params: &mut Params, name: &str, value: Option<&String>) {
    if let Some(v) = value {
        params.insert(name.to_owned(), v.clone());
    }
}

impl Instance {
    fn params(&self) -> Params {
        let mut p = Params::new();
        put(&mut p, "m", Some(&self.m));
        put(&mut p, "n", Some(&self.n));
        put(&mut p, "k", Some(&self.k));
        p
    }
}

impl ObjectiveArgs {
    fn add(&self, p: &mut Params) {
        put(p, "alpha", self.alpha.as_ref());
        put(p, "beta", self.beta.as_ref());
        put(p, "min", self.min.as_ref());
    }
}

fn flag(p: &mut Params, name: &str, on: bool) {
    if on {
        p.insert(name.to_owned(), "true".to_owned());
    }
}

enum Output {
    Stdout(String),
    File(PathBuf, String),
    Served,
}

fn execute(command: Command) -> Result<Output, ApiError> {
    match command {
        Command::Solve { instance, objective, svg, diamonds } => {
            let mut p = instance.params();
            objective.add(&mut p);
            flag(&mut p, "emit_svg", svg);
            flag(&mut p, "diamonds", diamonds);
            api::solve_json(&SolveRequest::parse(&p)?).map(Output::Stdout)
        }
        Command::Frontier { instance, sweep } => {
            let mut p = instance.params();
            put(&mut p, "sweep", sweep.as_ref());
            api::frontier_json(&SolveRequest::parse(&p)?).map(Output::Stdout)
        }
        Command::Verify { path, k, m, n } => {
            let mut p = Params::new();
            put(&mut p, "k", Some(&k));
            put(&mut p, "m", m.as_ref());
            put(&mut p, "n", n.as_ref());
            let k = parse_radius(&p)?;
            let grid = if m.is_some() { Some(parse_grid(&p)?) } else { None };
            let text = std::fs::read_to_string(&path)
                .map_err(|e| ApiError::usage("path", format!("{}: {e}", path.display())))?;
            api::verify_json(&text, k, grid).map(Output::Stdout)
        }
        Command::Oracle { instance, max_points, max_stops } => {
            let mut p = instance.params();
            put(&mut p, "max_points", max_points.as_ref());
            put(&mut p, "max_stops", max_stops.as_ref());
            let req = OracleRequest::parse(&p, OracleLimits::default(), OracleLimits::CEILING)?;
            api::oracle_json(&req, &mut || false).map(Output::Stdout)
        }
        Command::Svg { instance, objective, diamonds, out } => {
            let mut p = instance.params();
            objective.add(&mut p);
            flag(&mut p, "diamonds", diamonds);
            let svg = api::solve_svg(&SolveRequest::parse(&p)?)?;
            Ok(match out {
                Some(file) => Output::File(file, svg),
                None => Output::Stdout(svg),
            })
        }
        Command::Serve { bind, cors_origin, oracle_workers, oracle_budget_ms } => {
            let config = ServiceConfig {
                cors_origin,
                oracle_workers,
                oracle_budget: Duration::from_millis(oracle_budget_ms),
                ..ServiceConfig::default()
            };
            let runtime = tokio::runtime::Runtime::new()
                .map_err(|e| ApiError { kind: ErrorKind::Solver, field: None, message: e.to_string() })?;
            runtime
                .block_on(http::serve(bind, config))
                .map_err(|e| ApiError::usage("bind", e.to_string()))?;
            Ok(Output::Served)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let written = match execute(cli.command) {
        Ok(Output::Stdout(body)) => writeln!(out, "{body}"),
        Ok(Output::File(path, body)) => match std::fs::write(&path, body) {
            Ok(()) => Ok(()),
            Err(e) => {
                let e = ApiError::usage("out", format!("{}: {e}", path.display()));
                let _ = writeln!(err, "{}", e.to_json());
                return 2;
            }
        },
        Ok(Output::Served) => Ok(()),
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_json());
            return match e.kind {
                ErrorKind::Usage => 2,
                ErrorKind::Limit | ErrorKind::Solver => 1,
            };
        }
    };
    i32::from(written.is_err())
}
