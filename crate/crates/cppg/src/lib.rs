//! Command line tool and HTTP service for covering paths on grids.
//!
//! [`request`] parses raw parameters, [`api`] runs the engine and produces
//! every response body, [`json`] and [`svg`] define the output formats, and
//! [`cli`] and [`http`] are thin front ends over [`api`].

#![warn(missing_docs)]

pub mod api;
pub mod cli;
pub mod http;
pub mod json;
pub mod request;
pub mod svg;
