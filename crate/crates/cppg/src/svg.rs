//! SVG rendering of a covering path.
//!
//! 16 px per grid unit with a one-unit margin, scaled down so that neither
//! side exceeds 2000 px. The y axis points up. Output depends only on the
//! input, so identical requests give identical bytes.

use std::fmt::Write;

use cppg_core::optimizer::coverage_target;
use cppg_core::paths::CoveringPath;
use cppg_core::{GridSpec, Point, Variant};

/// Pixels per grid unit before downscaling.
pub const UNIT_PX: f64 = 16.0;
/// Largest width or height in pixels.
pub const MAX_PX: f64 = 2000.0;

struct Frame {
    scale: f64,
    m: f64,
}

impl Frame {
    fn x(&self, x: f64) -> f64 {
        (x + 1.0) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        (self.m - y + 1.0) * self.scale
    }

    fn point(&self, p: &Point) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (self.x(x), self.y(y))
    }
}

/// Renders grid lines, the route, one `circle.stop` per stop and, when
/// `diamonds` is set, the coverage ball around each stop.
pub fn render(path: &CoveringPath, grid: &GridSpec, variant: &Variant, diamonds: bool) -> String {
    let (n, m) = (f64::from(grid.n()), f64::from(grid.m()));
    let units = (n + 2.0).max(m + 2.0);
    let scale = UNIT_PX.min(MAX_PX / units);
    let frame = Frame { scale, m };
    let (width, height) = ((n + 2.0) * scale, (m + 2.0) * scale);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(
        s,
        "<title>{} k={} {} L={} T={}</title>",
        variant.kind.tag(),
        variant.k_rounded,
        path.construction,
        path.length(),
        path.stop_count()
    );
    let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{width:.2}\" height=\"{height:.2}\" fill=\"white\"/>");

    s.push_str("<g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n");
    for i in 0..=grid.n() {
        let x = frame.x(f64::from(i));
        let _ = writeln!(s, "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\"/>", frame.y(0.0), frame.y(m));
    }
    for j in 0..=grid.m() {
        let y = frame.y(f64::from(j));
        let _ = writeln!(s, "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\"/>", frame.x(0.0), frame.x(n));
    }
    s.push_str("</g>\n");

    if diamonds {
        let radius = cppg_core::geometry::ratio_f64(coverage_target(variant).1);
        s.push_str("<g class=\"coverage\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"none\">\n");
        for p in &path.stops {
            let (x, y) = p.to_f64();
            let _ = writeln!(
                s,
                "<polygon points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\"/>",
                frame.x(x),
                frame.y(y + radius),
                frame.x(x + radius),
                frame.y(y),
                frame.x(x),
                frame.y(y - radius),
                frame.x(x - radius),
                frame.y(y)
            );
        }
        s.push_str("</g>\n");
    }

    s.push_str("<polyline class=\"route\" fill=\"none\" stroke=\"#d0442a\" stroke-width=\"2\" points=\"");
    for (i, p) in path.waypoints.iter().enumerate() {
        let (x, y) = frame.point(p);
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x:.2},{y:.2}");
    }
    s.push_str("\"/>\n");

    let r = (scale * 0.25).max(1.0);
    s.push_str("<g fill=\"#1b1b1b\">\n");
    for p in &path.stops {
        let (x, y) = frame.point(p);
        let _ = writeln!(s, "<circle class=\"stop\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r:.2}\"/>");
    }
    s.push_str("</g>\n</svg>\n");
    s
}
