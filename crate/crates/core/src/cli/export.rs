//! Wireframe OBJ and lens-grid SVG writers.

use std::fmt::Write;

use crate::extract::{key_points, AffineFrustum, EDGES};
use crate::linalg::{Plane, Vec3};
use crate::transform::TileGrid;

/// OBJ text with 8 vertices and 12 line records per frustum.
///
/// Frusta with a corner at infinity are skipped and named in the returned list.
pub fn frusta_to_obj(frusta: &[(String, AffineFrustum)]) -> (String, Vec<String>) {
    let mut out = String::new();
    let mut skipped = Vec::new();
    let mut base = 0;
    for (name, f) in frusta {
        let Some(corners) = key_points(f).finite_corners() else {
            skipped.push(name.clone());
            continue;
        };
        writeln!(out, "o {name}").unwrap();
        for c in corners {
            writeln!(out, "v {} {} {}", c.x, c.y, c.z).unwrap();
        }
        for (a, b) in EDGES {
            writeln!(out, "l {} {}", base + a + 1, base + b + 1).unwrap();
        }
        base += 8;
    }
    (out, skipped)
}

/// Orthonormal in-plane axes for a plane's normal.
pub fn plane_basis(p: Plane) -> Option<(Vec3, Vec3)> {
    let n = p.normal().normalized()?;
    let helper = if n.x.abs() < 0.9 { Vec3::new(1.0, 0.0, 0.0) } else { Vec3::new(0.0, 1.0, 0.0) };
    let u = helper.cross(n).normalized()?;
    Some((u, n.cross(u)))
}

fn grid_paths(g: &TileGrid, to2d: &dyn Fn(Vec3) -> (f64, f64)) -> Vec<String> {
    if g.rows == 0 || g.cols == 0 {
        return Vec::new();
    }
    let line = |pts: Vec<Vec3>| {
        let mut d = String::new();
        for (i, p) in pts.into_iter().enumerate() {
            let (x, y) = to2d(p);
            write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, x, y).unwrap();
        }
        d
    };
    let mut paths = Vec::new();
    for r in 0..=g.rows {
        paths.push(line((0..=g.cols).map(|c| g.point(r, c)).collect()));
    }
    for c in 0..=g.cols {
        paths.push(line((0..=g.rows).map(|r| g.point(r, c)).collect()));
    }
    paths
}

/// SVG 1.1 with the original grid in blue and the warped grid in red,
/// drawn in the plane's own axes with a 5% margin.
pub fn grids_to_svg(plane: Plane, original: &TileGrid, warped: &TileGrid) -> String {
    let (u, v) = plane_basis(plane).unwrap_or((Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0)));
    let to2d = |p: Vec3| (p.dot(u), -p.dot(v));
    let a = grid_paths(original, &to2d);
    let b = grid_paths(warped, &to2d);

    let pts: Vec<(f64, f64)> = if a.is_empty() {
        Vec::new()
    } else {
        original.points.iter().chain(&warped.points).map(|&p| to2d(p)).collect()
    };
    let (x0, y0, x1, y1) = pts.iter().fold((f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY), |acc, &(x, y)| {
        (acc.0.min(x), acc.1.min(y), acc.2.max(x), acc.3.max(y))
    });
    let (vx, vy, vw, vh) = if pts.is_empty() {
        (0.0, 0.0, 1.0, 1.0)
    } else {
        let (w, h) = ((x1 - x0).max(1e-12), (y1 - y0).max(1e-12));
        (x0 - 0.05 * w, y0 - 0.05 * h, 1.1 * w, 1.1 * h)
    };
    let stroke = 0.002 * vw.max(vh);

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{vx} {vy} {vw} {vh}">"#).unwrap();
    for (paths, colour, id) in [(&a, "#1f77b4", "original"), (&b, "#d62728", "distorted")] {
        if paths.is_empty() {
            continue;
        }
        writeln!(s, r#"<g id="{id}" fill="none" stroke="{colour}" stroke-width="{stroke}">"#).unwrap();
        for d in paths {
            writeln!(s, r#"<path d="{d}"/>"#).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    s.push_str("</svg>\n");
    s
}
