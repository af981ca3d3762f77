//! Power-law lens warp of a near-plane grid and one frustum per warped tile.

use crate::build::{build_frustum, BuildOutcome, FarStrategy, SidePlanes};
use crate::linalg::{Plane, Vec3};

use super::TransformError;

/// Far plane depth as a multiple of the origin-to-near distance.
pub const DEFAULT_FAR_FACTOR: f64 = 10.0;

const ON_PLANE_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LensSpec {
    /// Lens center, on the refraction plane.
    pub center: Vec3,
    pub radius: f64,
    pub power: f64,
    pub plane: Plane,
}

impl LensSpec {
    pub fn check(&self) -> Result<(), TransformError> {
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(TransformError::InvalidLens(format!("radius {} must be positive", self.radius)));
        }
        if !(self.power > 0.0 && self.power.is_finite()) {
            return Err(TransformError::InvalidLens(format!("power {} must be positive", self.power)));
        }
        let d = self
            .plane
            .metric_distance(self.center)
            .map_err(|_| TransformError::InvalidLens("refraction plane has a zero normal".into()))?;
        if !(d.abs() <= 1e-9) {
            return Err(TransformError::InvalidLens(format!("center is {d:e} off the refraction plane")));
        }
        Ok(())
    }

    /// `C + R·rᵖ·v/|v|` with `v = x − C` and `r = |v|/R`. The center is fixed.
    pub fn distort_point(&self, x: Vec3) -> Vec3 {
        let v = x - self.center;
        let len = v.norm();
        if len == 0.0 {
            return self.center;
        }
        let r = len / self.radius;
        self.center + v * (self.radius * r.powf(self.power) / len)
    }
}

pub fn lens_distort(points: &[Vec3], spec: &LensSpec) -> Result<Vec<Vec3>, TransformError> {
    spec.check()?;
    let unit = spec.plane.normalized().map_err(|_| TransformError::ZeroNormal)?;
    points
        .iter()
        .enumerate()
        .map(|(index, &p)| {
            let distance = unit.eval_point(p);
            if !(distance.abs() <= ON_PLANE_TOL) {
                return Err(TransformError::PointOffPlane { index, distance });
            }
            Ok(spec.distort_point(p))
        })
        .collect()
}

/// A lattice of `(rows + 1) × (cols + 1)` tile corners, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct TileGrid {
    pub rows: usize,
    pub cols: usize,
    pub points: Vec<Vec3>,
}

impl TileGrid {
    /// Evenly spaced lattice from `corner` spanning `across` (columns) and `down` (rows).
    pub fn uniform(corner: Vec3, across: Vec3, down: Vec3, rows: usize, cols: usize) -> Self {
        let mut points = Vec::with_capacity((rows + 1) * (cols + 1));
        for r in 0..=rows {
            for c in 0..=cols {
                let u = if cols == 0 { 0.0 } else { c as f64 / cols as f64 };
                let v = if rows == 0 { 0.0 } else { r as f64 / rows as f64 };
                points.push(corner + across * u + down * v);
            }
        }
        Self { rows, cols, points }
    }

    pub fn point(&self, r: usize, c: usize) -> Vec3 {
        self.points[r * (self.cols + 1) + c]
    }

    /// Tile corners in near-quad order `C1..C4`.
    pub fn tile(&self, r: usize, c: usize) -> [Vec3; 4] {
        [self.point(r + 1, c + 1), self.point(r + 1, c), self.point(r, c), self.point(r, c + 1)]
    }

    pub fn tiles(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| (0..self.cols).map(move |c| (r, c)))
    }

    pub fn with_points(&self, points: Vec<Vec3>) -> Self {
        Self { rows: self.rows, cols: self.cols, points }
    }

    pub fn distorted(&self, spec: &LensSpec) -> Result<Self, TransformError> {
        Ok(self.with_points(lens_distort(&self.points, spec)?))
    }
}

/// Area of a planar quad by the vector shoelace formula.
pub fn quad_area(q: &[Vec3; 4]) -> f64 {
    let twice = (0..4).fold(Vec3::ZERO, |acc, i| acc + q[i].cross(q[(i + 1) % 4]));
    0.5 * twice.norm()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TileFrustum {
    pub row: usize,
    pub col: usize,
    /// Distorted near-quad corners `C1..C4`.
    pub near_quad: [Vec3; 4],
    pub result: Result<BuildOutcome, TransformError>,
}

/// One frustum per distorted tile, in row-major order.
///
/// Side planes pass through `origin` and consecutive warped corners, the
/// near plane is the refraction plane, and the far plane passes through
/// the point `far_factor` times as far from `origin` as the tile center.
/// Failures are reported per tile.
pub fn lens_tile_frustums(
    grid: &TileGrid,
    spec: &LensSpec,
    origin: Vec3,
    far_factor: f64,
) -> Result<Vec<TileFrustum>, TransformError> {
    let warped = grid.distorted(spec)?;
    let mut near = spec.plane.normalized().map_err(|_| TransformError::ZeroNormal)?;
    let h = near.eval_point(origin);
    if !(h.abs() > 1e-12) {
        return Err(TransformError::OriginOnPlane);
    }
    // origin behind the near plane
    if h > 0.0 {
        near = -near;
    }
    Ok(warped
        .tiles()
        .map(|(row, col)| {
            let q = warped.tile(row, col);
            TileFrustum { row, col, near_quad: q, result: tile_frustum(&q, near, origin, far_factor) }
        })
        .collect())
}

fn tile_frustum(q: &[Vec3; 4], near: Plane, origin: Vec3, far_factor: f64) -> Result<BuildOutcome, TransformError> {
    let center = (q[0] + q[1] + q[2] + q[3]) * 0.25;
    let inward = |p: Plane| if p.eval_point(center) < 0.0 { -p } else { p };
    let sides = SidePlanes {
        right: inward(Plane::through_points(origin, q[0], q[3])),
        top: inward(Plane::through_points(origin, q[0], q[1])),
        left: inward(Plane::through_points(origin, q[1], q[2])),
        bottom: inward(Plane::through_points(origin, q[2], q[3])),
    };
    let far_point = origin + (center - origin) * far_factor;
    Ok(build_frustum(&sides, near, FarStrategy::ThroughPoint(far_point.to_point()))?)
}
