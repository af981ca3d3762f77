//! Clip mapping for six arbitrary planes.
//!
//! A point is mapped to `(d_l/(d_l+d_r), d_t/(d_t+d_b), d_n/(d_n+d_f))`,
//! where `d_i` are signed Euclidean distances to outward-facing planes.
//! Points inside the volume land in the open unit cube. The map is not
//! projective, so straight lines are generally not preserved.

use thiserror::Error;

use crate::extract::{extract_planes, key_points, AffineFrustum, Orientation, PlaneSet};
use crate::linalg::{LinalgError, Plane, Vec3};

/// Minimum magnitude of a distance sum before the mapping is undefined.
pub const DENOMINATOR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum NonAffineError {
    #[error("distance sum along {axis:?} vanishes ({value:e})")]
    SingularDenominator { axis: Axis, value: f64 },
    #[error("plane has a zero normal")]
    ZeroNormal,
    #[error("frustum has a corner at infinity")]
    InfiniteCorner,
    #[error("witness point is not strictly inside all six planes")]
    NotOutward,
}

impl From<LinalgError> for NonAffineError {
    fn from(_: LinalgError) -> Self {
        NonAffineError::ZeroNormal
    }
}

/// Six planes with unit, outward-facing normals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonAffineFrustum {
    planes: PlaneSet,
}

impl NonAffineFrustum {
    /// Normalizes `planes` and orients them away from `interior`.
    pub fn from_planes(planes: &PlaneSet, interior: Vec3) -> Result<Self, NonAffineError> {
        let planes = planes.normalized()?.oriented_outward(interior);
        if planes.to_array().iter().any(|p| !(p.eval_point(interior) < 0.0)) {
            return Err(NonAffineError::NotOutward);
        }
        Ok(Self { planes })
    }

    /// Uses the planes of an affine frustum, oriented by its corner centroid.
    pub fn from_affine(f: &AffineFrustum) -> Result<Self, NonAffineError> {
        let centroid = key_points(f).centroid().ok_or(NonAffineError::InfiniteCorner)?;
        Self::from_planes(&extract_planes(f), centroid)
    }

    /// Accepts planes that are already outward; only normalizes them.
    pub fn from_outward(planes: [Plane; 6]) -> Result<Self, NonAffineError> {
        let [left, right, top, bottom, near, far] = planes;
        let set = PlaneSet { left, right, top, bottom, near, far, orientation: Orientation::OutwardNormals };
        Ok(Self { planes: set.normalized()? })
    }

    pub fn planes(&self) -> &PlaneSet {
        &self.planes
    }

    pub fn map(&self, x: Vec3) -> Result<Vec3, NonAffineError> {
        nonaffine_map(self, x)
    }
}

pub fn nonaffine_map(nf: &NonAffineFrustum, x: Vec3) -> Result<Vec3, NonAffineError> {
    let p = &nf.planes;
    let ratio = |a: Plane, b: Plane, axis: Axis| {
        let (da, db) = (a.eval_point(x), b.eval_point(x));
        let sum = da + db;
        if !(sum.abs() > DENOMINATOR_TOL) {
            return Err(NonAffineError::SingularDenominator { axis, value: sum });
        }
        Ok(da / sum)
    };
    Ok(Vec3::new(
        ratio(p.left, p.right, Axis::X)?,
        ratio(p.top, p.bottom, Axis::Y)?,
        ratio(p.near, p.far, Axis::Z)?,
    ))
}

/// Remaps unit-cube output to `x, y ∈ [-1, 1]`, `z ∈ [0, 1]`.
pub fn from_unit_cube(v: Vec3) -> Vec3 {
    Vec3::new(2.0 * v.x - 1.0, 2.0 * v.y - 1.0, v.z)
}
