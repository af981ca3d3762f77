//! Affine frusta stored as a projection matrix and its inverse, and the
//! geometry that can be read directly off that pair.
//!
//! Planes come from the *columns* `m0..m3` of the projection matrix and key
//! points from the *rows* `m0'..m3'` of its inverse:
//!
//! | plane  | combination | | point | combination        |
//! |--------|-------------|-|-------|--------------------|
//! | left   | `m0 + m3`   | | `C1`  | `m0' + m1' + m3'`  |
//! | right  | `m0 - m3`   | | `C5`  | `C1 + m2'`         |
//! | bottom | `m1 + m3`   | | `D`   | `0.5·m2' + m3'`    |
//! | top    | `m1 - m3`   | | `O`   | `m2'`              |
//! | near   | `m2`        | | `O1`  | `m1'`              |
//! | far    | `m2 - m3`   | | `O2`  | `m0'`              |

use thiserror::Error;

use crate::linalg::{HomPoint, LinalgError, Mat4, Plane, Vec3};

/// Maximum `‖M·M⁻¹ − I‖` accepted when pairing a matrix with an inverse.
pub const PAIR_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum FrustumError {
    #[error("projection matrix is not invertible: {0}")]
    Singular(#[from] LinalgError),
    #[error("matrix pair is inconsistent: |M·M⁻¹ - I| = {residual:e}")]
    InconsistentPair { residual: f64 },
    #[error("matrix has non-finite entries")]
    NonFinite,
}

/// A projection matrix together with its inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineFrustum {
    proj: Mat4,
    inv_proj: Mat4,
}

impl AffineFrustum {
    /// Pairs `proj` with a freshly computed inverse.
    pub fn from_projection(proj: Mat4) -> Result<Self, FrustumError> {
        if !proj.is_finite() {
            return Err(FrustumError::NonFinite);
        }
        let inv_proj = proj.inverse()?;
        Self::from_pair(proj, inv_proj)
    }

    /// Pairs `proj` with a caller-supplied inverse, checking consistency.
    pub fn from_pair(proj: Mat4, inv_proj: Mat4) -> Result<Self, FrustumError> {
        if !proj.is_finite() || !inv_proj.is_finite() {
            return Err(FrustumError::NonFinite);
        }
        let residual = proj.mul(&inv_proj).identity_residual();
        if !(residual < PAIR_TOLERANCE) {
            return Err(FrustumError::InconsistentPair { residual });
        }
        Ok(Self { proj, inv_proj })
    }

    pub fn proj(&self) -> &Mat4 {
        &self.proj
    }

    pub fn inv_proj(&self) -> &Mat4 {
        &self.inv_proj
    }

    /// `‖M·M⁻¹ − I‖` in the max norm.
    pub fn pair_residual(&self) -> f64 {
        self.proj.mul(&self.inv_proj).identity_residual()
    }

    /// The same frustum with `M` scaled by `s` and `M⁻¹` by `1/s`.
    pub fn scaled(&self, s: f64) -> Self {
        Self { proj: self.proj.scale(s), inv_proj: self.inv_proj.scale(1.0 / s) }
    }

    /// Applies a world-space change of coordinates given as a matrix and its inverse.
    ///
    /// The result projects `p` the way `self` projects `p·world`.
    pub fn pre_transform(&self, world: &Mat4, world_inv: &Mat4) -> Result<Self, FrustumError> {
        Self::from_pair(world.mul(&self.proj), self.inv_proj.mul(world_inv))
    }

    pub fn planes(&self) -> PlaneSet {
        extract_planes(self)
    }

    pub fn key_points(&self) -> KeyPoints {
        key_points(self)
    }

    pub fn dividing_planes(&self) -> DividingPlanes {
        dividing_planes(self)
    }

    /// Projects a world point to NDC. `None` if it lands on `w = 0`.
    pub fn project(&self, p: Vec3) -> Option<Vec3> {
        self.proj.transform(p.to_point()).dehomogenize()
    }

    /// Maps an NDC point back to world space (homogeneous).
    pub fn unproject(&self, ndc: HomPoint) -> HomPoint {
        self.inv_proj.transform(ndc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneId {
    Left,
    Right,
    Top,
    Bottom,
    Near,
    Far,
}

impl PlaneId {
    pub const ALL: [PlaneId; 6] =
        [PlaneId::Left, PlaneId::Right, PlaneId::Top, PlaneId::Bottom, PlaneId::Near, PlaneId::Far];

    pub fn name(self) -> &'static str {
        match self {
            PlaneId::Left => "left",
            PlaneId::Right => "right",
            PlaneId::Top => "top",
            PlaneId::Bottom => "bottom",
            PlaneId::Near => "near",
            PlaneId::Far => "far",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Signs exactly as produced by column combination.
    AsExtracted,
    /// Every normal points away from the frustum interior.
    OutwardNormals,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneSet {
    pub left: Plane,
    pub right: Plane,
    pub top: Plane,
    pub bottom: Plane,
    pub near: Plane,
    pub far: Plane,
    pub orientation: Orientation,
}

impl PlaneSet {
    pub fn get(&self, id: PlaneId) -> Plane {
        match id {
            PlaneId::Left => self.left,
            PlaneId::Right => self.right,
            PlaneId::Top => self.top,
            PlaneId::Bottom => self.bottom,
            PlaneId::Near => self.near,
            PlaneId::Far => self.far,
        }
    }

    fn map(&self, mut f: impl FnMut(PlaneId, Plane) -> Plane) -> Self {
        Self {
            left: f(PlaneId::Left, self.left),
            right: f(PlaneId::Right, self.right),
            top: f(PlaneId::Top, self.top),
            bottom: f(PlaneId::Bottom, self.bottom),
            near: f(PlaneId::Near, self.near),
            far: f(PlaneId::Far, self.far),
            orientation: self.orientation,
        }
    }

    /// In `left, right, top, bottom, near, far` order.
    pub fn to_array(&self) -> [Plane; 6] {
        PlaneId::ALL.map(|id| self.get(id))
    }

    /// Every plane scaled to a unit normal; orientation is kept.
    pub fn normalized(&self) -> Result<Self, LinalgError> {
        for p in self.to_array() {
            p.normalized()?;
        }
        Ok(self.map(|_, p| p.normalized().unwrap_or(p)))
    }

    /// Flips every plane that has `interior` on its positive side.
    pub fn oriented_outward(&self, interior: Vec3) -> Self {
        let mut out = self.map(|_, p| if p.eval_point(interior) > 0.0 { -p } else { p });
        out.orientation = Orientation::OutwardNormals;
        out
    }
}

/// The six frustum planes read off the projection matrix columns.
///
/// Planes are returned unnormalized; scale factors are absorbed.
pub fn extract_planes(f: &AffineFrustum) -> PlaneSet {
    let m = f.proj();
    let [m0, m1, m2, m3] = [0, 1, 2, 3].map(|j| m.col_plane(j));
    PlaneSet {
        left: m0 + m3,
        right: m0 - m3,
        top: m1 - m3,
        bottom: m1 + m3,
        near: m2,
        far: m2 - m3,
        orientation: Orientation::AsExtracted,
    }
}

/// Planes that halve the frustum along each clip axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DividingPlanes {
    pub dx: Plane,
    pub dy: Plane,
    pub dz: Plane,
}

pub fn dividing_planes(f: &AffineFrustum) -> DividingPlanes {
    let m = f.proj();
    DividingPlanes { dx: m.col_plane(0), dy: m.col_plane(1), dz: m.col_plane(2) - m.col_plane(3) * 0.5 }
}

/// NDC homogeneous coordinates of `C1..C8`: near quad, then far quad.
pub const NDC_CORNERS: [[f64; 4]; 8] = [
    [1.0, 1.0, 0.0, 1.0],
    [-1.0, 1.0, 0.0, 1.0],
    [-1.0, -1.0, 0.0, 1.0],
    [1.0, -1.0, 0.0, 1.0],
    [1.0, 1.0, 1.0, 1.0],
    [-1.0, 1.0, 1.0, 1.0],
    [-1.0, -1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, 1.0],
];

/// The three planes each corner lies on.
pub const CORNER_PLANES: [[PlaneId; 3]; 8] = {
    use PlaneId::*;
    [
        [Right, Top, Near],
        [Left, Top, Near],
        [Left, Bottom, Near],
        [Right, Bottom, Near],
        [Right, Top, Far],
        [Left, Top, Far],
        [Left, Bottom, Far],
        [Right, Bottom, Far],
    ]
};

/// Corner index pairs of the twelve frustum edges.
pub const EDGES: [(usize, usize); 12] =
    [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyPoints {
    /// `C1..C8`.
    pub corners: [HomPoint; 8],
    /// `D`, where the diagonals cross.
    pub center: HomPoint,
    /// `O`, the camera position.
    pub cam: HomPoint,
    /// `O1`, vanishing point of the clip `y` axis.
    pub vanish_y: HomPoint,
    /// `O2`, vanishing point of the clip `x` axis.
    pub vanish_x: HomPoint,
}

impl KeyPoints {
    pub fn near_quad(&self) -> [HomPoint; 4] {
        [self.corners[0], self.corners[1], self.corners[2], self.corners[3]]
    }

    pub fn far_quad(&self) -> [HomPoint; 4] {
        [self.corners[4], self.corners[5], self.corners[6], self.corners[7]]
    }

    /// All eight corners in Cartesian form, if none is at infinity.
    pub fn finite_corners(&self) -> Option<[Vec3; 8]> {
        let mut out = [Vec3::ZERO; 8];
        for (o, c) in out.iter_mut().zip(self.corners) {
            if c.is_at_infinity(1e-12) {
                return None;
            }
            *o = c.dehomogenize()?;
        }
        Some(out)
    }

    /// Average of the eight Cartesian corners.
    pub fn centroid(&self) -> Option<Vec3> {
        let c = self.finite_corners()?;
        Some(c.iter().fold(Vec3::ZERO, |a, &p| a + p) * 0.125)
    }
}

pub fn key_points(f: &AffineFrustum) -> KeyPoints {
    let inv = f.inv_proj();
    let [r0, r1, r2, r3] = [0, 1, 2, 3].map(|i| inv.row_point(i));
    let corners = NDC_CORNERS.map(|c| r0 * c[0] + r1 * c[1] + r2 * c[2] + r3 * c[3]);
    KeyPoints { corners, center: r2 * 0.5 + r3, cam: r2, vanish_y: r1, vanish_x: r0 }
}

/// Scale factors relating the geometric planes to matrix columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneCoefficients {
    pub kl: f64,
    pub kr: f64,
    pub kt: f64,
    pub kb: f64,
    pub kn: f64,
    pub kf: f64,
}

impl PlaneCoefficients {
    pub const UNIT: PlaneCoefficients = PlaneCoefficients { kl: 1.0, kr: 1.0, kt: 1.0, kb: 1.0, kn: 1.0, kf: 1.0 };
}

/// Residuals of the two constraints every affine plane set satisfies:
///
/// `Kn·N − ½Kl·L + ½Kr·R − Kf·F = 0` and `Kl·L − Kr·R − Kb·B + Kt·T = 0`.
pub fn affinity_residual(planes: &PlaneSet, k: &PlaneCoefficients) -> ([f64; 4], [f64; 4]) {
    let p = planes;
    let first = p.near * k.kn - p.left * (0.5 * k.kl) + p.right * (0.5 * k.kr) - p.far * k.kf;
    let second = p.left * k.kl - p.right * k.kr - p.bottom * k.kb + p.top * k.kt;
    (first.to_array(), second.to_array())
}
