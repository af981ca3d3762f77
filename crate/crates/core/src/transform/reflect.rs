//! Planar mirror reflection and oblique near-plane clipping.

use crate::extract::{key_points, AffineFrustum};
use crate::linalg::{HomPoint, Mat4, Plane, Vec3};

use super::TransformError;

const CLIP_TOL: f64 = 1e-12;

/// Reflection across `c` for row vectors. `c` is normalized first.
pub fn reflection_matrix(c: Plane) -> Result<Mat4, TransformError> {
    let c = c.normalized().map_err(|_| TransformError::ZeroNormal)?;
    let (x, y, z, w) = (c.a, c.b, c.c, c.d);
    Ok(Mat4::from_rows([
        [1.0 - 2.0 * x * x, -2.0 * x * y, -2.0 * x * z, 0.0],
        [-2.0 * y * x, 1.0 - 2.0 * y * y, -2.0 * y * z, 0.0],
        [-2.0 * z * x, -2.0 * z * y, 1.0 - 2.0 * z * z, 0.0],
        [-2.0 * w * x, -2.0 * w * y, -2.0 * w * z, 1.0],
    ]))
}

/// Mirrors the frustum: `P' = R·P`, `P'⁻¹ = P⁻¹·R`.
pub fn reflect(f: &AffineFrustum, c: Plane) -> Result<AffineFrustum, TransformError> {
    let r = reflection_matrix(c)?;
    Ok(AffineFrustum::from_pair(r.mul(f.proj()), f.inv_proj().mul(&r))?)
}

/// Which reflected far corner the clipped far plane passes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FarAnchor {
    /// The far corner closest to the mirror. Every far corner of the result
    /// then stays in front of the reflected camera, beyond the mirror.
    #[default]
    Nearest,
    /// The far corner farthest from the mirror, so no reflected far corner is
    /// cut off. Other far corners may cross behind the camera when the mirror
    /// is oblique to the view direction.
    Farthest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClippedReflection {
    pub frustum: AffineFrustum,
    /// Scale of the mirror plane placed in the near-plane column.
    pub k: f64,
    /// Point on the new far plane, one of the reflected far corners.
    pub far_point: HomPoint,
    /// Column `X` with `P'·X = k·c`.
    pub x: [f64; 4],
}

/// Signed side of the camera relative to `c`, using the view direction
/// when the camera is at infinity.
fn camera_side(f: &AffineFrustum, c: Plane) -> f64 {
    let k = key_points(f);
    let cam = k.cam;
    if !cam.is_at_infinity(1e-12) {
        return c.eval(cam) / cam.w;
    }
    let sum = |q: [HomPoint; 4]| q.iter().filter_map(|p| p.dehomogenize()).fold(Vec3::ZERO, |a, b| a + b);
    let toward_cam = sum(k.near_quad()) - sum(k.far_quad());
    let d = if cam.xyz().dot(toward_cam) >= 0.0 { cam.xyz() } else { -cam.xyz() };
    c.normal().dot(d)
}

/// [`reflect_and_clip_with`] anchored at the nearest far corner.
pub fn reflect_and_clip(f: &AffineFrustum, c: Plane) -> Result<ClippedReflection, TransformError> {
    reflect_and_clip_with(f, c, FarAnchor::Nearest)
}

/// Reflects across `c` and moves the near plane onto the mirror.
///
/// The reflected camera must lie on the negative side of `c`. Only the
/// near-plane column of `P'` changes, and the inverse is updated by row
/// operations on `P'⁻¹` instead of a fresh inversion.
pub fn reflect_and_clip_with(f: &AffineFrustum, c: Plane, anchor: FarAnchor) -> Result<ClippedReflection, TransformError> {
    let c = c.normalized().map_err(|_| TransformError::ZeroNormal)?;
    let mirrored = reflect(f, c)?;
    let side = camera_side(&mirrored, c);
    if !(side < 0.0) {
        return Err(TransformError::CameraInPositiveHalfspace { value: side });
    }
    let p = mirrored.proj();
    let pinv = mirrored.inv_proj();

    // far corners in the order (+,+), (-,+), (-,-), (+,-) so ties favour sgn(0) = +1
    let mut best: Option<(HomPoint, f64)> = None;
    for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
        let q = pinv.transform(HomPoint::new(sx, sy, 1.0, 1.0));
        if q.is_at_infinity(1e-12) {
            return Err(TransformError::DegenerateClip("far corner at infinity"));
        }
        let d = c.eval(q) / q.w;
        let better = match (best, anchor) {
            (None, _) => true,
            (Some((_, b)), FarAnchor::Nearest) => d < b,
            (Some((_, b)), FarAnchor::Farthest) => d > b,
        };
        if better {
            best = Some((q, d));
        }
    }
    let (q, beyond) = best.expect("four candidates");
    let cq = c.eval(q);
    if !(cq.abs() >= CLIP_TOL) || !(beyond > 0.0) {
        return Err(TransformError::DegenerateClip("mirror plane does not lie between the camera and the far anchor"));
    }
    let m3 = p.col_plane(3);
    let k = m3.eval(q) / cq;
    let kc = c * k;
    let proj = p.with_col(2, kc.to_array());

    let x = pinv.apply_column(kc.to_array());
    if !(x[2].abs() >= CLIP_TOL) {
        return Err(TransformError::DegenerateClip("near-plane column is singular"));
    }
    let [r0, r1, r2, r3] = [0, 1, 2, 3].map(|i| pinv.row_point(i));
    let inv_proj =
        Mat4::from_point_rows([r0 - r2 * (x[0] / x[2]), r1 - r2 * (x[1] / x[2]), r2 * (1.0 / x[2]), r3 - r2 * (x[3] / x[2])]);
    let frustum = AffineFrustum::from_pair(proj, inv_proj)?;
    Ok(ClippedReflection { frustum, k, far_point: q, x })
}
