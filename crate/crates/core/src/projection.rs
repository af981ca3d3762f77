//! Standard camera and projection matrices in the row-vector convention.
//!
//! Clip space is `x, y ∈ [-1, 1]` and `z ∈ [0, 1]` after division by `w`,
//! except for [`perspective_gl`], which keeps the OpenGL `z ∈ [-1, 1]` range.
//! Cameras look down their local `-z` axis.

use crate::linalg::{Mat4, Vec3};

/// Off-axis perspective projection with depth mapped to `[0, 1]`.
///
/// The near rectangle `[l, r] × [b, t]` sits at view-space `z = -n`.
pub fn perspective(l: f64, r: f64, b: f64, t: f64, n: f64, f: f64) -> Mat4 {
    Mat4::from_rows([
        [2.0 * n / (r - l), 0.0, 0.0, 0.0],
        [0.0, 2.0 * n / (t - b), 0.0, 0.0],
        [(r + l) / (r - l), (t + b) / (t - b), -f / (f - n), -1.0],
        [0.0, 0.0, -f * n / (f - n), 0.0],
    ])
}

/// Closed-form inverse of [`perspective`].
pub fn perspective_inverse(l: f64, r: f64, b: f64, t: f64, n: f64, f: f64) -> Mat4 {
    let sx = 2.0 * n / (r - l);
    let sy = 2.0 * n / (t - b);
    let ox = (r + l) / (r - l);
    let oy = (t + b) / (t - b);
    let zz = -f / (f - n);
    let zw = -f * n / (f - n);
    Mat4::from_rows([
        [1.0 / sx, 0.0, 0.0, 0.0],
        [0.0, 1.0 / sy, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0 / zw],
        [ox / sx, oy / sy, -1.0, zz / zw],
    ])
}

/// The classic OpenGL `glFrustum` matrix, transposed for row vectors.
///
/// Depth maps to `[-1, 1]`, so its `z = 0` slice is not the near plane.
pub fn perspective_gl(l: f64, r: f64, b: f64, t: f64, n: f64, f: f64) -> Mat4 {
    Mat4::from_rows([
        [2.0 * n / (r - l), 0.0, 0.0, 0.0],
        [0.0, 2.0 * n / (t - b), 0.0, 0.0],
        [(r + l) / (r - l), (t + b) / (t - b), -(f + n) / (f - n), -1.0],
        [0.0, 0.0, -2.0 * f * n / (f - n), 0.0],
    ])
}

/// Orthographic projection with depth mapped to `[0, 1]`.
pub fn orthographic(l: f64, r: f64, b: f64, t: f64, n: f64, f: f64) -> Mat4 {
    Mat4::from_rows([
        [2.0 / (r - l), 0.0, 0.0, 0.0],
        [0.0, 2.0 / (t - b), 0.0, 0.0],
        [0.0, 0.0, -1.0 / (f - n), 0.0],
        [-(r + l) / (r - l), -(t + b) / (t - b), -n / (f - n), 1.0],
    ])
}

/// World-to-view matrix for a camera at `eye` looking at `target`.
///
/// Returns `None` when `up` is parallel to the viewing direction.
pub fn look_at(eye: Vec3, target: Vec3, up: Vec3) -> Option<Mat4> {
    let k = (eye - target).normalized()?;
    let i = up.cross(k).normalized()?;
    let j = k.cross(i);
    Some(from_frame(eye, i, j, k))
}

/// World-to-local matrix for an orthonormal frame `(i, j, k)` at `origin`.
pub fn from_frame(origin: Vec3, i: Vec3, j: Vec3, k: Vec3) -> Mat4 {
    Mat4::from_rows([
        [i.x, j.x, k.x, 0.0],
        [i.y, j.y, k.y, 0.0],
        [i.z, j.z, k.z, 0.0],
        [-origin.dot(i), -origin.dot(j), -origin.dot(k), 1.0],
    ])
}

/// Inverse of [`from_frame`]: local coordinates back to world.
pub fn from_frame_inverse(origin: Vec3, i: Vec3, j: Vec3, k: Vec3) -> Mat4 {
    Mat4::from_rows([
        [i.x, i.y, i.z, 0.0],
        [j.x, j.y, j.z, 0.0],
        [k.x, k.y, k.z, 0.0],
        [origin.x, origin.y, origin.z, 1.0],
    ])
}

pub fn translation(v: Vec3) -> Mat4 {
    Mat4::IDENTITY.with_row(3, [v.x, v.y, v.z, 1.0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::HomPoint;

    fn ndc(m: &Mat4, p: Vec3) -> Vec3 {
        m.transform(p.to_point()).dehomogenize().unwrap()
    }

    fn close(a: Vec3, b: Vec3) -> bool {
        (a - b).max_abs() < 1e-12
    }

    #[test]
    fn perspective_maps_near_and_far_rectangles() {
        let (l, r, b, t, n, f) = (-1.0, 2.0, -0.5, 1.5, 1.0, 10.0);
        let m = perspective(l, r, b, t, n, f);
        assert!(close(ndc(&m, Vec3::new(r, t, -n)), Vec3::new(1.0, 1.0, 0.0)));
        assert!(close(ndc(&m, Vec3::new(l, b, -n)), Vec3::new(-1.0, -1.0, 0.0)));
        let s = f / n;
        assert!(close(ndc(&m, Vec3::new(l * s, t * s, -f)), Vec3::new(-1.0, 1.0, 1.0)));
    }

    #[test]
    fn closed_form_inverse() {
        let args = (-1.0, 2.0, -0.5, 1.5, 1.0, 10.0);
        let m = perspective(args.0, args.1, args.2, args.3, args.4, args.5);
        let inv = perspective_inverse(args.0, args.1, args.2, args.3, args.4, args.5);
        assert!(m.mul(&inv).identity_residual() < 1e-14);
    }

    #[test]
    fn frame_inverse() {
        let k = Vec3::new(1.0, 2.0, 2.0) * (1.0 / 3.0);
        let i = Vec3::new(0.0, 1.0, -1.0).normalized().unwrap();
        let j = k.cross(i);
        let o = Vec3::new(4.0, -1.0, 2.5);
        assert!(from_frame(o, i, j, k).mul(&from_frame_inverse(o, i, j, k)).identity_residual() < 1e-14);
    }

    #[test]
    fn gl_variant_uses_symmetric_depth() {
        let m = perspective_gl(-1.0, 1.0, -1.0, 1.0, 1.0, 10.0);
        assert!(close(ndc(&m, Vec3::new(1.0, 1.0, -1.0)), Vec3::new(1.0, 1.0, -1.0)));
        assert!(close(ndc(&m, Vec3::new(-10.0, 10.0, -10.0)), Vec3::new(-1.0, 1.0, 1.0)));
    }

    #[test]
    fn orthographic_box() {
        let m = orthographic(-2.0, 2.0, -1.0, 1.0, 0.5, 4.0);
        assert!(close(ndc(&m, Vec3::new(2.0, 1.0, -0.5)), Vec3::new(1.0, 1.0, 0.0)));
        assert!(close(ndc(&m, Vec3::new(-2.0, -1.0, -4.0)), Vec3::new(-1.0, -1.0, 1.0)));
    }

    #[test]
    fn look_at_moves_eye_to_origin() {
        let eye = Vec3::new(3.0, 2.0, 5.0);
        let v = look_at(eye, Vec3::ZERO, Vec3::new(0.0, 1.0, 0.0)).unwrap();
        let e = v.transform(eye.to_point());
        assert!(close(e.xyz(), Vec3::ZERO));
        let fwd = v.transform(HomPoint::new(-3.0, -2.0, -5.0, 0.0)).xyz();
        assert!(close(fwd.normalized().unwrap(), Vec3::new(0.0, 0.0, -1.0)));
        assert!(look_at(eye, Vec3::ZERO, eye).is_none());
    }
}
