use crate::extract::AffineFrustum;
use crate::linalg::{Plane, Vec3};
use crate::projection::{from_frame, from_frame_inverse, perspective, perspective_inverse};

use super::{reflection_matrix, TransformError};

/// A rectangular mirror seen by an observer.
///
/// Corners are `P1`, `P2 = P1 + a1`, `P3 = P2 + a2`, `P4 = P1 + a2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectiveRect {
    pub p1: Vec3,
    pub a1: Vec3,
    pub a2: Vec3,
    pub observer: Vec3,
    pub far_dist: f64,
}

impl ReflectiveRect {
    pub fn corners(&self) -> [Vec3; 4] {
        let p2 = self.p1 + self.a1;
        [self.p1, p2, p2 + self.a2, self.p1 + self.a2]
    }

    pub fn center(&self) -> Vec3 {
        self.p1 + (self.a1 + self.a2) * 0.5
    }

    /// The mirror plane with unit normal along `a1 × a2`.
    pub fn plane(&self) -> Result<Plane, TransformError> {
        let cross = self.a1.cross(self.a2);
        let scale = self.a1.norm() * self.a2.norm();
        if !(cross.norm() > 1e-12 * scale) {
            return Err(TransformError::DegenerateRect);
        }
        Ok(Plane::from_normal_point(cross * (1.0 / cross.norm()), self.p1))
    }

    /// The observer mirrored across the rectangle's plane.
    pub fn reflected_observer(&self) -> Result<Vec3, TransformError> {
        let r = reflection_matrix(self.plane()?)?;
        Ok(r.transform(self.observer.to_point()).xyz())
    }
}

/// Frustum of the mirror image seen through the rectangle.
///
/// The camera sits at the reflected observer and looks along the mirror
/// normal, with `y` along `a1`; the rectangle becomes its near face. Depth
/// uses the `[0, 1]` convention, so the corners land on NDC `(±1, ±1, 0)`.
pub fn reflect_rect(r: &ReflectiveRect) -> Result<AffineFrustum, TransformError> {
    let plane = r.plane()?;
    if !(r.a1.dot(r.a2).abs() <= 1e-9 * r.a1.norm() * r.a2.norm()) {
        return Err(TransformError::NotRectangular);
    }
    let size = r.a1.norm().max(r.a2.norm());
    let side = plane.eval_point(r.observer);
    if !(side.abs() > 1e-12 * size.max(r.observer.max_abs())) {
        return Err(TransformError::ObserverOnPlane);
    }
    let origin = r.reflected_observer()?;
    // the mirrored observer is on the opposite side; its view axis k points back at it
    let k = plane.normal() * -side.signum();
    let j = r.a1 * (1.0 / r.a1.norm());
    let i = j.cross(k);

    let local = r.corners().map(|c| {
        let d = c - origin;
        Vec3::new(d.dot(i), d.dot(j), d.dot(k))
    });
    let n = -local[0].z;
    if !(r.far_dist > n) {
        return Err(TransformError::FarNotBeyondNear { near: n, far: r.far_dist });
    }
    let fold = |sel: fn(&Vec3) -> f64, pick: fn(f64, f64) -> f64| local.iter().map(sel).reduce(pick).unwrap();
    let (l, rr) = (fold(|v| v.x, f64::min), fold(|v| v.x, f64::max));
    let (b, t) = (fold(|v| v.y, f64::min), fold(|v| v.y, f64::max));
    let f = r.far_dist;

    let proj = from_frame(origin, i, j, k).mul(&perspective(l, rr, b, t, n, f));
    let inv = perspective_inverse(l, rr, b, t, n, f).mul(&from_frame_inverse(origin, i, j, k));
    Ok(AffineFrustum::from_pair(proj, inv)?)
}
