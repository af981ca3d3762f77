//! Frustum validity and the plane-distance clip mapping.
//!
//! A frustum is valid when its near face is a convex quad and the near
//! plane separates the frustum origin from the far corners.

mod nonaffine;

pub use nonaffine::{from_unit_cube, nonaffine_map, Axis, NonAffineError, NonAffineFrustum};

use crate::extract::{extract_planes, key_points, AffineFrustum, KeyPoints};
use crate::linalg::{HomPoint, Plane, Vec3};

/// Relative tolerance on edge cross products in the convexity test.
pub const CONVEXITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub near_convex: bool,
    pub separates: bool,
    /// The origin is a point at infinity (parallel projection).
    pub origin_at_infinity: bool,
    pub details: Vec<String>,
}

/// True when the four points, taken in order, form a strictly convex quad.
///
/// Collinear consecutive edges count as non-convex.
pub fn is_convex_quad(q: &[Vec3; 4]) -> bool {
    let edges: [Vec3; 4] = std::array::from_fn(|i| q[(i + 1) % 4] - q[i]);
    let scale = edges.iter().map(|e| e.norm()).fold(0.0, f64::max);
    if !(scale > 0.0) {
        return false;
    }
    let turns: [Vec3; 4] = std::array::from_fn(|i| edges[i].cross(edges[(i + 1) % 4]));
    let Some(normal) = turns.iter().fold(Vec3::ZERO, |a, &t| a + t).normalized() else {
        return false;
    };
    turns.iter().all(|t| t.dot(normal) > CONVEXITY_TOL * scale * scale)
}

fn side(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// Which side of `near` the homogeneous far corner lies on, as seen from
/// inside the frustum. Corners at infinity are resolved by the sign `w`
/// takes when approaching them from the frustum body.
fn far_corner_side(near: Plane, c: HomPoint, cam: HomPoint, cam_finite: bool) -> i8 {
    if !c.is_at_infinity(1e-12) {
        return side(near.eval_point(c.xyz() * (1.0 / c.w)));
    }
    let approach = if cam_finite { -side(cam.w) } else { 1 };
    side(near.eval(c)) * approach
}

pub fn validate(f: &AffineFrustum) -> ValidationReport {
    validate_key_points(&key_points(f), extract_planes(f).near)
}

/// Validity test on precomputed key points and near plane.
pub fn validate_key_points(k: &KeyPoints, near: Plane) -> ValidationReport {
    let mut details = Vec::new();

    let quad: Option<Vec<Vec3>> = k
        .near_quad()
        .iter()
        .map(|c| (!c.is_at_infinity(1e-12)).then(|| c.xyz() * (1.0 / c.w)))
        .collect();
    let near_convex = match quad {
        Some(q) => {
            let ok = is_convex_quad(&[q[0], q[1], q[2], q[3]]);
            if !ok {
                details.push("near quad is not convex".to_string());
            }
            ok
        }
        None => {
            details.push("near quad has a corner at infinity".to_string());
            false
        }
    };

    let near = match near.normalized() {
        Ok(n) => n,
        Err(_) => {
            details.push("near plane has a zero normal".to_string());
            return ValidationReport { valid: false, near_convex, separates: false, origin_at_infinity: false, details };
        }
    };
    let origin_at_infinity = k.cam.is_at_infinity(1e-12);
    let far_sides = k.far_quad().map(|c| far_corner_side(near, c, k.cam, !origin_at_infinity));
    let origin_side = if origin_at_infinity {
        details.push("origin at infinity: separation tested along the view direction".to_string());
        // a parallel projection's origin lies behind the near plane on
        // whichever side the view direction leaves from
        -far_sides[0]
    } else {
        side(near.eval_point(k.cam.xyz() * (1.0 / k.cam.w)))
    };
    let separates = origin_side != 0 && far_sides.iter().all(|&s| s == -origin_side);
    if !separates {
        details.push(format!(
            "near plane does not separate origin (side {origin_side}) from far corners (sides {far_sides:?})"
        ));
    }
    ValidationReport { valid: near_convex && separates, near_convex, separates, origin_at_infinity, details }
}
