//! A deterministic set of frusta for regression and property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extract::AffineFrustum;
use crate::linalg::{Mat4, Plane, Vec3};
use crate::projection::{look_at, orthographic, perspective, perspective_gl};
use crate::transform::{crop, reflect, reflect_and_clip, CropSpec};

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Symmetric,
    Asymmetric,
    SymmetricGl,
    Orthographic,
    Cropped,
    Reflected,
    Clipped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub name: String,
    pub kind: Kind,
    pub frustum: AffineFrustum,
}

fn posed(rng: &mut ChaCha8Rng, proj: Mat4) -> AffineFrustum {
    let f = AffineFrustum::from_projection(proj).expect("corpus projection is invertible");
    loop {
        let eye = Vec3::new(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
        let target = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if (eye - target).norm() < 1.0 {
            continue;
        }
        let Some(view) = look_at(eye, target, Vec3::new(0.0, 1.0, 0.0)) else { continue };
        let inv = view.inverse().expect("rigid transform");
        return f.pre_transform(&view, &inv).expect("rigid transform keeps the pair consistent");
    }
}

fn random_perspective(rng: &mut ChaCha8Rng, symmetric: bool) -> (f64, f64, f64, f64, f64, f64) {
    let n = rng.gen_range(0.1..2.0);
    let f = n * rng.gen_range(2.0..200.0);
    let (hw, hh) = (n * rng.gen_range(0.2..1.5), n * rng.gen_range(0.2..1.5));
    let (sx, sy) = if symmetric { (0.0, 0.0) } else { (hw * rng.gen_range(-0.9..0.9), hh * rng.gen_range(-0.9..0.9)) };
    (sx - hw, sx + hw, sy - hh, sy + hh, n, f)
}

fn random_crop(rng: &mut ChaCha8Rng) -> CropSpec {
    let (width, height) = (rng.gen_range(100.0..2000.0), rng.gen_range(100.0..2000.0));
    let block_width = width * rng.gen_range(0.05..1.0);
    let block_height = height * rng.gen_range(0.05..1.0);
    CropSpec {
        x_offset: rng.gen_range(0.0..=width - block_width),
        y_offset: rng.gen_range(0.0..=height - block_height),
        block_width,
        block_height,
        width,
        height,
    }
}

/// Mirror plane through a point between the camera and the frustum body,
/// facing the camera, so that the reflected camera is behind it.
fn random_mirror(rng: &mut ChaCha8Rng, f: &AffineFrustum) -> Plane {
    let k = f.key_points();
    let cam = k.cam.dehomogenize().unwrap_or(Vec3::ZERO);
    let center = k.centroid().expect("corpus frusta have finite corners");
    let toward_cam = (cam - center).normalized().unwrap_or(Vec3::new(0.0, 0.0, 1.0));
    let jitter = Vec3::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3));
    let n = (toward_cam + jitter).normalized().unwrap_or(toward_cam);
    let at = center + (cam - center) * rng.gen_range(0.1..0.6);
    Plane::from_normal_point(n, at)
}

/// Builds the corpus. Every kind contributes at least eight frusta.
pub fn corpus(seed: u64) -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let push = |out: &mut Vec<Entry>, kind: Kind, frustum: AffineFrustum| {
        let name = format!("{kind:?}-{}", out.iter().filter(|e: &&Entry| e.kind == kind).count()).to_lowercase();
        out.push(Entry { name, kind, frustum });
    };
    for i in 0..10 {
        let (l, r, b, t, n, f) = random_perspective(&mut rng, true);
        let m = perspective(l, r, b, t, n, f);
        let fr = if i == 0 { AffineFrustum::from_projection(m).unwrap() } else { posed(&mut rng, m) };
        push(&mut out, Kind::Symmetric, fr);
    }
    for _ in 0..10 {
        let (l, r, b, t, n, f) = random_perspective(&mut rng, false);
        let fr = posed(&mut rng, perspective(l, r, b, t, n, f));
        push(&mut out, Kind::Asymmetric, fr);
    }
    push(&mut out, Kind::SymmetricGl, AffineFrustum::from_projection(perspective_gl(-1.0, 1.0, -1.0, 1.0, 1.0, 10.0)).unwrap());
    for _ in 0..7 {
        let symmetric = rng.gen_bool(0.5);
        let (l, r, b, t, n, f) = random_perspective(&mut rng, symmetric);
        let fr = posed(&mut rng, perspective_gl(l, r, b, t, n, f));
        push(&mut out, Kind::SymmetricGl, fr);
    }
    for _ in 0..8 {
        let symmetric = rng.gen_bool(0.5);
        let (l, r, b, t, n, f) = random_perspective(&mut rng, symmetric);
        let fr = posed(&mut rng, orthographic(l, r, b, t, n, f));
        push(&mut out, Kind::Orthographic, fr);
    }
    let base: Vec<AffineFrustum> = out.iter().map(|e| e.frustum).collect();
    for _ in 0..8 {
        let src = &base[rng.gen_range(0..base.len())];
        let c = random_crop(&mut rng);
        push(&mut out, Kind::Cropped, crop(src, &c).expect("valid crop spec"));
    }
    let perspective_base: Vec<AffineFrustum> = out[..28].iter().map(|e| e.frustum).collect();
    for _ in 0..8 {
        let src = &base[rng.gen_range(0..base.len())];
        let c = random_mirror(&mut rng, src);
        push(&mut out, Kind::Reflected, reflect(src, c).expect("unit mirror"));
    }
    let mut clipped = 0;
    while clipped < 8 {
        let src = &perspective_base[rng.gen_range(0..perspective_base.len())];
        let c = random_mirror(&mut rng, src);
        if let Ok(r) = reflect_and_clip(src, c) {
            push(&mut out, Kind::Clipped, r.frustum);
            clipped += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_large_enough() {
        let a = corpus(DEFAULT_SEED);
        assert!(a.len() >= 50);
        assert_eq!(a, corpus(DEFAULT_SEED));
        for e in &a {
            assert!(e.frustum.pair_residual() < 1e-8, "{} {}", e.name, e.frustum.pair_residual());
        }
    }
}
