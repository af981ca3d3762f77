//! Mirror camera for a floor reflection, clipped at the mirror plane.

use frustum_kit::projection::{look_at, perspective};
use frustum_kit::transform::{reflect, reflect_and_clip};
use frustum_kit::{extract_planes, validate, AffineFrustum, Plane, Vec3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let view = look_at(Vec3::new(0.0, 3.0, 6.0), Vec3::new(0.0, 0.0, 2.0), Vec3::new(0.0, 1.0, 0.0)).ok_or("degenerate view")?;
    let f = AffineFrustum::from_projection(view.mul(&perspective(-0.4, 0.4, -0.25, 0.25, 0.5, 40.0)))?;
    // floor y = 0, normal toward the camera
    let floor = Plane::new(0.0, 1.0, 0.0, 0.0);

    let mirrored = reflect(&f, floor)?;
    let back = reflect(&mirrored, floor)?;
    println!("reflect twice, max deviation {:.1e}", back.proj().sub(f.proj()).max_abs());

    let clipped = reflect_and_clip(&f, floor)?;
    let near = extract_planes(&clipped.frustum).near.normalized()?;
    println!("clip scale k = {:.6}", clipped.k);
    println!("new near plane {:?}", near.to_array());
    println!("valid: {}", validate(&clipped.frustum).valid);
    Ok(())
}
