//! Planes and key points of an off-axis perspective camera.

use frustum_kit::extract::{dividing_planes, PlaneId};
use frustum_kit::projection::{look_at, perspective};
use frustum_kit::{extract_planes, key_points, AffineFrustum, Vec3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let view = look_at(Vec3::new(2.0, 1.5, 4.0), Vec3::ZERO, Vec3::new(0.0, 1.0, 0.0)).ok_or("degenerate view")?;
    let f = AffineFrustum::from_projection(view.mul(&perspective(-0.6, 1.0, -0.5, 0.5, 1.0, 20.0)))?;

    let planes = extract_planes(&f).normalized()?;
    for id in PlaneId::ALL {
        println!("{:>6}: {:?}", id.name(), planes.get(id).to_array());
    }
    let d = dividing_planes(&f);
    println!("dx {:?}\ndy {:?}\ndz {:?}", d.dx.to_array(), d.dy.to_array(), d.dz.to_array());

    let k = key_points(&f);
    for (i, c) in k.corners.iter().enumerate() {
        println!("C{}: {:?}", i + 1, c.dehomogenize().map(Vec3::to_array));
    }
    println!("camera: {:?}", k.cam.dehomogenize().map(Vec3::to_array));
    Ok(())
}
