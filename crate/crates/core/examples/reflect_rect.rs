//! The frustum seen through a rectangular mirror on a wall.

use frustum_kit::transform::{reflect_rect, ReflectiveRect};
use frustum_kit::Vec3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 2 x 1.5 mirror on the wall z = 0, observer standing off to one side
    let rect = ReflectiveRect {
        p1: Vec3::new(-1.0, 0.5, 0.0),
        a1: Vec3::new(2.0, 0.0, 0.0),
        a2: Vec3::new(0.0, 1.5, 0.0),
        observer: Vec3::new(1.5, 1.2, 3.0),
        far_dist: 50.0,
    };
    let f = reflect_rect(&rect)?;
    println!("mirrored observer {:?}", rect.reflected_observer()?.to_array());
    for c in rect.corners() {
        println!("corner {:?} -> ndc {:?}", c.to_array(), f.project(c).map(Vec3::to_array));
    }
    Ok(())
}
