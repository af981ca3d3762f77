//! Fitting a frustum origin to four noisy target planes.

use frustum_kit::build::{approximate_origin, DescentParams, OriginProblem};
use frustum_kit::{Plane, Vec3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let anchors = [Vec3::new(1.0, 1.0, -1.0), Vec3::new(-1.0, 1.0, -1.0), Vec3::new(-1.0, -1.0, -1.0), Vec3::new(1.0, -1.0, -1.0)];
    let truth = Vec3::new(0.3, -0.2, 0.8);
    // side planes through the true origin, each tilted slightly
    let tilt = [Vec3::new(0.02, 0.0, 0.0), Vec3::new(0.0, -0.03, 0.01), Vec3::new(0.01, 0.01, 0.0), Vec3::new(0.0, 0.0, -0.02)];
    let targets: [Plane; 4] = std::array::from_fn(|i| {
        let p = Plane::through_points(truth, anchors[i], anchors[(i + 1) % 4]);
        Plane::from_normal_point(p.normal() + tilt[i], anchors[i])
    });
    let est = approximate_origin(&OriginProblem { targets, anchors, descent: DescentParams::default() })?;
    println!("origin {:?}, error {:.2e}", est.origin.to_array(), (est.origin - truth).norm());
    println!("objective {:.9} -> {:.9} in {} iterations, converged {}", est.initial_objective, est.objective, est.iterations, est.converged);
    Ok(())
}
